#pragma once
#include <stdexcept>
#include <string>

namespace torus {

enum class ErrorKind {
  NotAUnit,
  DimensionMismatch,
  BadParameters,
  SingularForm,
  SearchExhausted,
  NotWellDefined,
  WindowOverflow,
  WrongParity,
  OutOfRange,
  UnknownGroup,
  ParseError,
  UsageError,
};

const char *kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
  Error(ErrorKind k, const std::string &msg)
      : std::runtime_error(std::string(kind_name(k)) + ": " + msg), kind_(k) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace torus
