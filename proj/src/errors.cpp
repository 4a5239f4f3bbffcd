#include "torus/errors.hpp"

namespace torus {

const char *kind_name(ErrorKind k) {
  switch (k) {
  case ErrorKind::NotAUnit: return "NotAUnit";
  case ErrorKind::DimensionMismatch: return "DimensionMismatch";
  case ErrorKind::BadParameters: return "BadParameters";
  case ErrorKind::SingularForm: return "SingularForm";
  case ErrorKind::SearchExhausted: return "SearchExhausted";
  case ErrorKind::NotWellDefined: return "NotWellDefined";
  case ErrorKind::WindowOverflow: return "WindowOverflow";
  case ErrorKind::WrongParity: return "WrongParity";
  case ErrorKind::OutOfRange: return "OutOfRange";
  case ErrorKind::UnknownGroup: return "UnknownGroup";
  case ErrorKind::ParseError: return "ParseError";
  case ErrorKind::UsageError: return "UsageError";
  }
  return "Error";
}

} // namespace torus
