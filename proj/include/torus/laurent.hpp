#pragma once
#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace torus {

using Integer = mpz_class;

// Sparse Laurent polynomial in t with exact integer coefficients.
// Terms are kept sorted by increasing exponent with no zero coefficients.
class LaurentPoly {
public:
  using Term = std::pair<long, Integer>;

  LaurentPoly() = default;
  static LaurentPoly constant(const Integer &c);
  static LaurentPoly monomial(const Integer &c, long e);
  static LaurentPoly t(long e = 1) { return monomial(1, e); }
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coeff(long e) const;
  long min_exp() const;
  long max_exp() const;
  bool is_constant() const;
  bool is_one() const;

  LaurentPoly bar() const;
  LaurentPoly shifted(long e) const;
  Integer augmentation() const;
  Integer max_abs_coeff() const;

  LaurentPoly &operator+=(const LaurentPoly &o);
  LaurentPoly &operator-=(const LaurentPoly &o);
  LaurentPoly &operator*=(const LaurentPoly &o);
  LaurentPoly &operator*=(const Integer &c);
  LaurentPoly operator-() const;
  void add_term(const Integer &c, long e);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);
  friend LaurentPoly operator*(LaurentPoly a, const Integer &c) { return a *= c; }
  friend LaurentPoly operator*(const Integer &c, LaurentPoly a) { return a *= c; }
  friend bool operator==(const LaurentPoly &a, const LaurentPoly &b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly &a, const LaurentPoly &b) { return !(a == b); }
  friend bool operator<(const LaurentPoly &a, const LaurentPoly &b) { return a.terms_ < b.terms_; }

  // "c0*t^e0 + c1*t^e1 + ..." with increasing exponents; zero is "0".
  std::string to_string() const;
  // Accepts the canonical form and looser input such as "2*t - 1 + t^-3".
  static LaurentPoly parse(const std::string &s);

private:
  std::vector<Term> terms_;
};

// Exact quotient a/b in Z[t,t^-1]; throws NotWellDefined when b does not divide a.
LaurentPoly exact_div(const LaurentPoly &a, const LaurentPoly &b);

struct Unit {
  int sign;
  long exponent;
};
Unit unit_decompose(const LaurentPoly &p);
bool is_unit(const LaurentPoly &p);

enum class ParamVariant { MIN, FULL, MAX };

struct FormParameter {
  int eps = 1;
  ParamVariant variant = ParamVariant::MIN;
  bool n_is_3_or_7 = false;

  static FormParameter for_n(int n, ParamVariant v = ParamVariant::MIN);
  bool contains(const LaurentPoly &p) const;
  // Canonical representative of p modulo the parameter.
  LaurentPoly reduce(const LaurentPoly &p) const;
  bool constants_absorbed() const;
};

// a - eps*bar(a)
LaurentPoly min_element(const LaurentPoly &a, int eps);
// Inverse of min_element on MIN: returns some a with a - eps*bar(a) = p.
LaurentPoly min_preimage(const LaurentPoly &p, int eps);

inline int sign_of_n(int n) { return (n % 2 == 0) ? 1 : -1; }

} // namespace torus
