#pragma once
#include <vector>

#include "torus/laurent.hpp"
#include "torus/matrix.hpp"

namespace torus {

using PolyVec = std::vector<LaurentPoly>;

struct QuotientClass {
  LaurentPoly representative;
  FormParameter parameter;

  LaurentPoly canonical() const { return parameter.reduce(representative); }
  bool is_zero() const { return parameter.contains(representative); }
  friend bool operator==(const QuotientClass &a, const QuotientClass &b) {
    return a.parameter.contains(a.representative - b.representative);
  }
  friend bool operator!=(const QuotientClass &a, const QuotientClass &b) { return !(a == b); }
  friend QuotientClass operator+(const QuotientClass &a, const QuotientClass &b) {
    return {a.representative + b.representative, a.parameter};
  }
};

struct QuadraticModule {
  int n = 0;
  std::size_t rank = 0;
  PolyMatrix gram;
  std::vector<LaurentPoly> q_values;
  FormParameter parameter;

  int eps() const { return sign_of_n(n); }
  QuotientClass cls(const LaurentPoly &p) const { return {p, parameter}; }
  // gram is eps-hermitian and lambda(e,e) = q(e) + eps*bar(q(e)) mod the parameter
  bool well_formed() const;
  bool over_integers() const;
};

LaurentPoly eval_lambda(const QuadraticModule &Q, const PolyVec &x, const PolyVec &y);
QuotientClass eval_q(const QuadraticModule &Q, const PolyVec &x);
bool is_isometry(const QuadraticModule &Q, const PolyMatrix &M);

PolyVec basis_vector(std::size_t rank, std::size_t i);
// M acts on coordinate columns: column j of M is the image of basis vector j.
PolyVec apply(const PolyMatrix &M, const PolyVec &x);

enum class FormName { E8, KERVAIRE_K, HYPERBOLIC, ORTHO_SUM, NEGATE, BASE_CHANGE_TO_Z };

QuadraticModule hyperbolic_form(std::size_t g, int n, ParamVariant v = ParamVariant::MIN);
QuadraticModule e8_form(int n);
QuadraticModule kervaire_form(int n);
QuadraticModule ortho_sum(const QuadraticModule &a, const QuadraticModule &b);
QuadraticModule negate(const QuadraticModule &a);
QuadraticModule base_change_to_z(const QuadraticModule &a);
QuadraticModule zero_form(int n);

struct ShanesonImage {
  QuadraticModule Q;
  PolyMatrix U;
};
ShanesonImage shaneson_image(const QuadraticModule &M);

// Columns of P are the new basis a_1..a_g, b_1..b_g in the old coordinates.
IntMatrix hyperbolize(const QuadraticModule &Q, long search_bound);
bool certify_hyperbolic(const QuadraticModule &Q, const IntMatrix &P);

} // namespace torus
