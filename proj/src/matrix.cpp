#include "torus/matrix.hpp"

namespace torus {

PolyMatrix dagger(const PolyMatrix &m) {
  PolyMatrix d(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d(j, i) = m(i, j).bar();
  return d;
}

PolyMatrix bar(const PolyMatrix &m) {
  PolyMatrix d(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d(i, j) = m(i, j).bar();
  return d;
}

PolyMatrix scaled(const PolyMatrix &m, const LaurentPoly &s) {
  PolyMatrix d(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d(i, j) = m(i, j) * s;
  return d;
}

PolyMatrix to_poly(const IntMatrix &m) {
  PolyMatrix d(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d(i, j) = LaurentPoly::constant(m(i, j));
  return d;
}

IntMatrix augment(const PolyMatrix &m) {
  IntMatrix d(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d(i, j) = m(i, j).augmentation();
  return d;
}

namespace {

bool zero(const Integer &v) { return v == 0; }
bool zero(const LaurentPoly &v) { return v.is_zero(); }
Integer divide(const Integer &a, const Integer &b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
LaurentPoly divide(const LaurentPoly &a, const LaurentPoly &b) { return exact_div(a, b); }

template <class T> T bareiss(Matrix<T> a, T one) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  std::size_t n = a.rows();
  if (n == 0) return one;
  T prev = one;
  T sign = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (zero(a(k, k))) {
      std::size_t p = k + 1;
      while (p < n && zero(a(p, k))) ++p;
      if (p == n) return T{};
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        a(i, j) = divide(v, prev);
      }
      a(i, k) = T{};
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

} // namespace

Integer det(const IntMatrix &m) { return bareiss<Integer>(m, Integer(1)); }
LaurentPoly det(const PolyMatrix &m) { return bareiss<LaurentPoly>(m, LaurentPoly::constant(1)); }

} // namespace torus
