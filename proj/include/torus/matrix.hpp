#pragma once
#include <cstddef>
#include <vector>

#include "torus/errors.hpp"
#include "torus/laurent.hpp"

namespace torus {

// Dense row-major matrix.
template <class T> class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : r_(r), c_(c), a_(r * c) {}
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one();
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  T &operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const T &operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  friend Matrix operator*(const Matrix &x, const Matrix &y) {
    if (x.c_ != y.r_) throw Error(ErrorKind::DimensionMismatch, "matrix product");
    Matrix z(x.r_, y.c_);
    for (std::size_t i = 0; i < x.r_; ++i)
      for (std::size_t k = 0; k < x.c_; ++k) {
        const T &v = x(i, k);
        if (is_zero(v)) continue;
        for (std::size_t j = 0; j < y.c_; ++j)
          if (!is_zero(y(k, j))) z(i, j) += v * y(k, j);
      }
    return z;
  }
  friend Matrix operator+(Matrix x, const Matrix &y) {
    check_same(x, y);
    for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] += y.a_[i];
    return x;
  }
  friend Matrix operator-(Matrix x, const Matrix &y) {
    check_same(x, y);
    for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] -= y.a_[i];
    return x;
  }
  friend bool operator==(const Matrix &x, const Matrix &y) {
    return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_;
  }
  friend bool operator!=(const Matrix &x, const Matrix &y) { return !(x == y); }

  Matrix transpose() const {
    Matrix m(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }
  bool is_zero_matrix() const {
    for (auto &v : a_)
      if (!is_zero(v)) return false;
    return true;
  }
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix m(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
  }
  void set_block(std::size_t r0, std::size_t c0, const Matrix &m) {
    for (std::size_t i = 0; i < m.r_; ++i)
      for (std::size_t j = 0; j < m.c_; ++j) (*this)(r0 + i, c0 + j) = m(i, j);
  }
  std::vector<T> column(std::size_t j) const {
    std::vector<T> v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
  }

private:
  static T one();
  static bool is_zero(const T &v);
  static void check_same(const Matrix &x, const Matrix &y) {
    if (x.r_ != y.r_ || x.c_ != y.c_) throw Error(ErrorKind::DimensionMismatch, "matrix shapes differ");
  }
  std::size_t r_ = 0, c_ = 0;
  std::vector<T> a_;
};

template <> inline Integer Matrix<Integer>::one() { return 1; }
template <> inline bool Matrix<Integer>::is_zero(const Integer &v) { return v == 0; }
template <> inline LaurentPoly Matrix<LaurentPoly>::one() { return LaurentPoly::constant(1); }
template <> inline bool Matrix<LaurentPoly>::is_zero(const LaurentPoly &v) { return v.is_zero(); }

using IntMatrix = Matrix<Integer>;
using PolyMatrix = Matrix<LaurentPoly>;

// Entrywise bar, transposed.
PolyMatrix dagger(const PolyMatrix &m);
PolyMatrix bar(const PolyMatrix &m);
PolyMatrix scaled(const PolyMatrix &m, const LaurentPoly &s);
PolyMatrix to_poly(const IntMatrix &m);
// Substitute t = 1.
IntMatrix augment(const PolyMatrix &m);

// Fraction-free elimination; exact over Z and over Z[t,t^-1].
Integer det(const IntMatrix &m);
LaurentPoly det(const PolyMatrix &m);

} // namespace torus
