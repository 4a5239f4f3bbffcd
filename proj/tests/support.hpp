#pragma once
#include <random>

#include "torus/laurent.hpp"
#include "torus/matrix.hpp"
#include "torus/quadratic.hpp"

namespace testing {

using namespace torus;

inline long uniform(std::mt19937_64 &rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline LaurentPoly random_poly(std::mt19937_64 &rng, long max_exp, long max_coeff, int max_terms) {
  LaurentPoly p;
  int n = static_cast<int>(uniform(rng, 0, max_terms));
  for (int i = 0; i < n; ++i) p.add_term(uniform(rng, -max_coeff, max_coeff), uniform(rng, -max_exp, max_exp));
  return p;
}

inline PolyVec random_vec(std::mt19937_64 &rng, std::size_t r, long max_exp = 2, long max_coeff = 3) {
  PolyVec v(r);
  for (auto &x : v) x = random_poly(rng, max_exp, max_coeff, 2);
  return v;
}

// Sparse perturbation of the identity or of a random sparse matrix.
inline PolyMatrix random_sparse(std::mt19937_64 &rng, std::size_t r, long max_exp = 2) {
  PolyMatrix m = uniform(rng, 0, 1) ? PolyMatrix::identity(r) : PolyMatrix(r, r);
  int k = static_cast<int>(uniform(rng, 1, static_cast<long>(r) + 2));
  for (int i = 0; i < k; ++i)
    m(uniform(rng, 0, r - 1), uniform(rng, 0, r - 1)) = LaurentPoly::monomial(uniform(rng, -2, 2), uniform(rng, -max_exp, max_exp));
  return m;
}

inline IntMatrix random_int_matrix(std::mt19937_64 &rng, std::size_t r, std::size_t c, long bound, int density_pct = 100) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (uniform(rng, 1, 100) <= density_pct) m(i, j) = uniform(rng, -bound, bound);
  return m;
}

} // namespace testing
