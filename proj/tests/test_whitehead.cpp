#include <doctest.h>

#include "support.hpp"
#include "torus/tables.hpp"
#include "torus/whitehead.hpp"

using namespace torus;

namespace {

BracketExpr random_expr(std::mt19937_64 &rng, std::size_t g, int terms) {
  BracketExpr e;
  for (int i = 0; i < terms; ++i)
    e.push_back({testing::uniform(rng, -3, 3), testing::uniform(rng, -3, 3), static_cast<std::size_t>(testing::uniform(rng, 0, 2 * g - 1)),
                 testing::uniform(rng, -3, 3), static_cast<std::size_t>(testing::uniform(rng, 0, 2 * g - 1))});
  return e;
}

PolyVec shifted_basis(std::size_t r, std::size_t i, long e) {
  PolyVec v = basis_vector(r, i);
  v[i] = LaurentPoly::t(e);
  return v;
}

} // namespace

TEST_CASE("normal form examples") {
  for (int n : {4, 5}) {
    int eps = sign_of_n(n);
    WhiteheadElement w = normalize({{1, 0, 1, 0, 0}}, n, 0, 1); // [b1, a1]
    CHECK(w == normalize({{eps, 0, 0, 0, 1}}, n, 0, 1));
  }
  CHECK(normalize({{1, 0, 0, -1, 0}}, 4, 0, 1) == normalize({{1, 1, 0, 0, 0}}, 4, 0, 1));
  CHECK(normalize({{2, 0, 0, 0, 0}}, 5, 0, 1).is_zero());
  CHECK_FALSE(normalize({{1, 0, 0, 0, 0}}, 5, 0, 1).is_zero());
  CHECK(normalize({{1, 0, 0, 0, 0}}, 3, 0, 1).is_zero());
  CHECK(normalize({{1, 0, 0, 0, 0}}, 7, 0, 1).is_zero());
  CHECK_FALSE(normalize({{1000, 0, 0, 0, 0}}, 4, 0, 1).is_zero());
  CHECK_THROWS_AS(normalize({}, 4, 3, 1), Error);
}

TEST_CASE("normal form is idempotent, linear and respects the relations") {
  std::mt19937_64 rng(51);
  for (int n : {4, 5, 7}) {
    for (int k : {0, 1, 3}) {
      if (k >= n - 1) continue;
      for (int it = 0; it < 150; ++it) {
        BracketExpr e = random_expr(rng, 2, 6), f = random_expr(rng, 2, 6);
        WhiteheadElement we = normalize(e, n, k, 2), wf = normalize(f, n, k, 2);
        CHECK(normalize(as_expression(we), n, k, 2) == we);
        BracketExpr ef = e;
        ef.insert(ef.end(), f.begin(), f.end());
        CHECK(normalize(ef, n, k, 2) == we + wf);
        BracketExpr r = e;
        auto &t = r[testing::uniform(rng, 0, r.size() - 1)];
        if (it % 2) {
          std::swap(t.a, t.b);
          std::swap(t.i, t.j);
          t.c *= sign_of_n(n);
        } else {
          long s = testing::uniform(rng, -4, 4);
          t.a += s;
          t.b += s;
        }
        CHECK(normalize(r, n, k, 2) == we);
      }
    }
  }
}

TEST_CASE("omega defect") {
  for (int n = 3; n <= 7; ++n) {
    CHECK(phi_omega_defect(BlockMatrix::identity(2), n).is_zero());
    for (auto &s : elementary_generators(2, n, 2)) CHECK(phi_omega_defect(instantiate(s, 2, n), n).is_zero());
    CHECK(lemma_equivalence_check(BlockMatrix(sigma_matrix(n)), n));
  }
  for (int n : {4, 6}) {
    PolyMatrix m = PolyMatrix::identity(4);
    m(0, 2) = LaurentPoly::constant(1);
    WhiteheadElement d = phi_omega_defect(BlockMatrix(m), n);
    CHECK(d == normalize({{1, 0, 0, 0, 0}}, n, 0, 2));
  }
}

TEST_CASE("lemma equivalence on random matrices") {
  std::mt19937_64 rng(52);
  for (int n = 3; n <= 7; ++n) {
    int members = 0;
    for (int it = 0; it < 400; ++it) {
      PolyMatrix m = it % 3 == 0 ? random_word(2, n, 4, rng()).matrix.M : testing::random_sparse(rng, 4);
      if (it % 3 == 1) m = random_word(2, n, 2, rng()).matrix.M * m;
      BlockMatrix M(m);
      CHECK(lemma_equivalence_check(M, n));
      members += phi_omega_defect(M, n).is_zero();
    }
    CHECK(members > 0);
  }
}

TEST_CASE("the omega stabiliser is closed under products") {
  std::mt19937_64 rng(53);
  for (int n : {3, 4, 5}) {
    std::vector<BlockMatrix> pool;
    for (int it = 0; it < 400 && pool.size() < 20; ++it) {
      BlockMatrix M(testing::random_sparse(rng, 4));
      if (phi_omega_defect(M, n).is_zero()) pool.push_back(M);
    }
    for (int it = 0; it < 10; ++it) pool.push_back(random_word(2, n, 3, rng()).matrix);
    for (auto &x : pool)
      for (auto &y : pool) CHECK(phi_omega_defect(x * y, n).is_zero());
  }
}

TEST_CASE("rho_k on hyperbolic basis tensors is x (x) y -> [y, x]") {
  const std::size_t g = 2, r = 4;
  for (int n : {6, 7})
    for (int k : {1, 2, 3}) {
      CHECK(rho_k(PolyMatrix(r, r), n, k).is_zero());
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
          for (long a : {-1, 0, 2})
            for (long b : {0, 1}) {
              PolyVec x = shifted_basis(r, i, a), y = shifted_basis(r, j, b);
              CHECK(rho_k(tensor_hom(x, y, n), n, k) == bracket_y_x(y, x, n, k));
            }
    }
  CHECK_THROWS_AS(rho_k(PolyMatrix(4, 4), 4, 3), Error);
  CHECK_THROWS_AS(rho_k(PolyMatrix(4, 4), 4, 0), Error);
}

TEST_CASE("rho_k with phi = lambda(-, b_j) y and lambda(-, a_j) y") {
  const std::size_t r = 4;
  for (int n : {6, 7}) {
    for (int k : {2, 3}) {
      // [y o s, x] = (-1)^{n(n+k)} [x, y] o s
      const int c = (n * (n + k)) % 2 ? -1 : 1;
      PolyVec y = basis_vector(r, 1);
      BracketExpr e;
      add_bracket(e, c, basis_vector(r, 2), y);
      CHECK(rho_k(tensor_hom(basis_vector(r, 2), y, n), n, k) == normalize(e, n, k, 2));
      BracketExpr f;
      add_bracket(f, c, basis_vector(r, 0), y);
      CHECK(rho_k(tensor_hom(basis_vector(r, 0), y, n), n, k) == normalize(f, n, k, 2));
    }
  }
}

TEST_CASE("kernel and cokernel pieces") {
  RhoReport r = rho_kernel_cokernel(7, 2, 3);
  CHECK(r.pieces[1].coefficient == AbelianGroup::cyclic(2));
  CHECK(r.pieces[2].coefficient == AbelianGroup{});
  CHECK(r.pieces[0].symbolic.find("Sigma") != std::string::npos);
  RhoReport s = rho_kernel_cokernel(5, 2, 3);
  CHECK(s.pieces[1].coefficient == AbelianGroup{});
  CHECK(s.pieces[2].coefficient == AbelianGroup::cyclic(2));
  CHECK(rho_kernel_cokernel(6, 2, 3).pieces[1].coefficient == AbelianGroup::cyclic(2));

  // odd primes: kernel piece is the (k-1)-stem for n odd and zero for n even
  RhoReport p = rho_kernel_cokernel(5, 3, 3, 3);
  CHECK(p.pieces[0].coefficient == AbelianGroup::cyclic(3));
  CHECK(p.pieces[1].coefficient == p_local(stable_stem(2).group, 3));
  RhoReport q = rho_kernel_cokernel(6, 2, 3, 3);
  CHECK(q.pieces[1].coefficient == AbelianGroup{});
  CHECK(q.pieces[0].coefficient == AbelianGroup::cyclic(3));
  RhoReport u = rho_kernel_cokernel(5, 2, 3, 5);
  CHECK(u.pieces[1].coefficient == p_local(stable_stem(1).group, 5));

  CHECK_THROWS_AS(rho_kernel_cokernel(7, 4, 3, 3), Error);
  CHECK_THROWS_AS(rho_kernel_cokernel(7, 3, 3), Error);
  CHECK_THROWS_AS(rho_kernel_cokernel(5, 4, 3), Error);
  CHECK_THROWS_AS(rho_kernel_cokernel(5, 1, 3), Error);
}
