#include <doctest.h>

#include "support.hpp"
#include "torus/snf.hpp"

using namespace torus;
using testing::random_poly;
using testing::random_vec;

namespace {

PolyVec scale(const LaurentPoly &a, PolyVec x) {
  for (auto &v : x) v = a * v;
  return x;
}

PolyVec add(PolyVec x, const PolyVec &y) {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
  return x;
}

void check_axioms(const QuadraticModule &Q, std::uint64_t seed, int samples) {
  std::mt19937_64 rng(seed);
  const int eps = Q.eps();
  for (int it = 0; it < samples; ++it) {
    PolyVec x = random_vec(rng, Q.rank), y = random_vec(rng, Q.rank);
    LaurentPoly a = random_poly(rng, 2, 3, 2);
    LaurentPoly lxy = eval_lambda(Q, x, y);
    CHECK(eval_lambda(Q, y, x) == lxy.bar() * Integer(eps));
    CHECK(eval_lambda(Q, scale(a, x), y) == a * lxy);
    CHECK(eval_lambda(Q, x, scale(a, y)) == lxy * a.bar());
    CHECK(eval_q(Q, add(x, y)) == eval_q(Q, x) + eval_q(Q, y) + Q.cls(lxy));
    CHECK(eval_q(Q, scale(a, x)) == Q.cls(a * eval_q(Q, x).representative * a.bar()));
    LaurentPoly qx = eval_q(Q, x).representative;
    CHECK(Q.cls(eval_lambda(Q, x, x)) == Q.cls(qx + Integer(eps) * qx.bar()));
  }
}

} // namespace

TEST_CASE("hyperbolic forms satisfy the quadratic axioms") {
  for (int n = 3; n <= 6; ++n)
    for (std::size_t g = 1; g <= 3; ++g) {
      QuadraticModule H = hyperbolic_form(g, n);
      CHECK(H.well_formed());
      check_axioms(H, 100 * n + g, 60);
    }
}

TEST_CASE("E8 and K") {
  QuadraticModule E = e8_form(4);
  CHECK(E.well_formed());
  CHECK(det(augment(E.gram)) == 1);
  CHECK(E.rank == 8);
  check_axioms(E, 7, 60);
  QuadraticModule K = kervaire_form(3);
  CHECK(K.well_formed());
  check_axioms(K, 8, 60);
  CHECK_THROWS_AS(e8_form(3), Error);
  CHECK_THROWS_AS(kervaire_form(4), Error);
  check_axioms(ortho_sum(E, negate(E)), 9, 20);
}

TEST_CASE("for n even 2q(x) = lambda(x,x) on the hyperbolic module") {
  std::mt19937_64 rng(31);
  for (int n : {2, 4, 6}) {
    QuadraticModule H = hyperbolic_form(2, n);
    for (int it = 0; it < 200; ++it) {
      PolyVec x = random_vec(rng, 4);
      LaurentPoly q = eval_q(H, x).representative;
      CHECK(H.cls(q + q) == H.cls(eval_lambda(H, x, x)));
    }
  }
}

TEST_CASE("Shaneson image is an isometry") {
  for (auto M : {e8_form(4), e8_form(6), kervaire_form(3), kervaire_form(5)}) {
    ShanesonImage s = shaneson_image(M);
    CHECK(s.Q.rank == 2 * M.rank);
    CHECK(is_isometry(s.Q, s.U));
    CHECK(det(s.U) == LaurentPoly::t(M.rank));
  }
  QuadraticModule bad = e8_form(4);
  bad.gram(0, 0) = LaurentPoly::constant(4);
  CHECK_THROWS_AS(shaneson_image(bad), Error);
}

TEST_CASE("M plus -M is hyperbolic") {
  for (auto M : {kervaire_form(3), e8_form(4)}) {
    QuadraticModule S = ortho_sum(M, negate(M));
    IntMatrix P = hyperbolize(S, 3);
    CHECK(certify_hyperbolic(S, P));
  }
  CHECK_THROWS_AS(hyperbolize(e8_form(4), 2), Error);
}
