#include <doctest.h>

#include "support.hpp"
#include "torus/coinvariants.hpp"

using namespace torus;

namespace {

// Rewriting from the proof: every basis element is sent to its class in
// Z{X_1} + ... + Z{X_D} + (Z/2 or Z){X_0}, X_e = t^e a (x) b + s t^-e b (x) a.
std::vector<Integer> replay(const SymTensorModule &S, const SparseRow &x) {
  const long D = S.window;
  const int s = S.sign, eps = sign_of_n(S.n);
  const bool torsion = s == -eps;
  std::vector<Integer> out(D + 1);
  for (auto &[k, c] : x) {
    auto [e, i, j] = S.basis[k];
    Integer coef = c;
    long f;
    if (j == i + S.g) f = e;
    else if (i == j + S.g) {
      f = -e;
      coef *= s;
    } else continue; // steps (i), (ii), (iii)
    if (f < 0) {
      f = -f;
      coef *= s * eps; // step (iv)
    }
    if (f == 0) out[D] += coef;
    else out[f - 1] += coef;
  }
  if (torsion) mpz_fdiv_r_ui(out[D].get_mpz_t(), out[D].get_mpz_t(), 2);
  return out;
}

bool all_zero(const std::vector<Integer> &v) {
  for (auto &x : v)
    if (x != 0) return false;
  return true;
}

} // namespace

TEST_CASE("module bases") {
  SymTensorModule P(1, 3, 3, 4), M(-1, 3, 3, 4);
  CHECK(P.rank() == 165);
  CHECK(M.rank() == 159);
  for (std::size_t k = 0; k < P.rank(); ++k) CHECK(P.from_tensor(P.element(k)) == SparseRow{{k, Integer(1)}});
  Tensor outside{{{5, 0, 3}, 1}, {{-5, 3, 0}, 1}};
  CHECK_THROWS_AS(P.from_tensor(outside), Error);
  Tensor not_sym{{{1, 0, 3}, 1}};
  CHECK_THROWS_AS(P.from_tensor(not_sym), Error);
}

TEST_CASE("action examples") {
  const std::size_t g = 3;
  for (int n : {3, 4}) {
    SymTensorModule S(1, n, g, 4);
    SparseRow a1a1 = S.from_tensor({{{0, 0, 0}, 1}});
    CHECK(act(BlockMatrix::identity(g), S, a1a1) == a1a1);
    BlockMatrix F4 = instantiate({Family::F4, LaurentPoly::constant(1), 0, 1}, g, n);
    PolyVec v = basis_vector(2 * g, 0);
    v[1] = LaurentPoly::constant(1);
    CHECK(S.to_tensor(act(F4, S, a1a1)) == tensor_product(v, v));

    BlockMatrix sigma = instantiate({Family::SIGMA, LaurentPoly(), 0, 1}, g, n);
    for (long e : {0, 2, -3}) {
      Tensor x = witness_tensor(1, g, e, 0);
      Tensor expect{{{e, g + 1, 1}, sign_of_n(n)}};
      expect[{-e, 1, g + 1}] += sign_of_n(n);
      CHECK(S.to_tensor(act(sigma, S, S.from_tensor(x))) == expect);
    }
  }
}

TEST_CASE("invariant maps") {
  for (int n : {3, 4}) {
    int eps = sign_of_n(n);
    CHECK(lambda_invariant(witness_tensor(1, 3, 0), 3, n) == LaurentPoly::constant(1 + eps));
    CHECK(lambda_invariant(witness_tensor(-1, 3, 2), 3, n) == LaurentPoly::t(2) - Integer(eps) * LaurentPoly::t(-2));
  }
  SymTensorModule odd(1, 3, 3, 4), even(-1, 4, 3, 4);
  CHECK(phi_invariant(odd, odd.from_tensor(witness_tensor(1, 3, 0))) == 1);
  CHECK(phi_invariant(even, even.from_tensor(witness_tensor(-1, 3, 0))) == 1);
  Tensor twice = witness_tensor(1, 3, 0);
  for (auto &[l, c] : twice) c *= 2;
  CHECK(phi_invariant(odd, odd.from_tensor(twice)) == 0);
  SymTensorModule wrong(1, 4, 3, 4);
  CHECK_THROWS_AS(phi_invariant(wrong, wrong.from_tensor(witness_tensor(1, 3, 0))), Error);
}

TEST_CASE("invariant maps are invariant under random unitary words") {
  std::mt19937_64 rng(61);
  for (int n : {3, 4}) {
    const std::size_t g = 3;
    for (int it = 0; it < 150; ++it) {
      BlockMatrix M = random_word(g, n, 4, rng()).matrix;
      Tensor x = tensor_product(testing::random_vec(rng, 2 * g, 1, 2), testing::random_vec(rng, 2 * g, 1, 2));
      Tensor y = act_on_tensor(M.M, x);
      CHECK(lambda_invariant(y, g, n) == lambda_invariant(x, g, n));
      // phi only sees classes in the (-1)^(n+1) symmetric part
      Tensor xs = x;
      for (auto &[l, c] : x) xs[swap_label(l)] -= sign_of_n(n) * c;
      Tensor ys = act_on_tensor(M.M, xs);
      CHECK(phi_invariant(ys, g) == phi_invariant(xs, g));
    }
  }
}

TEST_CASE("coinvariants of H vanish") {
  CHECK(coinvariants_H(3, 2, 2).computed.is_trivial());
  CHECK(coinvariants_H(4, 3, 2).computed.is_trivial());
  std::vector<GeneratorSpec> f3;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) f3.push_back({Family::F3, LaurentPoly::constant(1), i, j});
  CHECK(coinvariants_H(3, 3, 2, f3).computed.is_trivial());
}

TEST_CASE("coinvariants of S at window 2 and the proof replay") {
  for (int n : {3, 4}) {
    for (int s : {1, -1}) {
      CoinvariantResult r = coinvariants_S(s, n, 3, 2);
      CAPTURE(n);
      CAPTURE(s);
      CHECK(r.computed == r.predicted);
      CHECK(r.witnesses_generate);
      CHECK(r.witness.size() == 3);

      SymTensorModule S(s, n, 3, 2);
      Presentation P = presentation_S(S, coinvariant_generators(3, n));
      CHECK(P.discarded > 0);
      for (auto &rel : P.relations) {
        CHECK(all_zero(replay(S, rel)));
        CHECK(lambda_invariant(S, rel).is_zero());
        if (s == -sign_of_n(n)) CHECK(phi_invariant(S, rel) == 0);
      }
    }
  }
}

TEST_CASE("predicted answers") {
  CHECK(predicted_S(1, 3, 4).to_string() == "Z^4 + Z/2");
  CHECK(predicted_S(-1, 3, 4).to_string() == "Z^5");
  CHECK(predicted_S(1, 4, 4).to_string() == "Z^5");
  CHECK(predicted_S(-1, 4, 4).to_string() == "Z^4 + Z/2");
}

TEST_CASE("fewer generators never give a smaller group") {
  const int n = 3;
  SymTensorModule S(1, n, 3, 2);
  auto all = coinvariant_generators(3, n);
  std::vector<GeneratorSpec> half;
  for (std::size_t k = 0; k < all.size(); k += 2) half.push_back(all[k]);
  Presentation small = presentation_S(S, half), big = presentation_S(S, all);
  SparseLattice L(S.rank());
  for (auto &r : big.relations) L.add(r);
  for (auto &r : small.relations) CHECK(L.contains(r));
  CoinvariantResult a = coinvariants_S(1, n, 3, 2, half), b = coinvariants_S(1, n, 3, 2, all);
  CHECK(a.computed.free_rank >= b.computed.free_rank);
}

TEST_CASE("genus two is reported") {
  CoinvariantResult r = coinvariants_S(1, 3, 2, 2);
  CHECK(r.relations > 0);
  CHECK_THROWS_AS(coinvariants_S(1, 3, 1, 2), Error);
}
