#include <doctest.h>

#include <numeric>

#include "support.hpp"
#include "torus/snf.hpp"

using namespace torus;
using testing::random_int_matrix;

namespace {

Integer minor_det(const IntMatrix &m, const std::vector<std::size_t> &rows, const std::vector<std::size_t> &cols) {
  IntMatrix s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = m(rows[i], cols[j]);
  return det(s);
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t> &cur, std::vector<std::vector<std::size_t>> &out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// invariant factors from determinantal divisors d_k = gcd of k x k minors
std::vector<Integer> determinantal_factors(const IntMatrix &m) {
  std::vector<Integer> dk{1};
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    std::vector<std::vector<std::size_t>> R, C;
    std::vector<std::size_t> cur;
    subsets(m.rows(), k, 0, cur, R);
    subsets(m.cols(), k, 0, cur, C);
    Integer g = 0;
    for (auto &r : R)
      for (auto &c : C) {
        Integer v = minor_det(m, r, c);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      }
    if (g == 0) break;
    dk.push_back(g);
  }
  std::vector<Integer> f;
  for (std::size_t k = 1; k < dk.size(); ++k) f.push_back(dk[k] / dk[k - 1]);
  return f;
}

} // namespace

TEST_CASE("SNF matches determinantal divisors") {
  std::mt19937_64 rng(21);
  for (int it = 0; it < 300; ++it) {
    std::size_t r = testing::uniform(rng, 1, 4), c = testing::uniform(rng, 1, 5);
    IntMatrix m = random_int_matrix(rng, r, c, 6, 70);
    auto s = smith_normal_form(m);
    auto f = determinantal_factors(m);
    REQUIRE(s.rank == f.size());
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(s.D(i, i) == f[i]);
  }
}

TEST_CASE("SNF certificate") {
  std::mt19937_64 rng(22);
  for (int it = 0; it < 100; ++it) {
    std::size_t r = testing::uniform(rng, 1, 12), c = testing::uniform(rng, 1, 14);
    IntMatrix m = random_int_matrix(rng, r, c, 9, 40);
    auto s = smith_normal_form(m);
    CHECK(s.U * m * s.V == s.D);
    CHECK(is_unimodular(s.U));
    CHECK(is_unimodular(s.V));
    CHECK(s.U * s.Uinv == IntMatrix::identity(r));
    CHECK(divisibility_chain(s.D));
  }
}

TEST_CASE("cokernels") {
  IntMatrix m(2, 2);
  m(0, 0) = 2;
  m(1, 1) = 3;
  CHECK(cokernel(m) == AbelianGroup::cyclic(6));
  CHECK(cokernel(m).to_string() == "Z/6");
  IntMatrix z(3, 1);
  z(0, 0) = 4;
  CHECK(cokernel(z).to_string() == "Z^2 + Z/4");
  CHECK(AbelianGroup{}.to_string() == "0");
  CHECK(group_from_orders({4, 6, 0}) == direct_sum(AbelianGroup::free(1), group_from_orders({2, 12})));
}

TEST_CASE("kernel and span bases") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 100; ++it) {
    IntMatrix m = random_int_matrix(rng, testing::uniform(rng, 1, 5), testing::uniform(rng, 1, 6), 5, 60);
    IntMatrix k = kernel_basis(m);
    CHECK((m * k).is_zero_matrix());
    auto s = smith_normal_form(m, false);
    CHECK(k.cols() == m.cols() - s.rank);
    IntMatrix b = column_span_basis(m);
    CHECK(b.cols() == s.rank);
    for (std::size_t j = 0; j < m.cols(); ++j) CHECK(solve_in_span(b, m.column(j)).has_value());
  }
}

TEST_CASE("sparse lattice spans the same lattice as its rows") {
  std::mt19937_64 rng(24);
  for (int it = 0; it < 60; ++it) {
    std::size_t dim = testing::uniform(rng, 1, 8), nrel = testing::uniform(rng, 0, 12);
    IntMatrix rels = random_int_matrix(rng, dim, std::max<std::size_t>(nrel, 1), 7, 35);
    SparseLattice L(dim);
    for (std::size_t j = 0; j < rels.cols(); ++j) {
      SparseRow r;
      for (std::size_t i = 0; i < dim; ++i)
        if (rels(i, j) != 0) r.emplace_back(i, rels(i, j));
      L.add(r);
    }
    IntMatrix B = L.basis_columns();
    if (B.cols() == 0) B = IntMatrix(dim, 1);
    CHECK(cokernel(B) == cokernel(rels));
    for (std::size_t j = 0; j < rels.cols(); ++j) {
      SparseRow r;
      for (std::size_t i = 0; i < dim; ++i)
        if (rels(i, j) != 0) r.emplace_back(i, rels(i, j));
      CHECK(L.contains(r));
    }
  }
}

TEST_CASE("maps on cokernels and localisation") {
  IntMatrix rels(1, 1);
  rels(0, 0) = 0;
  IntMatrix two(1, 1), three(1, 1);
  two(0, 0) = 2;
  three(0, 0) = 3;
  CHECK(epi_after_inverting(two, rels, 2));
  CHECK(iso_after_inverting(two, rels, 2));
  CHECK_FALSE(epi_after_inverting(three, rels, 2));
  CHECK(mono_after_inverting(three, rels, 2));

  IntMatrix z4(1, 1);
  z4(0, 0) = 4;
  IntMatrix half(1, 1);
  half(0, 0) = 1;
  CHECK_NOTHROW(map_on_cokernels(half, z4, two));
  CHECK_THROWS_AS(map_on_cokernels(half, two, z4), Error);
  CHECK(invert(group_from_orders({4, 6, 0}), 2) == group_from_orders({3, 0}));
  CHECK(strip_primes(360, 6) == 5);
}
