#include <doctest.h>

#include <functional>

#include "torus/reports.hpp"
#include "torus/tables.hpp"

using namespace torus;

namespace {

// Enumerate monomials x_{i1} ... x_{ir} e^a s^b directly and count by degree.
long monomial_count(long n, long k) {
  long target = k + 2 * n;
  std::vector<long> gens;
  for (long d = 4 * n + 3; d <= target; d += 4) gens.push_back(d);
  long count = 0;
  std::function<void(std::size_t, long)> rec = [&](std::size_t idx, long deg) {
    if (idx == gens.size()) {
      for (long a = 0; a <= 1; ++a)
        for (long b = 0; b <= 1; ++b)
          if (deg + a * 2 * n + b == target) ++count;
      return;
    }
    rec(idx + 1, deg);
    if (deg + gens[idx] <= target) rec(idx + 1, deg + gens[idx]);
  };
  rec(0, 0);
  return count;
}

} // namespace

TEST_CASE("stable stems") {
  CHECK(stable_stem(0).group == AbelianGroup::free(1));
  CHECK(stable_stem(3).group == AbelianGroup::cyclic(24));
  CHECK(stable_stem(7).group == AbelianGroup::cyclic(240));
  CHECK_THROWS_AS(stable_stem(8), Error);
  CHECK(p_local(stable_stem(3).group, 3) == AbelianGroup::cyclic(3));
  CHECK(p_local(stable_stem(7).group, 5) == AbelianGroup::cyclic(5));
  CHECK(p_local(stable_stem(7).group, 2) == AbelianGroup::cyclic(16));
}

TEST_CASE("every entry carries provenance") {
  for (auto t : all_tables())
    for (long i = -8; i <= 8; ++i) {
      try {
        TableEntry e = table_entry(t, i);
        CHECK_FALSE(e.provenance.empty());
      } catch (const Error &e) {
        CHECK((e.kind() == ErrorKind::UnknownGroup || e.kind() == ErrorKind::BadParameters));
      }
    }
  CHECK(parse_table_name("L_SYMMETRIC_Z") == TableName::L_SYMMETRIC_Z);
  CHECK_FALSE(parse_table_name("nope").has_value());
}

TEST_CASE("symmetric L-groups of Z") {
  CHECK(l_symmetric(0).group == AbelianGroup::free(1));
  CHECK(l_symmetric(5).group == AbelianGroup::cyclic(2));
  CHECK(l_symmetric(-2).group.is_trivial());
  CHECK(l_symmetric(-6).group == AbelianGroup::cyclic(2));
  CHECK(l_symmetric(1).group == AbelianGroup::cyclic(2));
  CHECK(l_symmetric(-3).group.is_trivial());
  CHECK(l_symmetric_shaneson(1) == direct_sum(AbelianGroup::cyclic(2), AbelianGroup::free(1)));
}

TEST_CASE("rational tables") {
  CHECK(pi_so_rational(3).group.free_rank == 1);
  CHECK(pi_so_rational(5).group.free_rank == 0);
  CHECK(k_z_rational(0).group.free_rank == 1);
  CHECK(k_z_rational(5).group.free_rank == 1);
  CHECK(k_z_rational(1).group.free_rank == 0);
  CHECK(bp_order(3).group.is_trivial());
  CHECK_THROWS_AS(bp_order(5), Error);
  for (long n = 2; n <= 6; ++n) {
    CHECK(gw_rational(n, 1) == 1 + ((2 * n + 1) % 4 <= 1 ? 1 : 0));
    CHECK(gw_rational(n, 0) == 1 + ((2 * n) % 4 <= 1 ? 1 : 0));
  }
  CHECK(gw_rational(4, 2) == 0);
  CHECK(gw_rational(3, 2) == 1);
}

TEST_CASE("MTtheta series") {
  auto s3 = mttheta_rational_homotopy(3, 14);
  for (long k = 1; k < 15; ++k) CHECK(s3[k] == ((k == 1 || k == 9 || k == 10 || k == 13 || k == 14) ? 1 : 0));
  CHECK(mttheta_rational_homotopy(4, 1)[1] == 1);
  for (long n = 2; n <= 7; ++n) {
    auto s = mttheta_rational_homotopy(n, 4 * n + 2);
    for (long k = -2 * n; k <= 4 * n + 2; ++k) CHECK(s[k] == monomial_count(n, k));
  }
  CHECK_THROWS_AS(mttheta_rational_homotopy(3, 15), Error);
}

TEST_CASE("EHP cases") {
  CHECK(ehp_case(6, EhpKind::STAB_SURJ).group == AbelianGroup::cyclic(4));
  CHECK(ehp_case(6, EhpKind::STAB_SURJ).order == 60);
  CHECK(ehp_case(5, EhpKind::STAB_SURJ).flag);
  CHECK(ehp_case(7, EhpKind::KER_ETA).group == AbelianGroup::cyclic(2));
  CHECK(ehp_case(6, EhpKind::KER_ETA).group == AbelianGroup::cyclic(2));
  CHECK(ehp_case(5, EhpKind::KER_ETA).group.is_trivial());
  CHECK(ehp_case(7, EhpKind::ORDER_RULE).order == 1);
  CHECK(ehp_case(5, EhpKind::ORDER_RULE).order == 2);
  CHECK(ehp_case(4, EhpKind::ORDER_RULE).order == 0);
  CHECK_THROWS_AS(ehp_case(2, EhpKind::KER_ETA), Error);
}

TEST_CASE("theorem A bookkeeping") {
  TheoremARow r = theorem_a_report(5, 2);
  CHECK(r.lemma_side == 1);
  CHECK(r.difference == 0);
  CHECK(theorem_a_report(6, 1).difference == 0);
  for (long n = 3; n <= 12; ++n)
    for (auto &row : theorem_a_sweep(n)) CHECK(row.difference == 0);
  CHECK_THROWS_AS(theorem_a_report(5, 3), Error);
}

TEST_CASE("theorem B bookkeeping") {
  TheoremBReport r = theorem_b_report(7, 3, 3, 4);
  CHECK(r.certified);
  CHECK(r.main_summand == group_from_orders({3, 3, 3, 3}));
  CHECK_FALSE(r.extra.has_value());
  CHECK(r.no_tame.q == 5);
  TheoremBReport s = theorem_b_report(6, 2, 3, 4);
  CHECK(s.certified);
  CHECK(s.extra == AbelianGroup::cyclic(2));
  CHECK_THROWS_AS(theorem_b_report(6, 5, 3, 4), Error);
  CHECK_THROWS_AS(theorem_b_report(9, 4, 3, 4), Error);
}
