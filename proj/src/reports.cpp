#include "torus/reports.hpp"

namespace torus {

AbelianGroup tensor_mod(const AbelianGroup &a, const Integer &p) {
  std::vector<Integer> orders(a.free_rank, p);
  for (auto &t : a.torsion) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t());
    if (g != 1) orders.push_back(g);
  }
  return group_from_orders(orders);
}

TheoremBReport theorem_b_report(long n, long p, std::size_t g, long window, const std::vector<long> &support) {
  if (!is_prime(p)) throw Error(ErrorKind::BadParameters, "p must be prime");
  if (!(2 * p - 3 < n - 2)) throw Error(ErrorKind::OutOfRange, "need 2p-3 < n-2");
  if (window < 1) throw Error(ErrorKind::BadParameters, "window must be positive");
  TheoremBReport r;
  r.n = n;
  r.p = p;
  r.g = g;
  r.window = window;
  r.sign = -sign_of_n(n);
  r.lowest_stem = p_local(stable_stem(2 * p - 3).group, p);

  r.coinvariants = coinvariants_S(r.sign, n, g, window);
  r.reduced = tensor_mod(r.coinvariants.computed, p);
  r.main_summand = group_from_orders(std::vector<Integer>(window, p));
  AbelianGroup rest = tensor_mod(AbelianGroup::cyclic(2), p);
  if (!rest.is_trivial()) r.extra = rest;

  bool frob_ok = true;
  for (long d : support) {
    r.frobenius.push_back(frobenius_on_coinvariants(d, n, g, r.sign, window));
    frob_ok = frob_ok && r.frobenius.back().agree;
  }
  FrobeniusModule M = theorem_b_module(p, window, support);
  r.multiplicative = M.multiplicative();
  r.tameness = is_tame(M);
  r.no_tame = no_tame_submodule(M, p, window);

  AbelianGroup expected = r.extra ? direct_sum(r.main_summand, *r.extra) : r.main_summand;
  r.certified = r.lowest_stem == AbelianGroup::cyclic(p) && r.coinvariants.match && r.reduced == expected && frob_ok &&
                r.multiplicative && !r.tameness.tame && r.no_tame.certified;
  return r;
}

} // namespace torus
