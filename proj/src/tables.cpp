#include "torus/tables.hpp"

namespace torus {

const char *table_name(TableName t) {
  switch (t) {
  case TableName::STABLE_STEMS: return "STABLE_STEMS";
  case TableName::PI_SO_RATIONAL: return "PI_SO_RATIONAL";
  case TableName::L_EVEN_Z: return "L_EVEN_Z";
  case TableName::L_SYMMETRIC_Z: return "L_SYMMETRIC_Z";
  case TableName::K_Z_RATIONAL: return "K_Z_RATIONAL";
  case TableName::BP_ORDER: return "BP_ORDER";
  }
  return "?";
}

std::vector<TableName> all_tables() {
  return {TableName::STABLE_STEMS, TableName::PI_SO_RATIONAL, TableName::L_EVEN_Z,
          TableName::L_SYMMETRIC_Z, TableName::K_Z_RATIONAL, TableName::BP_ORDER};
}

std::optional<TableName> parse_table_name(const std::string &s) {
  for (auto t : all_tables())
    if (s == table_name(t)) return t;
  return std::nullopt;
}

namespace {

long mod(long a, long m) { return ((a % m) + m) % m; }

TableEntry entry(long i, AbelianGroup g, std::string prov, bool rational = false) {
  TableEntry e;
  e.index = i;
  e.group = std::move(g);
  e.rational = rational;
  e.provenance = std::move(prov);
  return e;
}

} // namespace

TableEntry stable_stem(long k) {
  static const long orders[8] = {0, 2, 2, 24, 1, 1, 2, 240};
  static const char *prov[8] = {
      "degree theorem",
      "eta generates the first stem; Freudenthal",
      "eta squared; external constant (Toda)",
      "external constant (Toda): image of J in the third stem",
      "external constant (Toda)",
      "external constant (Toda)",
      "nu squared; external constant (Toda)",
      "image of J in the seventh stem (Adams); external constant",
  };
  if (k < 0 || k > 7) throw Error(ErrorKind::UnknownGroup, "stable stem " + std::to_string(k) + " is beyond the lookup table");
  AbelianGroup g = orders[k] == 0 ? AbelianGroup::free(1) : AbelianGroup::cyclic(orders[k]);
  return entry(k, g, prov[k]);
}

Integer stable_stem_order(long k) { return stable_stem(k).group.order(); }

AbelianGroup p_local(const AbelianGroup &g, const Integer &p) {
  AbelianGroup h;
  h.free_rank = g.free_rank;
  std::vector<Integer> orders;
  for (auto &t : g.torsion) {
    Integer q = 1, m = t;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
      m /= p;
      q *= p;
    }
    if (q > 1) orders.push_back(q);
  }
  for (std::size_t i = 0; i < g.free_rank; ++i) orders.push_back(0);
  return group_from_orders(orders);
}

TableEntry pi_so_rational(long j) {
  bool q = j >= 0 && mod(j, 4) == 3;
  return entry(j, AbelianGroup::free(q ? 1 : 0), "Bott periodicity: rationally nonzero exactly in degrees 3 mod 4", true);
}

TableEntry l_even_z(long n) {
  if (mod(n, 2) == 0) return entry(n, AbelianGroup::free(1), "signature / 8, generated by E8");
  return entry(n, AbelianGroup::cyclic(2), "Arf invariant, generated by the Kervaire form");
}

TableEntry l_symmetric(long d) {
  std::string prov = "Ranicki: non-periodic symmetric L-groups of Z";
  long r = mod(d, 4);
  if (r == 0) return entry(d, AbelianGroup::free(1), prov);
  if (r == 1 && d > 0) return entry(d, AbelianGroup::cyclic(2), prov);
  if (r == 2 && d < -4) return entry(d, AbelianGroup::cyclic(2), prov);
  return entry(d, AbelianGroup{}, prov);
}

AbelianGroup l_symmetric_shaneson(long d) { return direct_sum(l_symmetric(d).group, l_symmetric(d - 1).group); }

TableEntry k_z_rational(long d) {
  bool q = d == 0 || (d >= 5 && mod(d, 4) == 1);
  return entry(d, AbelianGroup::free(q ? 1 : 0), "Borel: rational K-theory of the integers", true);
}

TableEntry bp_order(long n) {
  if (n == 3 || n == 7) return entry(n, AbelianGroup{}, "Kervaire-Milnor: bP_6 and bP_14 vanish");
  throw Error(ErrorKind::BadParameters, "bP order for n = " + std::to_string(n) + " must be supplied by the caller");
}

TableEntry table_entry(TableName t, long i) {
  switch (t) {
  case TableName::STABLE_STEMS: return stable_stem(i);
  case TableName::PI_SO_RATIONAL: return pi_so_rational(i);
  case TableName::L_EVEN_Z: return l_even_z(i);
  case TableName::L_SYMMETRIC_Z: return l_symmetric(i);
  case TableName::K_Z_RATIONAL: return k_z_rational(i);
  case TableName::BP_ORDER: return bp_order(i);
  }
  throw Error(ErrorKind::BadParameters, "unknown table");
}

GradedQVector mttheta_rational_homotopy(long n, long k_max) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "n must be positive");
  if (k_max >= 4 * n + 3) throw Error(ErrorKind::OutOfRange, "k_max must be below 4n+3");
  // Poincare series as a coefficient array over homology degrees 0..top
  long top = k_max + 2 * n;
  std::vector<long> series(top + 1, 0);
  series[0] = 1;
  auto mult_exterior = [&](long deg) {
    for (long i = top; i >= deg; --i) series[i] += series[i - deg];
  };
  for (long deg = 4 * n + 3; deg <= top; deg += 4) mult_exterior(deg);
  mult_exterior(2 * n); // Q[e]/(e^2)
  mult_exterior(1);     // H_*(S^1)
  GradedQVector out;
  for (long k = -2 * n; k <= k_max; ++k) out[k] = series[k + 2 * n];
  return out;
}

long gw_rational(long n, long d) {
  long k_part = (d == 0 || d == 1) ? 1 : 0;
  long r = mod(d + 2 * n, 4);
  long l_part = (r == 0 || r == 1) ? 1 : 0;
  return k_part + l_part;
}

EhpAnswer ehp_case(long n, EhpKind kind) {
  if (n < 3) throw Error(ErrorKind::OutOfRange, "EHP case analysis needs n >= 3");
  EhpAnswer a;
  a.kind = kind;
  switch (kind) {
  case EhpKind::KER_ETA:
    if (mod(n, 4) == 3 || n == 2 || n == 6) a.group = AbelianGroup::cyclic(2);
    a.note = "kernel of [iota_n, -] on the first unstable stem (Hilton, Mahowald)";
    break;
  case EhpKind::STAB_SURJ:
    a.flag = n != 6;
    if (n == 6) {
      a.group = AbelianGroup::cyclic(4);
      a.order = 60;
      a.note = "pi_13(S^6) = Z/60 injects into pi_7^s = Z/240";
    } else {
      a.note = "stabilisation pi_{2n+1}(S^n) -> pi_{n+1}^s is onto";
    }
    break;
  case EhpKind::ORDER_RULE:
    a.order = (n == 3 || n == 7) ? 1 : (n % 2 ? 2 : 0);
    a.note = "order of [iota_n, iota_n]";
    break;
  case EhpKind::COKER_LEVEL2:
    a.flag = true;
    a.note = "coker([iota_n,-]: pi_{n+2}(S^n) -> pi_{2n+1}(S^n)) = Sigma pi_{2n+1}(S^n)";
    break;
  }
  return a;
}

Integer diagonal_order(long n, long k) {
  if (k == 0) return ehp_case(n, EhpKind::ORDER_RULE).order;
  if (k == 1) return ehp_case(n, EhpKind::KER_ETA).group.is_trivial() ? 2 : 1;
  Integer s = ehp_case(n, EhpKind::ORDER_RULE).order, o = stable_stem_order(k);
  if (s == 0) return o;
  if (o == 0) return s;
  return gcd(s, o);
}

TheoremARow theorem_a_report(long n, long k) {
  if (!(0 < k && k < n - 2)) throw Error(ErrorKind::OutOfRange, "need 0 < k < n-2");
  TheoremARow r;
  r.k = k;
  r.bott_side = static_cast<long>(pi_so_rational(2 * n + k).group.free_rank + pi_so_rational(2 * n - 1 + k).group.free_rank);
  long m = mod(2 * n + k, 4);
  r.lemma_side = (m == 0 || m == 3) ? 1 : 0;
  r.difference = r.bott_side - r.lemma_side;
  return r;
}

std::vector<TheoremARow> theorem_a_sweep(long n) {
  std::vector<TheoremARow> rows;
  for (long k = 1; k < n - 2; ++k) rows.push_back(theorem_a_report(n, k));
  return rows;
}

} // namespace torus
