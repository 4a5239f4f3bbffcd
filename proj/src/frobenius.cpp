#include "torus/frobenius.hpp"

#include <set>

namespace torus {

bool FrobeniusModule::well_defined(long d) const {
  auto it = operators.find(d);
  if (it == operators.end()) return false;
  try {
    map_on_cokernels(it->second, relations, relations);
  } catch (const Error &e) {
    if (e.kind() == ErrorKind::NotWellDefined) return false;
    throw;
  }
  return true;
}

bool FrobeniusModule::multiplicative() const {
  for (auto &[d, Fd] : operators)
    for (auto &[e, Fe] : operators) {
      auto it = operators.find(d * e);
      if (it == operators.end()) continue;
      IntMatrix diff = Fd * Fe - it->second;
      if (!map_on_cokernels(diff, relations, relations).is_zero()) return false;
    }
  return true;
}

TameCertificate is_tame(const FrobeniusModule &M) {
  TameCertificate c;
  for (auto &[d, F] : M.operators) {
    if (!M.well_defined(d)) throw Error(ErrorKind::NotWellDefined, "F_" + std::to_string(d) + " does not preserve the relations");
    if (!epi_after_inverting(F, M.relations, d)) {
      c = {false, d, "F_" + std::to_string(d) + " is not onto after inverting " + std::to_string(d)};
      return c;
    }
    if (!mono_after_inverting(F, M.relations, d)) {
      c = {false, d, "F_" + std::to_string(d) + " has a kernel after inverting " + std::to_string(d)};
      return c;
    }
  }
  c.reason = "every F_d is invertible after inverting d";
  return c;
}

bool tame_criterion_check(const IntMatrix &f, const IntMatrix &rels, const Integer &d) {
  if (!epi_after_inverting(f, rels, d)) return true;
  return mono_after_inverting(f, rels, d);
}

std::pair<long, std::size_t> covering_image(long d, std::size_t g, long e, std::size_t i) {
  if (d < 1) throw Error(ErrorKind::BadParameters, "covering degree must be positive");
  long r = ((e % d) + d) % d;
  long k = (e - r) / d;
  std::size_t target = i < g ? i + r * g : d * g + (i - g) + r * g;
  return {k, target};
}

CoveringMap covering_map(long d, std::size_t g) {
  CoveringMap c{d, g, {}};
  for (long r = 0; r < d; ++r)
    for (std::size_t i = 0; i < 2 * g; ++i) c.image.push_back(covering_image(d, g, r, i).second);
  return c;
}

bool CoveringMap::is_bijection() const {
  std::set<std::size_t> s(image.begin(), image.end());
  return s.size() == image.size() && (s.empty() || *s.rbegin() < image.size());
}

Tensor covering_tensor(long d, std::size_t g, const Tensor &t) {
  Tensor out;
  for (auto &[l, c] : t) {
    auto [e, i, j] = l;
    auto [k, x] = covering_image(d, g, e, i);
    auto [k2, y] = covering_image(d, g, 0, j);
    out[{k - k2, x, y}] += c;
  }
  return out;
}

LaurentPoly frobenius_formula(long d, long a) {
  if (a % d != 0) return LaurentPoly();
  return LaurentPoly::monomial(1, a / d) - LaurentPoly::monomial(1, -a / d);
}

IntMatrix frobenius_closed_formula(long d, long window) {
  const std::size_t m = window + 1;
  IntMatrix F(m, m);
  for (long a = 1; a <= window; ++a) {
    LaurentPoly img = frobenius_formula(d, a);
    for (long b = 1; b <= window; ++b) F(b - 1, a - 1) = img.coeff(b);
  }
  F(m - 1, m - 1) = 1;
  return F;
}

IntMatrix frobenius_via_covering(long d, int n, std::size_t g, long window) {
  const int sign = -sign_of_n(n);
  const std::size_t m = window + 1;
  IntMatrix F(m, m);
  for (std::size_t c = 0; c < m; ++c) {
    long a = c + 1 < m ? static_cast<long>(c + 1) : 0;
    Tensor img = covering_tensor(d, g, witness_tensor(sign, g, a));
    LaurentPoly l = lambda_invariant(img, d * g, n);
    // l = sum c_b (T^b - T^-b), and phi = sum c_b + c_0 mod 2
    if (l.coeff(0) != 0) throw Error(ErrorKind::BadParameters, "lambda image has a constant term");
    Integer parity = phi_invariant(img, d * g);
    for (auto &[b, v] : l.terms()) {
      if (b <= 0) {
        if (l.coeff(-b) != -v) throw Error(ErrorKind::BadParameters, "lambda image is not antisymmetric");
        continue;
      }
      if (b > window) throw Error(ErrorKind::WindowOverflow, "Frobenius image leaves the window");
      F(b - 1, c) = v;
      parity -= v;
    }
    mpz_fdiv_r_ui(parity.get_mpz_t(), parity.get_mpz_t(), 2);
    F(m - 1, c) = parity;
  }
  return F;
}

FrobeniusComparison frobenius_on_coinvariants(long d, int n, std::size_t g, int sign, long window) {
  if (sign != -sign_of_n(n)) throw Error(ErrorKind::WrongParity, "Frobenius is taken on S^{(-1)^(n+1)}");
  if (d < 1) throw Error(ErrorKind::BadParameters, "d must be positive");
  FrobeniusComparison r;
  r.d = d;
  r.closed = frobenius_closed_formula(d, window);
  r.oracle = frobenius_via_covering(d, n, g, window);
  IntMatrix rels(window + 1, 1);
  rels(window, 0) = 2;
  r.agree = map_on_cokernels(r.closed - r.oracle, rels, rels).is_zero();
  return r;
}

FrobeniusModule theorem_b_module(long p, long window, const std::vector<long> &support) {
  FrobeniusModule M;
  M.rank = window;
  M.relations = IntMatrix(window, std::max<long>(window, 1));
  for (long i = 0; i < window; ++i) M.relations(i, i) = p;
  for (long d : support) {
    IntMatrix F(window, window);
    for (long a = 1; a <= window; ++a) {
      LaurentPoly img = frobenius_formula(d, a);
      for (long b = 1; b <= window; ++b) F(b - 1, a - 1) = img.coeff(b);
    }
    M.operators[d] = F;
  }
  return M;
}

bool is_prime(long q) {
  if (q < 2) return false;
  for (long f = 2; f * f <= q; ++f)
    if (q % f == 0) return false;
  return true;
}

long next_prime_above(long x, long avoid) {
  long q = x + 1;
  while (!is_prime(q) || q == avoid) ++q;
  return q;
}

NoTameWitness no_tame_submodule(const FrobeniusModule &M, long p, long window) {
  NoTameWitness w;
  w.q = next_prime_above(std::max<long>(window, 1), p);
  if (M.group().is_trivial()) {
    w.certified = true;
    w.reason = "zero module";
    return w;
  }
  if (M.group().free_rank != 0) {
    w.reason = "module is not torsion";
    return w;
  }
  // every element must be p-torsion
  for (auto &t : M.group().torsion)
    if (strip_primes(t, p) != 1) {
      w.reason = "module is not p-primary";
      return w;
    }
  auto it = M.operators.find(w.q);
  IntMatrix Fq = it != M.operators.end() ? it->second : theorem_b_module(p, M.rank, {w.q}).operators.at(w.q);
  if (Fq.rows() != M.rank) throw Error(ErrorKind::DimensionMismatch, "F_q has the wrong size");
  w.certified = map_on_cokernels(Fq, M.relations, M.relations).is_zero();
  w.reason = w.certified ? "F_" + std::to_string(w.q) + " vanishes; a tame submodule dies after inverting q and is p-torsion"
                         : "F_" + std::to_string(w.q) + " is nonzero";
  return w;
}

} // namespace torus
