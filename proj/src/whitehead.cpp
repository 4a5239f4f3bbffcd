#include "torus/whitehead.hpp"

#include "torus/tables.hpp"

namespace torus {

namespace {

void reduce_mod(Integer &c, const Integer &m) {
  if (m != 0) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
}

template <class Map> void prune(Map &m) {
  for (auto it = m.begin(); it != m.end();) {
    if (it->second == 0) it = m.erase(it);
    else ++it;
  }
}

} // namespace

std::string WhiteheadElement::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  auto sep = [&] { if (!s.empty()) s += " + "; };
  for (auto &[key, c] : diagonal) {
    sep();
    s += c.get_str() + "*[t^" + std::to_string(key.second) + " x" + std::to_string(key.first) + ", x" + std::to_string(key.first) + "]";
  }
  for (auto &[key, c] : offdiag) {
    sep();
    auto [a, i, j] = key;
    s += c.get_str() + "*[t^" + std::to_string(a) + " x" + std::to_string(i) + ", x" + std::to_string(j) + "]";
  }
  return s;
}

WhiteheadElement normalize(const BracketExpr &e, int n, int k, std::size_t g) {
  if (k < 0 || k >= n - 1) throw Error(ErrorKind::OutOfRange, "need 0 <= k < n-1");
  WhiteheadElement w;
  w.n = n;
  w.k = k;
  w.g = g;
  const int eps = sign_of_n(n);
  const Integer coeff_mod = k == 0 ? Integer(0) : stable_stem_order(k);
  const Integer diag_mod = diagonal_order(n, k);
  for (const auto &t : e) {
    if (t.c == 0) continue;
    if (t.i >= 2 * g || t.j >= 2 * g) throw Error(ErrorKind::DimensionMismatch, "generator index out of range");
    // coinvariance: [t^a x, t^b y] ~ [t^(a-b) x, y]
    long a = t.a - t.b;
    std::size_t i = t.i, j = t.j;
    Integer c = t.c;
    if (i == j) {
      if (a < 0) {
        a = -a;
        c *= eps;
      }
      w.diagonal[{i, a}] += c;
      continue;
    }
    if (!(a < 0 || (a == 0 && i < j))) {
      // [t^a x_i, x_j] ~ [x_i, t^-a x_j] = eps [t^-a x_j, x_i]
      a = -a;
      std::swap(i, j);
      c *= eps;
    }
    w.offdiag[{a, i, j}] += c;
  }
  for (auto &[key, c] : w.diagonal) reduce_mod(c, key.second == 0 ? diag_mod : coeff_mod);
  for (auto &[key, c] : w.offdiag) reduce_mod(c, coeff_mod);
  prune(w.diagonal);
  prune(w.offdiag);
  return w;
}

void add_bracket(BracketExpr &e, const Integer &c, const PolyVec &x, const PolyVec &y) {
  for (std::size_t i = 0; i < x.size(); ++i)
    for (auto &[a, ca] : x[i].terms())
      for (std::size_t j = 0; j < y.size(); ++j)
        for (auto &[b, cb] : y[j].terms()) e.push_back({c * ca * cb, a, i, b, j});
}

BracketExpr as_expression(const WhiteheadElement &w) {
  BracketExpr e;
  for (auto &[key, c] : w.diagonal) e.push_back({c, key.second, key.first, 0, key.first});
  for (auto &[key, c] : w.offdiag) e.push_back({c, std::get<0>(key), std::get<1>(key), 0, std::get<2>(key)});
  return e;
}

WhiteheadElement operator+(const WhiteheadElement &x, const WhiteheadElement &y) {
  BracketExpr e = as_expression(x), f = as_expression(y);
  e.insert(e.end(), f.begin(), f.end());
  return normalize(e, x.n, x.k, x.g);
}

WhiteheadElement phi_omega_defect(const BlockMatrix &M, int n) {
  std::size_t g = M.g;
  BracketExpr e;
  for (std::size_t i = 0; i < g; ++i) {
    add_bracket(e, 1, M.M.column(i), M.M.column(g + i));
    add_bracket(e, -1, basis_vector(2 * g, i), basis_vector(2 * g, g + i));
  }
  return normalize(e, n, 0, g);
}

bool lemma_equivalence_check(const BlockMatrix &M, int n) {
  bool defect_zero = phi_omega_defect(M, n).is_zero();
  return defect_zero == membership_by_conditions(M, n, FormParameter::for_n(n, ParamVariant::FULL));
}

WhiteheadElement rho_k(const PolyMatrix &phi, int n, int k) {
  if (!(0 < k && k < n - 1)) throw Error(ErrorKind::OutOfRange, "need 0 < k < n-1");
  std::size_t g = phi.rows() / 2;
  if (phi.rows() != phi.cols() || phi.rows() % 2) throw Error(ErrorKind::DimensionMismatch, "rho_k expects a 2g x 2g matrix");
  // [y o s, x] = (-1)^{n(n+k)} [x, y] o s and [x, y o s] = [x, y] o s
  const int swap_sign = ((n * (n + k)) % 2) ? -1 : 1;
  const int nk_sign = ((n * k) % 2) ? -1 : 1;
  BracketExpr e;
  for (std::size_t i = 0; i < g; ++i) {
    add_bracket(e, swap_sign, basis_vector(2 * g, g + i), phi.column(i));
    add_bracket(e, nk_sign, basis_vector(2 * g, i), phi.column(g + i));
  }
  return normalize(e, n, k, g);
}

WhiteheadElement bracket_y_x(const PolyVec &y0, const PolyVec &x, int n, int k) {
  const int swap_sign = ((n * (n + k)) % 2) ? -1 : 1;
  BracketExpr e;
  add_bracket(e, swap_sign, x, y0);
  return normalize(e, n, k, x.size() / 2);
}

PolyMatrix tensor_hom(const PolyVec &x, const PolyVec &y0, int n) {
  std::size_t r = x.size();
  QuadraticModule H = hyperbolic_form(r / 2, n);
  PolyMatrix phi(r, r);
  for (std::size_t j = 0; j < r; ++j) {
    LaurentPoly l = eval_lambda(H, basis_vector(r, j), x);
    for (std::size_t i = 0; i < r; ++i) phi(i, j) = l * y0[i];
  }
  return phi;
}

RhoReport rho_kernel_cokernel(int n, int k, std::size_t g, std::optional<long> p) {
  if (!(2 <= k && k < n - 1)) throw Error(ErrorKind::OutOfRange, "need 2 <= k < n-1");
  RhoReport r{n, k, g, p, {}};
  bool odd_p = p && *p % 2 == 1;
  RhoPiece coker{"cokernel", "H", std::nullopt, "pi_{2n-1+k}(S^n) / [iota_n, pi_{n+k}(S^n)]"};
  RhoPiece kplus{"kernel_plus", "S+", std::nullopt, "K = ker([iota_n,-] on pi_{n+k-1}(S^n))"};
  RhoPiece kminus{"kernel_minus", "S-", std::nullopt, "pi_{n+k-1}(S^n) / K"};
  if (odd_p) {
    Integer P = *p;
    coker.coefficient = p_local(stable_stem(n + k - 1).group, P);
    coker.symbolic = "pi_{n+k-1}^s localised";
    AbelianGroup stem = p_local(stable_stem(k - 1).group, P);
    if (n % 2) {
      kplus.coefficient = stem;
      kminus.coefficient = AbelianGroup{};
    } else {
      kplus.coefficient = AbelianGroup{};
      kminus.coefficient = stem;
    }
  } else if (k == 2) {
    AbelianGroup K = ehp_case(n, EhpKind::KER_ETA).group;
    kplus.coefficient = K;
    kminus.coefficient = K.is_trivial() ? AbelianGroup::cyclic(2) : AbelianGroup{};
    coker.symbolic = "Sigma pi_{2n+1}(S^n)";
  } else {
    throw Error(ErrorKind::UnknownGroup, "kernel of [iota_n,-] in stem " + std::to_string(k - 1) + " is not tabulated integrally");
  }
  r.pieces = {coker, kplus, kminus};
  return r;
}

} // namespace torus
