#include "torus/unitary.hpp"

#include <random>

namespace torus {

BlockMatrix::BlockMatrix(PolyMatrix m) : g(m.rows() / 2), M(std::move(m)) {
  if (M.rows() != M.cols() || M.rows() % 2) throw Error(ErrorKind::DimensionMismatch, "block matrix must be 2g x 2g");
}

BlockMatrix BlockMatrix::from_blocks(const PolyMatrix &A, const PolyMatrix &B, const PolyMatrix &C, const PolyMatrix &D) {
  std::size_t g = A.rows();
  PolyMatrix M(2 * g, 2 * g);
  M.set_block(0, 0, A);
  M.set_block(0, g, B);
  M.set_block(g, 0, C);
  M.set_block(g, g, D);
  return BlockMatrix(M);
}

PolyMatrix phi_matrix(std::size_t g, int n) { return hyperbolic_form(g, n).gram; }

namespace {

bool skew(const PolyMatrix &X, int eps) {
  return (X + scaled(dagger(X), LaurentPoly::constant(eps))).is_zero_matrix();
}

bool diag_in(const PolyMatrix &X, const FormParameter &P) {
  for (std::size_t i = 0; i < X.rows(); ++i)
    if (!P.contains(X(i, i))) return false;
  return true;
}

} // namespace

ConditionReport check_conditions(const BlockMatrix &M, int n, const FormParameter &P) {
  int eps = sign_of_n(n);
  PolyMatrix A = M.A(), B = M.B(), C = M.C(), D = M.D();
  PolyMatrix ABd = A * dagger(B), CDd = C * dagger(D);
  ConditionReport r;
  r.unit_sum = (A * dagger(D) + scaled(B * dagger(C), LaurentPoly::constant(eps))) == PolyMatrix::identity(M.g);
  r.skew_ab = skew(ABd, eps);
  r.skew_cd = skew(CDd, eps);
  r.diag_ab = diag_in(ABd, P);
  r.diag_cd = diag_in(CDd, P);
  return r;
}

bool membership_by_conditions(const BlockMatrix &M, int n, const FormParameter &P) {
  return check_conditions(M, n, P).ok();
}

bool membership_by_form(const BlockMatrix &M, const QuadraticModule &Q) {
  if (Q.rank != M.M.rows()) throw Error(ErrorKind::DimensionMismatch, "membership_by_form");
  if (!is_unit(det(M.M))) return false;
  return is_isometry(Q, M.M);
}

const char *family_name(Family f) {
  switch (f) {
  case Family::F1: return "F1";
  case Family::F2: return "F2";
  case Family::F3: return "F3";
  case Family::F4: return "F4";
  case Family::F5: return "F5";
  case Family::F6: return "F6";
  case Family::SIGMA: return "SIGMA";
  }
  return "?";
}

std::string GeneratorSpec::to_string() const {
  std::string s = family_name(family);
  s += "(i=" + std::to_string(i);
  if (family != Family::F5 && family != Family::F6) s += ",j=" + std::to_string(j);
  if (family != Family::SIGMA) s += ",p=" + param.to_string();
  return s + ")";
}

namespace {

// The 4x4 displays in the order (a_1, a_2, b_1, b_2).
PolyMatrix display(Family f, const LaurentPoly &r, int eps) {
  PolyMatrix m = PolyMatrix::identity(4);
  LaurentPoly rb = r.bar();
  LaurentPoly E = LaurentPoly::constant(eps);
  switch (f) {
  case Family::F1:
    m(2, 1) = r;
    m(3, 0) = -(E * rb);
    break;
  case Family::F2:
    m(0, 3) = r;
    m(1, 2) = -(E * rb);
    break;
  case Family::F3:
    m(0, 1) = r;
    m(3, 2) = -rb;
    break;
  case Family::F4:
    m(1, 0) = r;
    m(2, 3) = -rb;
    break;
  case Family::SIGMA:
    m = PolyMatrix(4, 4);
    m(0, 3) = LaurentPoly::constant(-1);
    m(1, 2) = E;
    m(2, 1) = -E;
    m(3, 0) = LaurentPoly::constant(1);
    break;
  default:
    throw Error(ErrorKind::BadParameters, "not a two-index family");
  }
  return m;
}

} // namespace

BlockMatrix instantiate(const GeneratorSpec &s, std::size_t g, int n) {
  int eps = sign_of_n(n);
  PolyMatrix M = PolyMatrix::identity(2 * g);
  if (s.i >= g || s.j >= g) throw Error(ErrorKind::BadParameters, "index beyond genus");
  if (s.family == Family::F5 || s.family == Family::F6) {
    if (!FormParameter::for_n(n).contains(s.param)) throw Error(ErrorKind::BadParameters, "l must lie in the minimal parameter");
    if (s.family == Family::F5) M(s.i, g + s.i) = s.param;
    else M(g + s.i, s.i) = s.param;
    return BlockMatrix(M);
  }
  if (s.i == s.j) throw Error(ErrorKind::BadParameters, "two-index family needs distinct indices");
  PolyMatrix d = display(s.family, s.param, eps);
  std::size_t pos[4] = {s.i, s.j, g + s.i, g + s.j};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) M(pos[a], pos[b]) = d(a, b);
  return BlockMatrix(M);
}

std::vector<GeneratorSpec> elementary_generators(std::size_t g, int n, long window, bool with_sigma) {
  int eps = sign_of_n(n);
  std::vector<LaurentPoly> rs, ls;
  for (long e = -window; e <= window; ++e) {
    rs.push_back(LaurentPoly::t(e));
    rs.push_back(-LaurentPoly::t(e));
  }
  for (long a = 1; a <= window; ++a) {
    LaurentPoly l = min_element(LaurentPoly::t(a), eps);
    ls.push_back(l);
    ls.push_back(-l);
  }
  if (eps == -1) {
    ls.push_back(LaurentPoly::constant(2));
    ls.push_back(LaurentPoly::constant(-2));
  }
  std::vector<GeneratorSpec> out;
  for (Family f : {Family::F1, Family::F2, Family::F3, Family::F4})
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = 0; j < g; ++j) {
        if (i == j) continue;
        for (auto &r : rs) out.push_back({f, r, i, j});
      }
  for (Family f : {Family::F5, Family::F6})
    for (std::size_t i = 0; i < g; ++i)
      for (auto &l : ls) out.push_back({f, l, i, i});
  if (with_sigma)
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = 0; j < g; ++j)
        if (i != j) out.push_back({Family::SIGMA, LaurentPoly(), i, j});
  return out;
}

PolyMatrix sigma_matrix(int n) { return display(Family::SIGMA, LaurentPoly(), sign_of_n(n)); }

std::array<PolyMatrix, 3> sigma_factors(int n) {
  int eps = sign_of_n(n);
  PolyMatrix P = display(Family::F2, LaurentPoly::constant(-1), eps);
  PolyMatrix Q = display(Family::F1, LaurentPoly::constant(-eps), eps);
  return {P, Q, P};
}

bool sigma_factorization_check(int n, std::array<int, 3> order) {
  auto f = sigma_factors(n);
  PolyMatrix prod = f[order[0]] * f[order[1]] * f[order[2]];
  return prod == sigma_matrix(n);
}

mpq_class det_splitting(const BlockMatrix &M) {
  Unit u = unit_decompose(det(M.M));
  mpq_class q(u.exponent, 2);
  q.canonicalize();
  return q;
}

RandomWord random_word(std::size_t g, int n, std::size_t length, std::uint64_t seed, long window) {
  std::mt19937_64 rng(seed);
  auto gens = elementary_generators(g, n, window, true);
  RandomWord w;
  w.matrix = BlockMatrix::identity(g);
  for (std::size_t k = 0; k < length; ++k) {
    const auto &s = gens[rng() % gens.size()];
    w.letters.push_back(s);
    w.matrix = w.matrix * instantiate(s, g, n);
  }
  return w;
}

} // namespace torus
