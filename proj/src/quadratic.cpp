#include "torus/quadratic.hpp"

#include <functional>
#include <numeric>
#include <optional>

#include "torus/snf.hpp"

namespace torus {

namespace {

void check_len(const QuadraticModule &Q, const PolyVec &x) {
  if (x.size() != Q.rank) throw Error(ErrorKind::DimensionMismatch, "vector length " + std::to_string(x.size()) + " vs rank " + std::to_string(Q.rank));
}

Integer choose2(const Integer &c) { return c * (c - 1) / 2; }

} // namespace

bool QuadraticModule::well_formed() const {
  if (gram.rows() != rank || gram.cols() != rank || q_values.size() != rank) return false;
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j)
      if (gram(i, j).bar() != gram(j, i) * Integer(eps())) return false;
  for (std::size_t i = 0; i < rank; ++i)
    if (!parameter.contains(gram(i, i) - q_values[i] - q_values[i].bar() * Integer(eps()))) return false;
  return true;
}

bool QuadraticModule::over_integers() const {
  for (std::size_t i = 0; i < rank; ++i) {
    if (!q_values[i].is_constant()) return false;
    for (std::size_t j = 0; j < rank; ++j)
      if (!gram(i, j).is_constant()) return false;
  }
  return true;
}

LaurentPoly eval_lambda(const QuadraticModule &Q, const PolyVec &x, const PolyVec &y) {
  check_len(Q, x);
  check_len(Q, y);
  LaurentPoly s;
  for (std::size_t j = 0; j < Q.rank; ++j) {
    if (y[j].is_zero()) continue;
    LaurentPoly row;
    for (std::size_t i = 0; i < Q.rank; ++i)
      if (!x[i].is_zero() && !Q.gram(i, j).is_zero()) row += x[i] * Q.gram(i, j);
    if (!row.is_zero()) s += row * y[j].bar();
  }
  return s;
}

QuotientClass eval_q(const QuadraticModule &Q, const PolyVec &x) {
  check_len(Q, x);
  LaurentPoly s;
  for (std::size_t i = 0; i < Q.rank; ++i) {
    const auto &terms = x[i].terms();
    for (std::size_t u = 0; u < terms.size(); ++u) {
      const Integer &c = terms[u].second;
      s += Q.q_values[i] * c;
      s += Q.gram(i, i) * choose2(c);
      for (std::size_t v = u + 1; v < terms.size(); ++v)
        s += Q.gram(i, i).shifted(terms[u].first - terms[v].first) * Integer(c * terms[v].second);
    }
    for (std::size_t j = i + 1; j < Q.rank; ++j)
      if (!x[i].is_zero() && !x[j].is_zero() && !Q.gram(i, j).is_zero()) s += x[i] * Q.gram(i, j) * x[j].bar();
  }
  return {s, Q.parameter};
}

PolyVec basis_vector(std::size_t rank, std::size_t i) {
  PolyVec v(rank);
  v[i] = LaurentPoly::constant(1);
  return v;
}

PolyVec apply(const PolyMatrix &M, const PolyVec &x) {
  if (M.cols() != x.size()) throw Error(ErrorKind::DimensionMismatch, "apply");
  PolyVec y(M.rows());
  for (std::size_t j = 0; j < M.cols(); ++j) {
    if (x[j].is_zero()) continue;
    for (std::size_t i = 0; i < M.rows(); ++i)
      if (!M(i, j).is_zero()) y[i] += M(i, j) * x[j];
  }
  return y;
}

bool is_isometry(const QuadraticModule &Q, const PolyMatrix &M) {
  if (M.rows() != Q.rank || M.cols() != Q.rank) throw Error(ErrorKind::DimensionMismatch, "is_isometry");
  std::vector<PolyVec> img(Q.rank);
  for (std::size_t j = 0; j < Q.rank; ++j) img[j] = M.column(j);
  for (std::size_t i = 0; i < Q.rank; ++i)
    for (std::size_t j = 0; j < Q.rank; ++j)
      if (eval_lambda(Q, img[i], img[j]) != Q.gram(i, j)) return false;
  for (std::size_t i = 0; i < Q.rank; ++i)
    if (eval_q(Q, img[i]) != Q.cls(Q.q_values[i])) return false;
  return true;
}

QuadraticModule zero_form(int n) {
  QuadraticModule Q;
  Q.n = n;
  Q.parameter = FormParameter::for_n(n);
  return Q;
}

QuadraticModule hyperbolic_form(std::size_t g, int n, ParamVariant v) {
  QuadraticModule Q;
  Q.n = n;
  Q.rank = 2 * g;
  Q.parameter = FormParameter::for_n(n, v);
  Q.gram = PolyMatrix(2 * g, 2 * g);
  for (std::size_t i = 0; i < g; ++i) {
    Q.gram(i, g + i) = LaurentPoly::constant(1);
    Q.gram(g + i, i) = LaurentPoly::constant(sign_of_n(n));
  }
  Q.q_values.assign(2 * g, LaurentPoly());
  return Q;
}

QuadraticModule e8_form(int n) {
  if (n % 2 != 0) throw Error(ErrorKind::BadParameters, "E8 is a (+1)-form; n must be even");
  QuadraticModule Q;
  Q.n = n;
  Q.rank = 8;
  Q.parameter = FormParameter::for_n(n);
  Q.gram = PolyMatrix(8, 8);
  const int edges[7][2] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 7}};
  for (std::size_t i = 0; i < 8; ++i) Q.gram(i, i) = LaurentPoly::constant(2);
  for (auto &e : edges) {
    Q.gram(e[0], e[1]) = LaurentPoly::constant(1);
    Q.gram(e[1], e[0]) = LaurentPoly::constant(1);
  }
  Q.q_values.assign(8, LaurentPoly::constant(1));
  return Q;
}

QuadraticModule kervaire_form(int n) {
  if (n % 2 == 0) throw Error(ErrorKind::BadParameters, "K is a (-1)-form; n must be odd");
  QuadraticModule Q;
  Q.n = n;
  Q.rank = 2;
  Q.parameter = FormParameter::for_n(n);
  Q.gram = PolyMatrix(2, 2);
  Q.gram(0, 1) = LaurentPoly::constant(1);
  Q.gram(1, 0) = LaurentPoly::constant(-1);
  Q.q_values.assign(2, LaurentPoly::constant(1));
  return Q;
}

QuadraticModule ortho_sum(const QuadraticModule &a, const QuadraticModule &b) {
  if (a.n != b.n) throw Error(ErrorKind::BadParameters, "orthogonal sum needs equal n");
  QuadraticModule Q;
  Q.n = a.n;
  Q.rank = a.rank + b.rank;
  Q.parameter = a.parameter;
  Q.gram = PolyMatrix(Q.rank, Q.rank);
  Q.gram.set_block(0, 0, a.gram);
  Q.gram.set_block(a.rank, a.rank, b.gram);
  Q.q_values = a.q_values;
  Q.q_values.insert(Q.q_values.end(), b.q_values.begin(), b.q_values.end());
  return Q;
}

QuadraticModule negate(const QuadraticModule &a) {
  QuadraticModule Q = a;
  Q.gram = scaled(a.gram, LaurentPoly::constant(-1));
  for (auto &q : Q.q_values) q = -q;
  return Q;
}

QuadraticModule base_change_to_z(const QuadraticModule &a) {
  QuadraticModule Q = a;
  Q.gram = to_poly(augment(a.gram));
  for (auto &q : Q.q_values) q = LaurentPoly::constant(q.augmentation());
  return Q;
}

ShanesonImage shaneson_image(const QuadraticModule &M) {
  if (!M.over_integers()) throw Error(ErrorKind::BadParameters, "shaneson_image expects a form over Z");
  Integer d = det(augment(M.gram));
  if (d != 1 && d != -1) throw Error(ErrorKind::SingularForm, "det(gram) = " + d.get_str());
  ShanesonImage s;
  s.Q = ortho_sum(M, negate(M));
  s.U = PolyMatrix::identity(2 * M.rank);
  for (std::size_t i = M.rank; i < 2 * M.rank; ++i) s.U(i, i) = LaurentPoly::t(1);
  return s;
}

namespace {

using LVec = std::vector<long>;

struct IntForm {
  std::vector<LVec> G;
  LVec q;
  FormParameter P;
  std::size_t r = 0;

  long lambda(const LVec &x, const LVec &y) const {
    long s = 0;
    for (std::size_t i = 0; i < r; ++i) {
      if (!x[i]) continue;
      for (std::size_t j = 0; j < r; ++j) s += x[i] * G[i][j] * y[j];
    }
    return s;
  }
  long qv(const LVec &x) const {
    long s = 0;
    for (std::size_t i = 0; i < r; ++i) {
      s += x[i] * q[i] + x[i] * (x[i] - 1) / 2 * G[i][i];
      for (std::size_t j = i + 1; j < r; ++j) s += x[i] * G[i][j] * x[j];
    }
    return s;
  }
  bool q_zero(const LVec &x) const { return P.contains(LaurentPoly::constant(qv(x))); }
  // restriction to the sublattice spanned by the columns of B
  IntForm restrict(const std::vector<LVec> &B) const {
    IntForm f;
    f.P = P;
    f.r = B.size();
    f.G.assign(f.r, LVec(f.r));
    f.q.assign(f.r, 0);
    for (std::size_t i = 0; i < f.r; ++i) {
      f.q[i] = qv(B[i]);
      for (std::size_t j = 0; j < f.r; ++j) f.G[i][j] = lambda(B[i], B[j]);
    }
    return f;
  }
};

long gcd_all(const LVec &x) {
  long g = 0;
  for (long v : x) g = std::gcd(g, v);
  return g;
}

// Box search ordered by support size; the first nonzero coordinate is positive.
template <class Accept>
std::optional<LVec> box_search(std::size_t r, long bound, std::size_t max_support, std::size_t &budget, Accept accept) {
  LVec x(r, 0);
  std::vector<std::size_t> support;
  std::optional<LVec> hit;
  std::function<bool(std::size_t)> fill = [&](std::size_t pos) -> bool {
    if (pos == support.size()) {
      if (budget == 0) return true;
      --budget;
      if (gcd_all(x) == 1 && accept(x)) hit = x;
      return hit.has_value();
    }
    for (long c = (pos == 0 ? 1 : -bound); c <= bound; ++c) {
      if (c == 0) continue;
      x[support[pos]] = c;
      if (fill(pos + 1)) return true;
    }
    x[support[pos]] = 0;
    return false;
  };
  std::function<bool(std::size_t, std::size_t)> choose = [&](std::size_t start, std::size_t need) -> bool {
    if (need == 0) return fill(0);
    for (std::size_t i = start; i + need <= r; ++i) {
      support.push_back(i);
      if (choose(i + 1, need - 1)) return true;
      support.pop_back();
    }
    return false;
  };
  for (std::size_t s = 1; s <= max_support && !hit && budget; ++s) {
    support.clear();
    choose(0, s);
  }
  return hit;
}

LVec combine(const std::vector<LVec> &B, const LVec &x, std::size_t ambient) {
  LVec v(ambient, 0);
  for (std::size_t k = 0; k < B.size(); ++k)
    if (x[k])
      for (std::size_t i = 0; i < ambient; ++i) v[i] += x[k] * B[k][i];
  return v;
}

} // namespace

IntMatrix hyperbolize(const QuadraticModule &Q, long bound) {
  if (!Q.over_integers()) throw Error(ErrorKind::BadParameters, "hyperbolize expects a form over Z");
  if (Q.rank % 2) throw Error(ErrorKind::BadParameters, "odd rank");
  Integer dt = det(augment(Q.gram));
  if (dt != 1 && dt != -1) throw Error(ErrorKind::SingularForm, "det(gram) = " + dt.get_str());
  const std::size_t r = Q.rank, g = r / 2;
  const long eps = Q.eps();
  IntForm ambient;
  ambient.r = r;
  ambient.P = Q.parameter;
  ambient.G.assign(r, LVec(r));
  ambient.q.assign(r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    ambient.q[i] = Q.q_values[i].augmentation().get_si();
    for (std::size_t j = 0; j < r; ++j) ambient.G[i][j] = Q.gram(i, j).augmentation().get_si();
  }
  // current complement: basis B (ambient columns) and the restricted form F
  std::vector<LVec> B(r, LVec(r, 0));
  for (std::size_t i = 0; i < r; ++i) B[i][i] = 1;
  IntForm F = ambient;
  std::vector<LVec> as, bs;
  std::size_t budget = 20000000;
  for (std::size_t step = 0; step < g; ++step) {
    std::size_t m = F.r;
    auto iso = box_search(m, bound, m, budget, [&](const LVec &x) { return F.lambda(x, x) == 0 && F.q_zero(x); });
    if (!iso) throw Error(ErrorKind::SearchExhausted, "no isotropic vector in box of radius " + std::to_string(bound) + " at step " + std::to_string(step));
    LVec v = *iso;
    LVec w;
    if (auto y = box_search(m, bound, std::min<std::size_t>(m, 3), budget, [&](const LVec &y) { return F.lambda(v, y) == 1; })) {
      w = *y;
    } else {
      IntMatrix ell(1, m);
      for (std::size_t j = 0; j < m; ++j) {
        LVec e(m, 0);
        e[j] = 1;
        ell(0, j) = F.lambda(v, e);
      }
      auto coef = solve_in_span(ell, {Integer(1)});
      if (!coef) throw Error(ErrorKind::SingularForm, "isotropic vector has no dual partner");
      w.assign(m, 0);
      for (std::size_t j = 0; j < m; ++j) w[j] = (*coef)[j].get_si();
    }
    long c = eps * F.qv(w);
    for (std::size_t i = 0; i < m; ++i) w[i] -= c * v[i];
    as.push_back(combine(B, v, r));
    bs.push_back(combine(B, w, r));
    if (step + 1 == g) break;
    // projections of the current basis onto the complement of (v, w)
    auto project = [&](std::size_t k) {
      LVec e(m, 0);
      e[k] = 1;
      long al = F.lambda(e, w), be = eps * F.lambda(e, v);
      for (std::size_t i = 0; i < m; ++i) e[i] -= al * v[i] + be * w[i];
      return e;
    };
    std::size_t p = m, q = m;
    for (std::size_t i = 0; i < m && p == m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        long mn = v[i] * w[j] - v[j] * w[i];
        if (mn == 1 || mn == -1) {
          p = i;
          q = j;
          break;
        }
      }
    std::vector<LVec> local;
    if (p < m) {
      for (std::size_t k = 0; k < m; ++k)
        if (k != p && k != q) local.push_back(project(k));
    } else {
      IntMatrix cons(2, m);
      for (std::size_t j = 0; j < m; ++j) {
        LVec e(m, 0);
        e[j] = 1;
        cons(0, j) = F.lambda(e, v);
        cons(1, j) = F.lambda(e, w);
      }
      IntMatrix K = kernel_basis(cons);
      for (std::size_t j = 0; j < K.cols(); ++j) {
        LVec col(m);
        for (std::size_t i = 0; i < m; ++i) col[i] = K(i, j).get_si();
        local.push_back(col);
      }
    }
    std::vector<LVec> nb;
    for (auto &l : local) nb.push_back(combine(B, l, r));
    F = F.restrict(local);
    B = std::move(nb);
  }
  IntMatrix P(r, r);
  for (std::size_t k = 0; k < g; ++k)
    for (std::size_t i = 0; i < r; ++i) {
      P(i, k) = as[k][i];
      P(i, g + k) = bs[k][i];
    }
  if (!certify_hyperbolic(Q, P)) throw Error(ErrorKind::SearchExhausted, "candidate basis failed certification");
  return P;
}

bool certify_hyperbolic(const QuadraticModule &Q, const IntMatrix &P) {
  if (!is_unimodular(P)) return false;
  QuadraticModule H = hyperbolic_form(Q.rank / 2, Q.n, Q.parameter.variant);
  IntMatrix G = augment(Q.gram);
  if (P.transpose() * G * P != augment(H.gram)) return false;
  PolyMatrix PP = to_poly(P);
  for (std::size_t j = 0; j < Q.rank; ++j)
    if (!eval_q(Q, PP.column(j)).is_zero()) return false;
  return true;
}

} // namespace torus
