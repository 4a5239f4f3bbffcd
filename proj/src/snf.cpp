#include "torus/snf.hpp"

#include <algorithm>

namespace torus {

std::vector<Integer> SNFResult::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

namespace {

struct Reducer {
  IntMatrix A, U, Uinv, V;
  bool track;
  std::size_t m, n;

  Reducer(const IntMatrix &M, bool tr) : A(M), track(tr), m(M.rows()), n(M.cols()) {
    if (track) {
      U = IntMatrix::identity(m);
      Uinv = IntMatrix::identity(m);
      V = IntMatrix::identity(n);
    }
  }

  // row i += q * row k
  void row_add(std::size_t i, std::size_t k, const Integer &q) {
    for (std::size_t j = 0; j < n; ++j)
      if (A(k, j) != 0) A(i, j) += q * A(k, j);
    if (!track) return;
    for (std::size_t j = 0; j < m; ++j)
      if (U(k, j) != 0) U(i, j) += q * U(k, j);
    for (std::size_t j = 0; j < m; ++j)
      if (Uinv(j, i) != 0) Uinv(j, k) -= q * Uinv(j, i);
  }
  // col j += q * col k
  void col_add(std::size_t j, std::size_t k, const Integer &q) {
    for (std::size_t i = 0; i < m; ++i)
      if (A(i, k) != 0) A(i, j) += q * A(i, k);
    if (!track) return;
    for (std::size_t i = 0; i < n; ++i)
      if (V(i, k) != 0) V(i, j) += q * V(i, k);
  }
  void row_swap(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < n; ++j) std::swap(A(i, j), A(k, j));
    if (!track) return;
    for (std::size_t j = 0; j < m; ++j) std::swap(U(i, j), U(k, j));
    for (std::size_t j = 0; j < m; ++j) std::swap(Uinv(j, i), Uinv(j, k));
  }
  void col_swap(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < m; ++i) std::swap(A(i, j), A(i, k));
    if (!track) return;
    for (std::size_t i = 0; i < n; ++i) std::swap(V(i, j), V(i, k));
  }
  void row_negate(std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) A(i, j) = -A(i, j);
    if (!track) return;
    for (std::size_t j = 0; j < m; ++j) U(i, j) = -U(i, j);
    for (std::size_t j = 0; j < m; ++j) Uinv(j, i) = -Uinv(j, i);
  }

  bool pivot_min(std::size_t t) {
    bool found = false;
    std::size_t bi = 0, bj = 0;
    Integer best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        const Integer &v = A(i, j);
        if (v == 0) continue;
        if (!found || mpz_cmpabs(v.get_mpz_t(), best.get_mpz_t()) < 0) {
          best = abs(v);
          bi = i;
          bj = j;
          found = true;
          if (best == 1) goto done;
        }
      }
  done:
    if (!found) return false;
    row_swap(t, bi);
    col_swap(t, bj);
    return true;
  }

  void run() {
    std::size_t lim = std::min(m, n);
    for (std::size_t t = 0; t < lim; ++t) {
      if (!pivot_min(t)) break;
      while (true) {
        bool clean = true;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (A(i, t) == 0) continue;
          Integer q;
          mpz_fdiv_q(q.get_mpz_t(), A(i, t).get_mpz_t(), A(t, t).get_mpz_t());
          row_add(i, t, -q);
          if (A(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (A(t, j) == 0) continue;
          Integer q;
          mpz_fdiv_q(q.get_mpz_t(), A(t, j).get_mpz_t(), A(t, t).get_mpz_t());
          col_add(j, t, -q);
          if (A(t, j) != 0) clean = false;
        }
        if (!clean) {
          // bring the smallest leftover in row/column t to the pivot
          std::size_t bi = t, bj = t;
          Integer best = abs(A(t, t));
          for (std::size_t i = t + 1; i < m; ++i)
            if (A(i, t) != 0 && mpz_cmpabs(A(i, t).get_mpz_t(), best.get_mpz_t()) < 0) {
              best = abs(A(i, t));
              bi = i;
              bj = t;
            }
          for (std::size_t j = t + 1; j < n; ++j)
            if (A(t, j) != 0 && mpz_cmpabs(A(t, j).get_mpz_t(), best.get_mpz_t()) < 0) {
              best = abs(A(t, j));
              bi = t;
              bj = j;
            }
          row_swap(t, bi);
          col_swap(t, bj);
          continue;
        }
        bool divides = true;
        for (std::size_t i = t + 1; i < m && divides; ++i)
          for (std::size_t j = t + 1; j < n; ++j)
            if (A(i, j) != 0 && !mpz_divisible_p(A(i, j).get_mpz_t(), A(t, t).get_mpz_t())) {
              row_add(t, i, 1);
              divides = false;
              break;
            }
        if (divides) break;
      }
      if (A(t, t) < 0) row_negate(t);
    }
  }
};

} // namespace

SNFResult smith_normal_form(const IntMatrix &M, bool track) {
  Reducer r(M, track);
  r.run();
  SNFResult res;
  res.D = std::move(r.A);
  res.U = std::move(r.U);
  res.Uinv = std::move(r.Uinv);
  res.V = std::move(r.V);
  for (std::size_t i = 0; i < std::min(M.rows(), M.cols()); ++i)
    if (res.D(i, i) != 0) ++res.rank;
  return res;
}

Integer AbelianGroup::order() const {
  if (free_rank) return 0;
  Integer o = 1;
  for (auto &t : torsion) o *= t;
  return o;
}

std::string AbelianGroup::to_string() const {
  std::string s;
  if (free_rank == 1) s = "Z";
  else if (free_rank > 1) s = "Z^" + std::to_string(free_rank);
  for (auto &t : torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + t.get_str();
  }
  return s.empty() ? "0" : s;
}

AbelianGroup AbelianGroup::cyclic(const Integer &m) { return group_from_orders({m}); }

AbelianGroup group_from_orders(const std::vector<Integer> &orders) {
  IntMatrix d(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) d(i, i) = orders[i];
  return cokernel(d);
}

AbelianGroup direct_sum(const AbelianGroup &a, const AbelianGroup &b) {
  std::vector<Integer> o;
  for (std::size_t i = 0; i < a.free_rank + b.free_rank; ++i) o.push_back(0);
  for (auto &t : a.torsion) o.push_back(t);
  for (auto &t : b.torsion) o.push_back(t);
  return group_from_orders(o);
}

AbelianGroup cokernel(const IntMatrix &rels) {
  AbelianGroup g;
  if (rels.cols() == 0) {
    g.free_rank = rels.rows();
    return g;
  }
  auto s = smith_normal_form(rels, false);
  g.free_rank = rels.rows() - s.rank;
  for (std::size_t i = 0; i < s.rank; ++i)
    if (s.D(i, i) != 1) g.torsion.push_back(s.D(i, i));
  return g;
}

bool is_unimodular(const IntMatrix &m) {
  if (m.rows() != m.cols()) return false;
  Integer d = det(m);
  return d == 1 || d == -1;
}

bool divisibility_chain(const IntMatrix &d) {
  std::size_t k = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (d(i, i) < 0) return false;
    if (i + 1 < k) {
      if (d(i, i) == 0 && d(i + 1, i + 1) != 0) return false;
      if (d(i, i) != 0 && !mpz_divisible_p(d(i + 1, i + 1).get_mpz_t(), d(i, i).get_mpz_t())) return false;
    }
  }
  return true;
}

IntMatrix kernel_basis(const IntMatrix &m) {
  auto s = smith_normal_form(m, true);
  IntMatrix k(m.cols(), m.cols() - s.rank);
  for (std::size_t j = s.rank; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.cols(); ++i) k(i, j - s.rank) = s.V(i, j);
  return k;
}

IntMatrix column_span_basis(const IntMatrix &m) {
  auto s = smith_normal_form(m, true);
  IntMatrix b(m.rows(), s.rank);
  for (std::size_t j = 0; j < s.rank; ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) b(i, j) = s.Uinv(i, j) * s.D(j, j);
  return b;
}

std::optional<std::vector<Integer>> solve_in_span(const IntMatrix &m, const std::vector<Integer> &v) {
  if (v.size() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "solve_in_span");
  auto s = smith_normal_form(m, true);
  std::vector<Integer> uv(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) uv[i] += s.U(i, j) * v[j];
  std::vector<Integer> y(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i < s.rank) {
      if (!mpz_divisible_p(uv[i].get_mpz_t(), s.D(i, i).get_mpz_t())) return std::nullopt;
      y[i] = uv[i] / s.D(i, i);
    } else if (uv[i] != 0) {
      return std::nullopt;
    }
  }
  std::vector<Integer> x(m.cols());
  for (std::size_t i = 0; i < m.cols(); ++i)
    for (std::size_t j = 0; j < s.rank; ++j) x[i] += s.V(i, j) * y[j];
  return x;
}

IntMatrix hconcat(const IntMatrix &a, const IntMatrix &b) {
  if (a.rows() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "hconcat");
  IntMatrix c(a.rows(), a.cols() + b.cols());
  c.set_block(0, 0, a);
  c.set_block(0, a.cols(), b);
  return c;
}

bool InducedMap::is_zero() const { return matrix.is_zero_matrix(); }

namespace {

std::vector<Integer> cyclic_orders(const SNFResult &s, std::size_t rows, std::vector<std::size_t> &kept) {
  std::vector<Integer> o;
  for (std::size_t i = 0; i < rows; ++i) {
    Integer d = i < s.rank ? s.D(i, i) : Integer(0);
    if (d == 1) continue;
    kept.push_back(i);
    o.push_back(d);
  }
  return o;
}

} // namespace

InducedMap map_on_cokernels(const IntMatrix &f, const IntMatrix &relsA, const IntMatrix &relsB) {
  if (f.cols() != relsA.rows() || f.rows() != relsB.rows())
    throw Error(ErrorKind::DimensionMismatch, "map_on_cokernels");
  IntMatrix img = f * relsA;
  auto sB = smith_normal_form(relsB, true);
  auto sA = smith_normal_form(relsA, true);
  for (std::size_t j = 0; j < img.cols(); ++j) {
    std::vector<Integer> uv(relsB.rows());
    for (std::size_t i = 0; i < relsB.rows(); ++i)
      for (std::size_t k = 0; k < relsB.rows(); ++k) uv[i] += sB.U(i, k) * img(k, j);
    for (std::size_t i = 0; i < relsB.rows(); ++i) {
      bool ok = i < sB.rank ? mpz_divisible_p(uv[i].get_mpz_t(), sB.D(i, i).get_mpz_t()) != 0 : uv[i] == 0;
      if (!ok) throw Error(ErrorKind::NotWellDefined, "relation " + std::to_string(j) + " is not sent into the target relations");
    }
  }
  InducedMap out;
  std::vector<std::size_t> keptA, keptB;
  out.source_orders = cyclic_orders(sA, relsA.rows(), keptA);
  out.target_orders = cyclic_orders(sB, relsB.rows(), keptB);
  out.source = group_from_orders(out.source_orders);
  out.target = group_from_orders(out.target_orders);
  out.matrix = IntMatrix(keptB.size(), keptA.size());
  IntMatrix ufu = sB.U * f * sA.Uinv;
  for (std::size_t a = 0; a < keptA.size(); ++a)
    for (std::size_t b = 0; b < keptB.size(); ++b) {
      Integer v = ufu(keptB[b], keptA[a]);
      const Integer &o = out.target_orders[b];
      if (o != 0) mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), o.get_mpz_t());
      out.matrix(b, a) = v;
    }
  return out;
}

Integer strip_primes(Integer m, const Integer &d) {
  if (m == 0) return 0;
  m = abs(m);
  Integer g;
  while (true) {
    mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), d.get_mpz_t());
    if (g == 1) break;
    m /= g;
  }
  return m;
}

AbelianGroup invert(const AbelianGroup &g, const Integer &d) {
  AbelianGroup h;
  h.free_rank = g.free_rank;
  for (auto &t : g.torsion) {
    Integer s = strip_primes(t, d);
    if (s != 1) h.torsion.push_back(s);
  }
  return h;
}

namespace {

bool vanishes_after_inverting(const AbelianGroup &g, const Integer &d) { return invert(g, d).is_trivial(); }

} // namespace

bool epi_after_inverting(const IntMatrix &f, const IntMatrix &rels, const Integer &d) {
  return vanishes_after_inverting(cokernel(hconcat(f, rels)), d);
}

AbelianGroup kernel_group(const IntMatrix &f, const IntMatrix &rels) {
  std::size_t s = f.rows();
  IntMatrix k = kernel_basis(hconcat(f, rels));
  IntMatrix proj(s, k.cols());
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < k.cols(); ++j) proj(i, j) = k(i, j);
  IntMatrix basis = column_span_basis(proj);
  IntMatrix coords(basis.cols(), rels.cols());
  for (std::size_t j = 0; j < rels.cols(); ++j) {
    auto x = solve_in_span(basis, rels.column(j));
    if (!x) throw Error(ErrorKind::NotWellDefined, "endomorphism does not preserve the relations");
    for (std::size_t i = 0; i < basis.cols(); ++i) coords(i, j) = (*x)[i];
  }
  return cokernel(coords);
}

bool mono_after_inverting(const IntMatrix &f, const IntMatrix &rels, const Integer &d) {
  return vanishes_after_inverting(kernel_group(f, rels), d);
}

bool iso_after_inverting(const IntMatrix &f, const IntMatrix &rels, const Integer &d) {
  return epi_after_inverting(f, rels, d) && mono_after_inverting(f, rels, d);
}

} // namespace torus

namespace torus {

namespace {

// x := a*x + b*y
SparseRow combine(const Integer &a, const SparseRow &x, const Integer &b, const SparseRow &y) {
  SparseRow out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    Integer v;
    std::size_t c;
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      c = x[i].first;
      v = a * x[i++].second;
    } else if (i == x.size() || y[j].first < x[i].first) {
      c = y[j].first;
      v = b * y[j++].second;
    } else {
      c = x[i].first;
      v = a * x[i++].second + b * y[j++].second;
    }
    if (v != 0) out.emplace_back(c, std::move(v));
  }
  return out;
}

} // namespace

bool SparseLattice::add(SparseRow r) {
  bool grew = false;
  while (!r.empty()) {
    std::size_t c = r.front().first;
    if (c >= dim_) throw Error(ErrorKind::DimensionMismatch, "row index beyond lattice dimension");
    auto it = pivots_.find(c);
    if (it == pivots_.end()) {
      if (r.front().second < 0)
        for (auto &e : r) e.second = -e.second;
      pivots_.emplace(c, std::move(r));
      return true;
    }
    SparseRow &p = it->second;
    const Integer a = p.front().second, b = r.front().second;
    if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
      r = combine(1, r, -(b / a), p);
      continue;
    }
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    SparseRow np = combine(s, p, t, r);
    r = combine(a / g, r, -(b / g), p);
    if (np.front().second < 0)
      for (auto &e : np) e.second = -e.second;
    p = std::move(np);
    grew = true;
  }
  return grew;
}

bool SparseLattice::contains(SparseRow r) const {
  while (!r.empty()) {
    auto it = pivots_.find(r.front().first);
    if (it == pivots_.end()) return false;
    const Integer &a = it->second.front().second, &b = r.front().second;
    if (!mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) return false;
    r = combine(1, r, -(b / a), it->second);
  }
  return true;
}

IntMatrix SparseLattice::basis_columns() const {
  IntMatrix m(dim_, pivots_.size());
  std::size_t j = 0;
  for (auto &[c, row] : pivots_) {
    for (auto &[i, v] : row) m(i, j) = v;
    ++j;
  }
  return m;
}

} // namespace torus
