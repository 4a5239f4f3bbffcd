#include "torus/coinvariants.hpp"

#include <algorithm>
#include <cstdlib>

namespace torus {

TensorLabel swap_label(const TensorLabel &l) {
  auto [e, i, j] = l;
  return {-e, j, i};
}

Tensor tensor_product(const PolyVec &x, const PolyVec &y, const Integer &c) {
  Tensor t;
  for (std::size_t p = 0; p < x.size(); ++p)
    for (auto &[a, u] : x[p].terms())
      for (std::size_t q = 0; q < y.size(); ++q)
        for (auto &[b, v] : y[q].terms()) {
          Integer &slot = t[{a - b, p, q}];
          slot += c * u * v;
          if (slot == 0) t.erase({a - b, p, q});
        }
  return t;
}

Tensor act_on_tensor(const PolyMatrix &M, const Tensor &t) {
  Tensor out;
  for (auto &[l, c] : t) {
    auto [e, i, j] = l;
    PolyVec x = M.column(i);
    for (auto &p : x) p = p.shifted(e);
    for (auto &[k, v] : tensor_product(x, M.column(j), c)) {
      Integer &slot = out[k];
      slot += v;
      if (slot == 0) out.erase(k);
    }
  }
  return out;
}

SymTensorModule::SymTensorModule(int sign_, int n_, std::size_t g_, long window_)
    : sign(sign_), n(n_), g(g_), window(window_) {
  if (sign != 1 && sign != -1) throw Error(ErrorKind::BadParameters, "sign must be +1 or -1");
  if (window < 0) throw Error(ErrorKind::BadParameters, "window must be non-negative");
  for (long e = -window; e <= window; ++e)
    for (std::size_t i = 0; i < 2 * g; ++i)
      for (std::size_t j = 0; j < 2 * g; ++j) {
        TensorLabel l{e, i, j}, s = swap_label(l);
        if (s < l) continue;
        if (s == l && sign < 0) continue;
        index[l] = basis.size();
        basis.push_back(l);
      }
}

Tensor SymTensorModule::element(std::size_t k) const {
  const TensorLabel &l = basis.at(k);
  Tensor t{{l, 1}};
  TensorLabel s = swap_label(l);
  if (s != l) t[s] = sign;
  return t;
}

Tensor SymTensorModule::to_tensor(const SparseRow &v) const {
  Tensor t;
  for (auto &[k, c] : v)
    for (auto &[l, u] : element(k)) {
      Integer &slot = t[l];
      slot += c * u;
      if (slot == 0) t.erase(l);
    }
  return t;
}

SparseRow SymTensorModule::from_tensor(const Tensor &t) const {
  for (auto &[l, c] : t)
    if (std::labs(std::get<0>(l)) > window) throw Error(ErrorKind::WindowOverflow, "tensor leaves the degree window");
  SparseRow out;
  for (auto &[l, c] : t) {
    TensorLabel s = swap_label(l);
    if (s == l) {
      if (sign < 0) throw Error(ErrorKind::BadParameters, "tensor is not swap-antisymmetric");
      out.emplace_back(index.at(l), c);
      continue;
    }
    auto it = t.find(s);
    Integer cs = it == t.end() ? Integer(0) : it->second;
    if (cs != sign * c) throw Error(ErrorKind::BadParameters, "tensor is not in the symmetric submodule");
    if (l < s) out.emplace_back(index.at(l), c);
  }
  std::sort(out.begin(), out.end(), [](auto &a, auto &b) { return a.first < b.first; });
  return out;
}

std::string SymTensorModule::label_string(std::size_t k) const {
  auto [e, i, j] = basis.at(k);
  auto name = [&](std::size_t x) { return std::string(x < g ? "a" : "b") + std::to_string(x % g + 1); };
  std::string s = "t^" + std::to_string(e) + " " + name(i) + "(x)" + name(j);
  if (swap_label(basis[k]) != basis[k])
    s += (sign > 0 ? " + " : " - ") + std::string("t^") + std::to_string(-e) + " " + name(j) + "(x)" + name(i);
  return s;
}

SparseRow act(const BlockMatrix &M, const SymTensorModule &S, const SparseRow &x) {
  return S.from_tensor(act_on_tensor(M.M, S.to_tensor(x)));
}

Tensor witness_tensor(int sign, std::size_t g, long e, std::size_t pair) {
  Tensor t;
  t[{e, pair, g + pair}] += 1;
  t[{-e, g + pair, pair}] += sign;
  return t;
}

LaurentPoly lambda_invariant(const Tensor &t, std::size_t g, int n) {
  LaurentPoly out;
  for (auto &[l, c] : t) {
    auto [e, i, j] = l;
    if (i < g && j == i + g) out.add_term(c, e);
    else if (i >= g && j == i - g) out.add_term(c * sign_of_n(n), e);
  }
  return out;
}

LaurentPoly lambda_invariant(const SymTensorModule &S, const SparseRow &x) {
  return lambda_invariant(S.to_tensor(x), S.g, S.n);
}

int phi_invariant(const Tensor &t, std::size_t g) {
  Integer s = 0;
  for (auto &[l, c] : t) {
    auto [e, i, j] = l;
    if (i < g && j == i + g) s += c;
  }
  return mpz_odd_p(s.get_mpz_t()) ? 1 : 0;
}

int phi_invariant(const SymTensorModule &S, const SparseRow &x) {
  if (S.sign != -sign_of_n(S.n)) throw Error(ErrorKind::WrongParity, "phi is defined only for sign (-1)^(n+1)");
  return phi_invariant(S.to_tensor(x), S.g);
}

std::vector<GeneratorSpec> coinvariant_generators(std::size_t g, int n) { return elementary_generators(g, n, 2, true); }

Presentation presentation_H(int n, std::size_t g, long window, const std::vector<GeneratorSpec> &gens) {
  const std::size_t r = 2 * g;
  Presentation P;
  P.dim = r * (2 * window + 1);
  for (auto &spec : gens) {
    PolyMatrix M = instantiate(spec, g, n).M;
    for (long e = -window; e <= window; ++e)
      for (std::size_t i = 0; i < r; ++i) {
        std::map<std::size_t, Integer> rel;
        bool overflow = false;
        for (std::size_t p = 0; p < r && !overflow; ++p)
          for (auto &[a, c] : M(p, i).terms()) {
            long f = e + a;
            if (std::labs(f) > window) {
              overflow = true;
              break;
            }
            rel[(f + window) * r + p] += c;
          }
        if (overflow) {
          ++P.discarded;
          continue;
        }
        rel[(e + window) * r + i] -= 1;
        SparseRow row;
        for (auto &[k, c] : rel)
          if (c != 0) row.emplace_back(k, c);
        if (!row.empty()) P.relations.push_back(std::move(row));
      }
  }
  return P;
}

namespace {

SparseRow difference(SparseRow x, const SparseRow &y) {
  std::map<std::size_t, Integer> m;
  for (auto &[k, c] : x) m[k] += c;
  for (auto &[k, c] : y) m[k] -= c;
  SparseRow out;
  for (auto &[k, c] : m)
    if (c != 0) out.emplace_back(k, c);
  return out;
}

IntMatrix lattice_of(const Presentation &P) {
  SparseLattice L(P.dim);
  for (auto &r : P.relations) L.add(r);
  IntMatrix E = L.basis_columns();
  if (E.cols() == 0) E = IntMatrix(P.dim, 1);
  return E;
}

} // namespace

Presentation presentation_S(const SymTensorModule &S, const std::vector<GeneratorSpec> &gens) {
  Presentation P;
  P.dim = S.rank();
  for (auto &spec : gens) {
    BlockMatrix M = instantiate(spec, S.g, S.n);
    for (std::size_t k = 0; k < S.rank(); ++k) {
      SparseRow x{{k, Integer(1)}};
      try {
        SparseRow rel = difference(act(M, S, x), x);
        if (!rel.empty()) P.relations.push_back(std::move(rel));
      } catch (const Error &err) {
        if (err.kind() != ErrorKind::WindowOverflow) throw;
        ++P.discarded;
      }
    }
  }
  return P;
}

CoinvariantResult coinvariants_H(int n, std::size_t g, long window, std::optional<std::vector<GeneratorSpec>> gens) {
  if (g < 2) throw Error(ErrorKind::BadParameters, "coinvariants of H need g >= 2");
  Presentation P = presentation_H(n, g, window, gens ? *gens : coinvariant_generators(g, n));
  CoinvariantResult r;
  r.computed = cokernel(lattice_of(P));
  r.predicted = AbelianGroup{};
  r.match = r.computed == r.predicted;
  r.witnesses_generate = r.computed.is_trivial();
  r.relations = P.relations.size();
  r.discarded = P.discarded;
  return r;
}

AbelianGroup predicted_S(int sign, int n, long window) {
  AbelianGroup a = AbelianGroup::free(static_cast<std::size_t>(window));
  if (sign == -sign_of_n(n)) return direct_sum(a, AbelianGroup::cyclic(2));
  return direct_sum(a, AbelianGroup::free(1));
}

CoinvariantResult coinvariants_S(int sign, int n, std::size_t g, long window, std::optional<std::vector<GeneratorSpec>> gens) {
  if (g < 2) throw Error(ErrorKind::BadParameters, "coinvariants of S need g >= 2");
  SymTensorModule S(sign, n, g, window);
  Presentation P = presentation_S(S, gens ? *gens : coinvariant_generators(g, n));
  IntMatrix E = lattice_of(P);

  CoinvariantResult r;
  r.computed = cokernel(E);
  r.predicted = predicted_S(sign, n, window);
  r.match = r.computed == r.predicted;
  r.relations = P.relations.size();
  r.discarded = P.discarded;

  // predicted generators: X_1..X_D, then X_0
  const std::size_t m = static_cast<std::size_t>(window) + 1;
  const bool torsion = sign == -sign_of_n(n);
  IntMatrix f(S.rank(), m), relsP(m, 1);
  std::vector<std::string> names;
  for (std::size_t c = 0; c < m; ++c) {
    long e = c + 1 < m ? static_cast<long>(c + 1) : 0;
    for (auto &[k, v] : S.from_tensor(witness_tensor(sign, g, e))) f(k, c) = v;
    if (e == 0) names.push_back(torsion ? "phi" : "2t^0");
    else names.push_back(lambda_invariant(witness_tensor(sign, g, e), g, n).to_string());
  }
  if (torsion) relsP(m - 1, 0) = 2;
  r.witnesses_generate = cokernel(hconcat(f, E)).is_trivial();
  InducedMap im = map_on_cokernels(f, relsP, E);
  for (std::size_t c = 0; c < m; ++c) {
    Witness w{names[c], {}};
    for (std::size_t i = 0; i < im.matrix.rows(); ++i) w.image.push_back(im.matrix(i, c));
    r.witness.push_back(std::move(w));
  }
  return r;
}

} // namespace torus
