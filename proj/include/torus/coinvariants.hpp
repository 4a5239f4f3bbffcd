#pragma once
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "torus/snf.hpp"
#include "torus/unitary.hpp"

namespace torus {

// t^e x_i (x) x_j in the tensor square over Z[pi]; t^a x (x) t^b y = t^{a-b} x (x) y.
using TensorLabel = std::tuple<long, std::size_t, std::size_t>;
using Tensor = std::map<TensorLabel, Integer>;

TensorLabel swap_label(const TensorLabel &l);
// sum of c * (x (x) y) over the given coordinate vectors
Tensor tensor_product(const PolyVec &x, const PolyVec &y, const Integer &c = 1);
Tensor act_on_tensor(const PolyMatrix &M, const Tensor &t);

// Truncated S^+ (sign = +1) or S^- (sign = -1) inside the tensor square of pi_n(X_g).
struct SymTensorModule {
  int sign = 1;
  int n = 3;
  std::size_t g = 3;
  long window = 4;
  std::vector<TensorLabel> basis; // representative label of each basis element
  std::map<TensorLabel, std::size_t> index;

  SymTensorModule(int sign, int n, std::size_t g, long window);
  std::size_t rank() const { return basis.size(); }
  // basis element k as a tensor: l + sign * swap(l), or l alone when l is swap-fixed
  Tensor element(std::size_t k) const;
  Tensor to_tensor(const SparseRow &v) const;
  // Throws WindowOverflow outside the window, BadParameters when not in S.
  SparseRow from_tensor(const Tensor &t) const;
  std::string label_string(std::size_t k) const;
};

SparseRow act(const BlockMatrix &M, const SymTensorModule &S, const SparseRow &x);

// Witness generators t^e a_1 (x) b_1 + sign t^-e b_1 (x) a_1.
Tensor witness_tensor(int sign, std::size_t g, long e, std::size_t pair = 0);

LaurentPoly lambda_invariant(const Tensor &t, std::size_t g, int n);
LaurentPoly lambda_invariant(const SymTensorModule &S, const SparseRow &x);
// Mod 2 contraction with f(a_i, b_j) = delta_ij.
int phi_invariant(const Tensor &t, std::size_t g);
int phi_invariant(const SymTensorModule &S, const SparseRow &x);

struct Presentation {
  std::size_t dim = 0;
  std::vector<SparseRow> relations;
  std::size_t discarded = 0;
};

struct Witness {
  std::string name;
  std::vector<Integer> image; // coordinates in the invariant-factor generators of `computed`
};

struct CoinvariantResult {
  AbelianGroup computed, predicted;
  bool match = false;
  bool witnesses_generate = false; // predicted generators map onto the computed group
  std::vector<Witness> witness;
  std::size_t relations = 0, discarded = 0;
};

std::vector<GeneratorSpec> coinvariant_generators(std::size_t g, int n);

// Truncated H = Z^{2g(2D+1)} with coordinates (e, i) -> index (e + D) * 2g + i.
Presentation presentation_H(int n, std::size_t g, long window, const std::vector<GeneratorSpec> &gens);
Presentation presentation_S(const SymTensorModule &S, const std::vector<GeneratorSpec> &gens);

CoinvariantResult coinvariants_H(int n, std::size_t g, long window,
                                 std::optional<std::vector<GeneratorSpec>> gens = std::nullopt);
CoinvariantResult coinvariants_S(int sign, int n, std::size_t g, long window,
                                 std::optional<std::vector<GeneratorSpec>> gens = std::nullopt);
AbelianGroup predicted_S(int sign, int n, long window);

} // namespace torus
