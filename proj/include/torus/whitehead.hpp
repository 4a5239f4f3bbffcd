#pragma once
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "torus/quadratic.hpp"
#include "torus/snf.hpp"
#include "torus/unitary.hpp"

namespace torus {

// Element of the pi-coinvariants of pi_{2n+k-1}(X_g) written in Hilton-Milnor labels.
// Generators x_0..x_{2g-1} are a_1..a_g, b_1..b_g. Every bracket carries the generator of the
// k-th stem composed on the right, so coefficients are multiples of that generator.
struct WhiteheadElement {
  int n = 0, k = 0;
  std::size_t g = 0;
  std::map<std::pair<std::size_t, long>, Integer> diagonal;              // (i, a >= 0): [t^a x_i, x_i]
  std::map<std::tuple<long, std::size_t, std::size_t>, Integer> offdiag; // (a, i, j), (a,i) < (0,j), i != j

  bool is_zero() const { return diagonal.empty() && offdiag.empty(); }
  std::string to_string() const;
  friend bool operator==(const WhiteheadElement &x, const WhiteheadElement &y) {
    return x.n == y.n && x.k == y.k && x.g == y.g && x.diagonal == y.diagonal && x.offdiag == y.offdiag;
  }
  friend bool operator!=(const WhiteheadElement &x, const WhiteheadElement &y) { return !(x == y); }
};

// c * [t^a x_i, t^b x_j]
struct BracketTerm {
  Integer c;
  long a;
  std::size_t i;
  long b;
  std::size_t j;
};
using BracketExpr = std::vector<BracketTerm>;

WhiteheadElement normalize(const BracketExpr &e, int n, int k, std::size_t g);
// Appends c * [x, y] expanded bilinearly; x, y are coordinate vectors over Z[pi].
void add_bracket(BracketExpr &e, const Integer &c, const PolyVec &x, const PolyVec &y);
// The element as a raw expression (normal-form labels with their coefficients).
BracketExpr as_expression(const WhiteheadElement &w);
WhiteheadElement operator+(const WhiteheadElement &x, const WhiteheadElement &y);

WhiteheadElement phi_omega_defect(const BlockMatrix &M, int n);
bool lemma_equivalence_check(const BlockMatrix &M, int n);

// phi: column j is phi(x_j) in pi_{n+k}(X_g), as multiples of x_i composed with the k-stem generator.
WhiteheadElement rho_k(const PolyMatrix &phi, int n, int k);
// [y, x] for x in pi_n and y = y0 composed with the k-stem generator.
WhiteheadElement bracket_y_x(const PolyVec &y0, const PolyVec &x, int n, int k);
// The homomorphism lambda(-, x) * y0 used for the tensor identification.
PolyMatrix tensor_hom(const PolyVec &x, const PolyVec &y0, int n);

struct RhoPiece {
  std::string name;        // "cokernel", "kernel_plus", "kernel_minus"
  std::string tensor_with; // "H", "S+", "S-"
  std::optional<AbelianGroup> coefficient;
  std::string symbolic;
};
struct RhoReport {
  int n, k;
  std::size_t g;
  std::optional<long> prime;
  std::vector<RhoPiece> pieces;
};
RhoReport rho_kernel_cokernel(int n, int k, std::size_t g, std::optional<long> p = std::nullopt);

} // namespace torus
