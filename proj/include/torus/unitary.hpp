#pragma once
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "torus/matrix.hpp"
#include "torus/quadratic.hpp"

namespace torus {

// 2g x 2g matrix in the basis a_1..a_g, b_1..b_g; column j is the image of basis vector j.
struct BlockMatrix {
  std::size_t g = 0;
  PolyMatrix M;

  BlockMatrix() = default;
  explicit BlockMatrix(PolyMatrix m);
  static BlockMatrix from_blocks(const PolyMatrix &A, const PolyMatrix &B, const PolyMatrix &C, const PolyMatrix &D);
  static BlockMatrix identity(std::size_t g) { return BlockMatrix(PolyMatrix::identity(2 * g)); }
  PolyMatrix A() const { return M.block(0, 0, g, g); }
  PolyMatrix B() const { return M.block(0, g, g, g); }
  PolyMatrix C() const { return M.block(g, 0, g, g); }
  PolyMatrix D() const { return M.block(g, g, g, g); }
  friend BlockMatrix operator*(const BlockMatrix &x, const BlockMatrix &y) { return BlockMatrix(x.M * y.M); }
  friend bool operator==(const BlockMatrix &x, const BlockMatrix &y) { return x.M == y.M; }
};

PolyMatrix phi_matrix(std::size_t g, int n);

struct ConditionReport {
  bool unit_sum = false; // AD^+ + eps BC^+ = I
  bool skew_ab = false;  // AB^+ + eps (AB^+)^+ = 0
  bool skew_cd = false;
  bool diag_ab = false;  // diagonal of AB^+ in the parameter
  bool diag_cd = false;
  bool ok() const { return unit_sum && skew_ab && skew_cd && diag_ab && diag_cd; }
};

ConditionReport check_conditions(const BlockMatrix &M, int n, const FormParameter &P);
bool membership_by_conditions(const BlockMatrix &M, int n, const FormParameter &P);
bool membership_by_form(const BlockMatrix &M, const QuadraticModule &Q);

enum class Family { F1, F2, F3, F4, F5, F6, SIGMA };
const char *family_name(Family f);

struct GeneratorSpec {
  Family family = Family::F1;
  LaurentPoly param; // r for F1..F4, l for F5/F6, unused for SIGMA
  std::size_t i = 0, j = 0;
  std::string to_string() const;
};

BlockMatrix instantiate(const GeneratorSpec &s, std::size_t g, int n);
// r in {+-t^e : |e| <= window}; l in {+-(t^a - eps t^-a) : 0 < a <= window}, plus +-2 for n odd;
// every ordered pair of hyperbolic indices.
std::vector<GeneratorSpec> elementary_generators(std::size_t g, int n, long window, bool with_sigma = true);

PolyMatrix sigma_matrix(int n);
std::array<PolyMatrix, 3> sigma_factors(int n);
// sigma equals the product of the factors taken in the given order.
bool sigma_factorization_check(int n, std::array<int, 3> order = {0, 1, 2});

mpq_class det_splitting(const BlockMatrix &M);

struct RandomWord {
  std::vector<GeneratorSpec> letters;
  BlockMatrix matrix;
};
RandomWord random_word(std::size_t g, int n, std::size_t length, std::uint64_t seed, long window = 1);

} // namespace torus
