#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "torus/matrix.hpp"

namespace torus {

struct SNFResult {
  IntMatrix U, D, V; // U * M * V = D
  IntMatrix Uinv;    // inverse of U, kept for change of basis on cokernels
  std::size_t rank = 0;
  std::vector<Integer> diagonal() const;
};

// Invariant factors are non-negative and form a divisibility chain.
SNFResult smith_normal_form(const IntMatrix &m, bool track = true);

struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion; // each >= 2, each divides the next

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  bool is_finite() const { return free_rank == 0; }
  Integer order() const; // 0 when infinite
  std::string to_string() const;
  static AbelianGroup free(std::size_t r) { return {r, {}}; }
  static AbelianGroup cyclic(const Integer &m);
  friend bool operator==(const AbelianGroup &a, const AbelianGroup &b) {
    return a.free_rank == b.free_rank && a.torsion == b.torsion;
  }
  friend bool operator!=(const AbelianGroup &a, const AbelianGroup &b) { return !(a == b); }
};

AbelianGroup direct_sum(const AbelianGroup &a, const AbelianGroup &b);
// Group with the given cyclic orders (0 = Z), normalised to invariant factors.
AbelianGroup group_from_orders(const std::vector<Integer> &orders);
// Z^rows / column span.
AbelianGroup cokernel(const IntMatrix &relations);
bool is_unimodular(const IntMatrix &m);
bool divisibility_chain(const IntMatrix &d);

// Columns form a Z-basis of the integer kernel.
IntMatrix kernel_basis(const IntMatrix &m);
// Columns form a Z-basis of the column span.
IntMatrix column_span_basis(const IntMatrix &m);
// x with m*x = v, if one exists.
std::optional<std::vector<Integer>> solve_in_span(const IntMatrix &m, const std::vector<Integer> &v);

// Map induced on Z^a/relsA -> Z^b/relsB, written in the invariant-factor generators.
struct InducedMap {
  AbelianGroup source, target;
  std::vector<Integer> source_orders, target_orders; // 0 = infinite cyclic
  IntMatrix matrix;                                  // target gens x source gens
  bool is_zero() const;
};
InducedMap map_on_cokernels(const IntMatrix &f, const IntMatrix &relsA, const IntMatrix &relsB);

// Remove every prime factor of m that divides d.
Integer strip_primes(Integer m, const Integer &d);
AbelianGroup invert(const AbelianGroup &g, const Integer &d);

// Endomorphism f of Z^s/rels, tested after tensoring with Z[1/d].
bool epi_after_inverting(const IntMatrix &f, const IntMatrix &rels, const Integer &d);
bool mono_after_inverting(const IntMatrix &f, const IntMatrix &rels, const Integer &d);
bool iso_after_inverting(const IntMatrix &f, const IntMatrix &rels, const Integer &d);
AbelianGroup kernel_group(const IntMatrix &f, const IntMatrix &rels);

IntMatrix hconcat(const IntMatrix &a, const IntMatrix &b);

// Sparse integer row, sorted by column.
using SparseRow = std::vector<std::pair<std::size_t, Integer>>;

// Incrementally maintained row echelon basis of a sublattice of Z^dim.
class SparseLattice {
public:
  explicit SparseLattice(std::size_t dim) : dim_(dim) {}
  // Returns true if the lattice grew.
  bool add(SparseRow r);
  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return pivots_.size(); }
  // Basis vectors as columns, dim x rank.
  IntMatrix basis_columns() const;
  bool contains(SparseRow r) const;

private:
  std::size_t dim_;
  std::map<std::size_t, SparseRow> pivots_;
};

} // namespace torus
