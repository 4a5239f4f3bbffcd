#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "torus/snf.hpp"

namespace torus {

enum class TableName { STABLE_STEMS, PI_SO_RATIONAL, L_EVEN_Z, L_SYMMETRIC_Z, K_Z_RATIONAL, BP_ORDER };
const char *table_name(TableName t);
std::optional<TableName> parse_table_name(const std::string &s);

struct TableEntry {
  long index = 0;
  AbelianGroup group;      // for rational tables: Z^dim stands for Q^dim
  bool rational = false;
  std::string provenance;
};

TableEntry stable_stem(long k);         // UnknownGroup outside 0..7
Integer stable_stem_order(long k);      // 0 for Z
AbelianGroup p_local(const AbelianGroup &g, const Integer &p);
TableEntry pi_so_rational(long j);
TableEntry l_even_z(long n);            // L_{2n}(Z)
TableEntry l_symmetric(long d);         // L^d(Z)
AbelianGroup l_symmetric_shaneson(long d);
TableEntry k_z_rational(long d);
TableEntry bp_order(long n);            // only n = 3, 7
TableEntry table_entry(TableName t, long index);
std::vector<TableName> all_tables();

using GradedQVector = std::map<long, long>;
GradedQVector mttheta_rational_homotopy(long n, long k_max);

long gw_rational(long n, long d);

enum class EhpKind { KER_ETA, COKER_LEVEL2, ORDER_RULE, STAB_SURJ };
struct EhpAnswer {
  EhpKind kind;
  AbelianGroup group;   // KER_ETA: the kernel; STAB_SURJ: the cokernel
  bool flag = false;    // STAB_SURJ: surjective; COKER_LEVEL2: identification holds
  Integer order = 0;    // ORDER_RULE: sigma(n) with 0 for infinite; STAB_SURJ: |source| when tabulated
  std::string note;
};
EhpAnswer ehp_case(long n, EhpKind kind);
// Order of [x,x] composed with the generator of the k-stem; 0 = infinite.
Integer diagonal_order(long n, long k);

struct TheoremARow {
  long k;
  long bott_side;
  long lemma_side;
  long difference;
};
TheoremARow theorem_a_report(long n, long k);
std::vector<TheoremARow> theorem_a_sweep(long n);

} // namespace torus
