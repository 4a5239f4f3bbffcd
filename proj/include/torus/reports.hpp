#pragma once
#include <optional>
#include <vector>

#include "torus/coinvariants.hpp"
#include "torus/frobenius.hpp"
#include "torus/tables.hpp"

namespace torus {

AbelianGroup tensor_mod(const AbelianGroup &a, const Integer &p);

struct TheoremBReport {
  long n = 0, p = 0, window = 0;
  std::size_t g = 0;
  int sign = 0;                  // (-1)^{n+1}
  AbelianGroup lowest_stem;      // p-part of the (2p-3)-stem
  CoinvariantResult coinvariants;
  AbelianGroup reduced;          // coinvariants tensor Z/p
  AbelianGroup main_summand;     // (Z/p)^window on t^a - t^-a
  std::optional<AbelianGroup> extra; // the Z/2 from the t^0 class when p = 2
  std::vector<FrobeniusComparison> frobenius;
  bool multiplicative = false;
  TameCertificate tameness;
  NoTameWitness no_tame;
  bool certified = false;
};

TheoremBReport theorem_b_report(long n, long p, std::size_t g, long window, const std::vector<long> &support = {2, 3, 4, 5});

} // namespace torus
