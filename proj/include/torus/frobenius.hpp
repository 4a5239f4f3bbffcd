#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "torus/coinvariants.hpp"
#include "torus/snf.hpp"

namespace torus {

// Z^rank / relations with finitely many Frobenius operators F_d (d in the support).
struct FrobeniusModule {
  std::size_t rank = 0;
  IntMatrix relations; // rank x k, columns are relations
  std::map<long, IntMatrix> operators;

  AbelianGroup group() const { return cokernel(relations); }
  bool well_defined(long d) const;
  // F_d F_e = F_{de} whenever d, e, de are all in the support.
  bool multiplicative() const;
};

struct TameCertificate {
  bool tame = true;
  std::optional<long> failing_d;
  std::string reason;
};
TameCertificate is_tame(const FrobeniusModule &M);

// If f is onto after inverting d it must be an isomorphism after inverting d; false means a counterexample.
bool tame_criterion_check(const IntMatrix &f, const IntMatrix &rels, const Integer &d);

// tau_d on the Z[t^d]-basis t^r x_i (0 <= r < d): index r * 2g + i goes to image[index] in X_{dg}.
struct CoveringMap {
  long d = 1;
  std::size_t g = 0;
  std::vector<std::size_t> image;
  bool is_bijection() const;
};
CoveringMap covering_map(long d, std::size_t g);
// tau_d(t^e x_i) = T^k x' with e = k d + r.
std::pair<long, std::size_t> covering_image(long d, std::size_t g, long e, std::size_t i);
Tensor covering_tensor(long d, std::size_t g, const Tensor &t);

// Frobenius on the coinvariants of S^{(-1)^{n+1}} in the witness generators X_1..X_D, X_0.
struct FrobeniusComparison {
  long d = 1;
  IntMatrix closed, oracle; // column c is F_d of generator c
  bool agree = false;
};
IntMatrix frobenius_closed_formula(long d, long window);
IntMatrix frobenius_via_covering(long d, int n, std::size_t g, long window);
FrobeniusComparison frobenius_on_coinvariants(long d, int n, std::size_t g, int sign, long window);
// F_d(t^a - t^-a) in Z[pi], from the closed formula.
LaurentPoly frobenius_formula(long d, long a);

// sum over 0 < a <= window of Z/p{t^a - t^-a}, with F_d from the closed formula for d in support.
FrobeniusModule theorem_b_module(long p, long window, const std::vector<long> &support = {2, 3, 4, 5});

struct NoTameWitness {
  bool certified = false;
  long q = 0;
  std::string reason;
};
NoTameWitness no_tame_submodule(const FrobeniusModule &M, long p, long window);

bool is_prime(long q);
long next_prime_above(long x, long avoid);

} // namespace torus
