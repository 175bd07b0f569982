#ifndef TWISTED_TWISTED_HPP
#define TWISTED_TWISTED_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "twisted/group.hpp"

namespace twisted {

// Orbit partition of G under the twisted action x·g = x g φ(x^-1).
// count is the Reidemeister number R(φ).
struct ReidemeisterPartition {
  std::vector<int> class_of;        // element -> class id
  std::vector<int> representatives; // class id -> minimal member
  std::vector<int> class_sizes;
  int count = 0;
};

struct TwistedStabilizerResult {
  int base_point = 0;
  int target = 0;
  std::vector<int> coset;  // all k with k g φ(k^-1) = h; empty iff h ∉ {g}_φ
  int stabilizer_order = 0;
};

// Pass/fail with a first-failure witness, shared by the verification ops.
struct CheckReport {
  bool pass = true;
  std::string detail;
};

struct BoundsReport {
  int reidemeister_number = 0;
  int fixed_subgroup_order = 0;
  bool pass = false;
};

struct QuotientMonotonicityReport {
  int r_group = 0;
  int r_quotient = 0;
  bool pass = false;
};

ReidemeisterPartition reidemeister_partition(const FiniteGroup& g,
                                             const Automorphism& phi);

TwistedStabilizerResult twisted_stabilizer(const FiniteGroup& g,
                                           const Automorphism& phi, int base,
                                           int target);

// {k : φ(k) = k} = C_G(φ), the twisted stabilizer of the identity.
Subgroup fixed_subgroup(const FiniteGroup& g, const Automorphism& phi);

// Checks {g}_φ·k = {gk}_{τ_{k^-1}∘φ} for every g, and the equality of the
// two Reidemeister numbers.
CheckReport shift_class_check(const FiniteGroup& g, const Automorphism& phi,
                              int k);

// R_G(φ) ≥ R_{G/H}(φ̄).
QuotientMonotonicityReport quotient_monotonicity_check(const FiniteGroup& g,
                                                       const Subgroup& h,
                                                       const Automorphism& phi);

// |C_G(φ)| ≤ r^{r-1} and sqrt(log2 |C_G(φ)|) ≤ r, for r = R(φ).
BoundsReport check_bounds(const FiniteGroup& g, const Automorphism& phi);

// For nondecreasing positive integers with Σ 1/x_i = 1 (checked in exact
// rational arithmetic; HypothesisViolated otherwise): max ≤ n^{2n-1}, and
// the chain n·x_1···x_r ≥ x_{r+1} for every r.
CheckReport landau_bound_check(const std::vector<long long>& xs);

// Orbit-counting form of R(φ): (1/|G|) Σ_x #{g : x g φ(x^-1) = g}.
// Independent of reidemeister_partition.
int reidemeister_burnside_oracle(const FiniteGroup& g, const Automorphism& phi);

}  // namespace twisted

#endif
