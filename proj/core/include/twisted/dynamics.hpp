#ifndef TWISTED_DYNAMICS_HPP
#define TWISTED_DYNAMICS_HPP

#include <map>

#include "twisted/chars.hpp"
#include "twisted/lattice.hpp"

namespace twisted {

// Either a finite-group pair (G, φ) or a lattice automorphism A.
struct ReidemeisterSequence {
  std::vector<RCount> values;  // values[i] = R(φ^{i+1})
};

struct GaussReport {
  long long n = 0;
  mpz_class sum;       // Σ_{d|n} μ(d)·R(φ^{n/d})
  mpz_class quotient;  // sum / n when pass
  bool pass = false;
};

struct PeriodicPointCount {
  long long n = 0;
  std::map<long long, mpz_class> least_period;  // d | n -> P_d
  bool accounting_ok = false;    // R(φ^n) = Σ_{d|n} P_d
  bool divisibility_ok = false;  // d | P_d for every d
};

int moebius(long long n);

std::vector<long long> divisors(long long n);

ReidemeisterSequence reidemeister_sequence(const FiniteGroup& g,
                                           const Automorphism& phi,
                                           int max_n);
ReidemeisterSequence reidemeister_sequence(const IntMatrix& a, int max_n);

// Gauss congruence Σ_{d|n} μ(d)·R(φ^{n/d}) ≡ 0 (mod n). Throws
// InfiniteValueEncountered when a required iterate is infinite.
GaussReport gauss_congruence_check(const ReidemeisterSequence& seq,
                                   long long n);

// Least-period counts of φ̂ on the finite dual, by Möbius inversion of the
// fixed-point counts F_d; the lattice path cross-checks against a direct
// orbit partition of the torus points when enumeration is feasible.
PeriodicPointCount periodic_point_accounting(const FiniteGroup& g,
                                             const Automorphism& phi,
                                             long long n);
PeriodicPointCount periodic_point_accounting(const IntMatrix& a, long long n,
                                             long long cap = 1 << 20);

}  // namespace twisted

#endif
