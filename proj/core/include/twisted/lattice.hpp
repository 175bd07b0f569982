#ifndef TWISTED_LATTICE_HPP
#define TWISTED_LATTICE_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "twisted/group.hpp"

namespace twisted {

// Square integer matrix with arbitrary-precision entries.
struct IntMatrix {
  int n = 0;
  std::vector<mpz_class> entries;  // row-major

  IntMatrix() = default;
  explicit IntMatrix(int dim) : n(dim), entries(dim * dim, 0) {}

  mpz_class& at(int r, int c) { return entries[r * n + c]; }
  const mpz_class& at(int r, int c) const { return entries[r * n + c]; }

  static IntMatrix identity(int dim);
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix transpose() const;
  IntMatrix power(long long e) const;  // e >= 0
  mpz_class det() const;               // Bareiss, exact
  bool operator==(const IntMatrix& o) const = default;
};

// U·A·V = D, U and V unimodular, D diagonal with d_1 | d_2 | ... | d_n ≥ 0.
struct SNFDecomposition {
  IntMatrix u, d, v;
  std::vector<mpz_class> divisors;
};

// Rational point of the n-torus, coordinates in [0,1).
struct TorusPoint {
  std::vector<mpq_class> coords;
  mpz_class order;  // lcm of denominators

  bool operator==(const TorusPoint& o) const { return coords == o.coords; }
  bool operator<(const TorusPoint& o) const { return coords < o.coords; }
};

// A Reidemeister number: a positive integer or infinity.
struct RCount {
  bool finite = false;
  mpz_class value;  // meaningful when finite

  static RCount infinity() { return {false, 0}; }
  static RCount of(mpz_class v) { return {true, std::move(v)}; }
  bool operator==(const RCount& o) const = default;
  std::string str() const { return finite ? value.get_str() : "inf"; }
};

struct SpectrumWitness {
  mpz_class value;  // realized R(φ); 0 stands for ∞
  IntMatrix matrix;
};

struct SpectrumResult {
  std::string family;
  std::vector<SpectrumWitness> realized;  // sorted by value
  bool includes_infinity = false;
  IntMatrix infinity_witness;
};

SNFDecomposition smith_normal_form(const IntMatrix& a);

// |det(A-I)| when nonzero, else ∞. Throws NotUnimodular unless |det A| = 1.
RCount reidemeister_number_lattice(const IntMatrix& a);

// All x in [0,1)^n with (A^T - I)x ∈ Z^n, via the SNF of A^T - I.
// Throws InfiniteFixedSet when det(A-I) = 0 and EnumerationTooLarge past cap.
std::vector<TorusPoint> fixed_dual_characters(const IntMatrix& a,
                                              long long cap = 1 << 20);

// R of the induced automorphism on (Z/m)^n = Π gcd(d_i, m).
mpz_class finite_quotient_reidemeister(const IntMatrix& a, const mpz_class& m);

// Largest elementary divisor of A-I; the quotient modulus that preserves the
// full Reidemeister count. Throws InfiniteReidemeister when det(A-I)=0.
mpz_class separability_witness(const IntMatrix& a);

// Discrete Heisenberg group: R = |det(A-I)|·|det(A)-1| for the automorphism
// acting as A on the abelianization (and as det A on the center); ∞ when a
// factor vanishes. A must be 2x2 with |det| = 1.
RCount heisenberg_reidemeister(const IntMatrix& a);

// Finite Heisenberg group H(Z/m): triples (a,b,c) mod m,
// (a,b,c)·(a',b',c') = (a+a', b+b', c+c'+a·b'). Table group of order m^3.
FiniteGroup heisenberg_group(int m);

// The automorphism of H(Z/m) sending x,y (the two abelianized generators)
// to the columns of A and z to z^{det A}. Throws validation_error
// (NotInduced) when the assignment is not an automorphism of H(Z/m),
// which happens for some A when m is even.
Automorphism heisenberg_automorphism(const FiniteGroup& h, int m,
                                     const IntMatrix& a);

// (Z/m)^n as a table group, with the automorphism induced by a unimodular A.
// Used to cross-check the gcd formula against the twisted-orbit machinery;
// requires m^n ≤ 1024.
FiniteGroup lattice_quotient_group(int n, int m);
Automorphism lattice_quotient_automorphism(const FiniteGroup& g, int n, int m,
                                           const IntMatrix& a);

enum class SpectrumFamily { Z, Zn, Heisenberg };

// family Z: exhaustive over Aut(Z) = {±1}.
// family Zn: a unimodular witness with |det(A-I)| = k for every
//   k ≤ value_bound, each re-verified by determinant and torus-point count.
// family Heisenberg: GL(2,Z) words up to length search_bound; collects
//   realized finite values (all even).
SpectrumResult spectrum_search(SpectrumFamily family, int n, int value_bound,
                               int search_bound);

}  // namespace twisted

#endif
