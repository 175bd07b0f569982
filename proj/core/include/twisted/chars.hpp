#ifndef TWISTED_CHARS_HPP
#define TWISTED_CHARS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "twisted/group.hpp"
#include "twisted/twisted.hpp"

namespace twisted {

// Exact irreducible character table of a finite group, computed by the
// Dixon-Schneider class-sum eigenvector method over F_p with
// p ≡ 1 (mod exponent(G)) and p > 2|G|. Row order: by degree, then
// lexicographic by residues.
struct CharacterTable {
  std::int64_t prime = 0;
  int k = 0;                                  // number of classes = rows
  std::vector<std::vector<int>> classes;      // conjugacy classes of G
  std::vector<int> class_of;                  // element -> class index
  std::vector<int> class_rep;                 // class -> minimal member
  std::vector<int> inverse_class;             // class of rep^-1
  std::vector<std::int64_t> degrees;          // χ_i(e), as integers
  std::vector<std::vector<std::int64_t>> rows;  // residues mod prime

  // Optional exact values: lift[row][class] is a coefficient vector over
  // powers ζ_e^0..ζ_e^{e-1} of a primitive e-th root of unity, e = exponent.
  long long exponent = 0;
  std::optional<std::vector<std::vector<std::vector<long long>>>> lift;
};

// Permutations induced by an automorphism on classes and on table rows,
// via [φ̂(ρ)] = [ρ∘φ].
struct DualAction {
  std::vector<int> class_permutation;  // class c -> class of φ(rep(c))
  std::vector<int> row_permutation;    // row i -> the row equal to χ_i∘φ^-1
  std::vector<int> fixed_rows;         // rows with χ∘φ = χ
};

struct TbftReport {
  int reidemeister_number = 0;
  int fixed_characters = 0;
  bool pass = false;
};

// A function on G constant on conjugacy classes, stored class-indexed.
struct ClassFunction {
  std::vector<long long> values;  // by class index
};

struct TwistedInnerReport {
  std::vector<long long> character;        // χ_{γ^φ} by class of G
  bool induced_decomposition_ok = false;   // χ_{γ^φ} = Σ_a Ind_{C_φ(a)} 1
  long long multiplicity_of_trivial = 0;   // ⟨χ_{γ^φ}, 1⟩
  bool pass = false;
};

struct IsogredienceReport {
  int isogredience_classes = 0;   // S(Φ) by direct enumeration
  int r_central_quotient = 0;     // R_{G/Z(G)}(ᾱ)
  bool pass = false;
};

CharacterTable character_table(const FiniteGroup& g, bool with_lift = false,
                               int order_cap = 1024);

// Same table at the next suitable prime; used as a consistency guard.
CharacterTable character_table_guard(const FiniteGroup& g);

DualAction dual_action(const CharacterTable& t, const FiniteGroup& g,
                       const Automorphism& phi);

// R(φ) = #fixed rows of the dual action, checked at two independent primes.
TbftReport tbft_check(const FiniteGroup& g, const Automorphism& phi);

// Variant with precomputed tables (primary and guard prime) for batch runs.
TbftReport tbft_check(const FiniteGroup& g, const Automorphism& phi,
                      const CharacterTable& primary,
                      const CharacterTable& guard);

// dim over Q of C[G] / span{δ_h - δ_{g h φ(g^-1)}}, by exact rank.
int twisted_coinvariants_dimension(const FiniteGroup& g,
                                   const Automorphism& phi);

// Character of Ind_H^G 1: χ(g) = (1/|H|)·#{x : x g x^-1 ∈ H}.
ClassFunction induced_trivial_character(const FiniteGroup& g,
                                        const Subgroup& h);

// Permutation character of the twisted action, with the induced-character
// decomposition and ⟨χ, 1⟩ = R(φ) both verified.
TwistedInnerReport twisted_inner_character(const FiniteGroup& g,
                                           const Automorphism& phi);

// S(Φ) by enumeration of τ_s∘α up to τ_h-conjugacy, checked against
// R_{G/Z(G)}(ᾱ).
IsogredienceReport isogredience_count(const FiniteGroup& g,
                                      const Automorphism& alpha);

// Orthogonality of the stored rows mod p (and of the exact lift when
// present). Throws internal_error on failure.
void verify_orthogonality(const CharacterTable& t, const FiniteGroup& g);

}  // namespace twisted

#endif
