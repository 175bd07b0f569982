#ifndef TWISTED_GROUP_HPP
#define TWISTED_GROUP_HPP

#include <optional>
#include <string>
#include <vector>

#include "twisted/errors.hpp"

namespace twisted {

// A finite group given by its full Cayley table on element indices
// 0..order-1. Immutable after construction; all operations are pure.
struct FiniteGroup {
  int order = 0;
  std::vector<std::vector<int>> table;  // table[a][b] = a*b
  int identity = 0;
  std::vector<int> inverse;
  std::string name;

  int mul(int a, int b) const { return table[a][b]; }
  int inv(int a) const { return inverse[a]; }
  // g x g^-1
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
  int power(int a, long long e) const;
  int element_order(int a) const;
  long long exponent() const;
  bool is_abelian() const;
};

struct GroupHom {
  std::vector<int> images;  // domain element -> codomain element
};

struct Automorphism {
  std::vector<int> images;
  std::vector<int> inverse_images;

  int operator()(int x) const { return images[x]; }
  int pre(int x) const { return inverse_images[x]; }
  bool operator==(const Automorphism& o) const { return images == o.images; }
  bool operator<(const Automorphism& o) const { return images < o.images; }
};

struct Subgroup {
  std::vector<int> members;  // sorted, contains identity

  int order() const { return static_cast<int>(members.size()); }
  bool contains(int g) const;
};

struct QuotientResult {
  FiniteGroup quotient;
  GroupHom projection;      // G -> G/H
  Automorphism induced;     // the automorphism of G/H with p∘φ = φ̄∘p
};

// Validates the four group axioms. Associativity is checked in full up to
// order 256 and on 10^4 random triples above that. Throws validation_error
// with code NoIdentity / NoInverse / NotLatinSquare / NotAssociative and a
// witness in the message.
FiniteGroup build_from_table(std::vector<std::vector<int>> table,
                             std::string name = "");

// Closure of a set of permutations of {0..degree-1}; the resulting group's
// elements are the distinct permutations in generation order, with the
// identity first. Throws validation_error on non-bijective input and
// precondition_error (OrderLimitExceeded) past the cap.
FiniteGroup build_from_permutations(int degree,
                                    const std::vector<std::vector<int>>& generators,
                                    int order_cap = 1024,
                                    std::string name = "");

// Orbits of g ↦ x g x^-1, sorted by minimal element; each class sorted.
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);

Subgroup center(const FiniteGroup& g);

Subgroup closure(const FiniteGroup& g, const std::vector<int>& elems);

// Greedy minimal generating set: repeatedly adjoin the smallest element
// outside the current closure.
std::vector<int> generating_set(const FiniteGroup& g);

Automorphism identity_automorphism(const FiniteGroup& g);
Automorphism inner_automorphism(const FiniteGroup& g, int elem);

// a∘b
Automorphism compose(const Automorphism& a, const Automorphism& b);
Automorphism inverse(const Automorphism& a);
Automorphism automorphism_power(const FiniteGroup& g, const Automorphism& a,
                                long long e);

// Is `images` a bijective homomorphism G -> G?
bool is_automorphism(const FiniteGroup& g, const std::vector<int>& images);

Automorphism make_automorphism(const FiniteGroup& g, std::vector<int> images);

// All automorphisms, lexicographic by image vector. Backtracks over images
// of a greedy generating set. Throws precondition_error (OrderLimitExceeded)
// when |G| exceeds the cap.
std::vector<Automorphism> enumerate_automorphisms(const FiniteGroup& g,
                                                  int order_cap = 256);

bool is_normal(const FiniteGroup& g, const Subgroup& h, int* witness = nullptr);

// Quotient by a normal φ-invariant subgroup with the induced automorphism.
// Throws validation_error NotNormal / NotInvariant with a witness element.
QuotientResult quotient_with_induced(const FiniteGroup& g, const Subgroup& h,
                                     const Automorphism& phi);

}  // namespace twisted

#endif
