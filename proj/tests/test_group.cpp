#include <doctest.h>

#include "twisted/corpus.hpp"
#include "twisted/group.hpp"

using namespace twisted;

TEST_CASE("cyclic group validates and multiplies") {
  FiniteGroup z5 = cyclic_group(5);
  CHECK(z5.order == 5);
  CHECK(z5.identity == 0);
  CHECK(z5.mul(3, 4) == 2);
  CHECK(z5.inv(2) == 3);
  CHECK(z5.is_abelian());
  CHECK(z5.exponent() == 5);
}

TEST_CASE("corrupted table is rejected with a witness") {
  // Z3 with one cell corrupted: row 2 becomes [2,0,0].
  std::vector<std::vector<int>> t{{0, 1, 2}, {1, 2, 0}, {2, 0, 0}};
  CHECK_THROWS_WITH_AS(build_from_table(t), doctest::Contains("NotLatinSquare"),
                       validation_error);
}

TEST_CASE("non-associative latin square is rejected") {
  // A quasigroup with two-sided identity that is not a group (order 5).
  std::vector<std::vector<int>> t{{0, 1, 2, 3, 4},
                                  {1, 0, 3, 4, 2},
                                  {2, 4, 0, 1, 3},
                                  {3, 2, 4, 0, 1},
                                  {4, 3, 1, 2, 0}};
  CHECK_THROWS_WITH_AS(build_from_table(t), doctest::Contains("NotAssociative"),
                       validation_error);
}

TEST_CASE("missing identity is rejected") {
  // Latin, but only a one-sided identity.
  std::vector<std::vector<int>> t{{0, 1, 2}, {2, 0, 1}, {1, 2, 0}};
  CHECK_THROWS_WITH_AS(build_from_table(t), doctest::Contains("NoIdentity"),
                       validation_error);
}

TEST_CASE("permutation closure builds S3") {
  FiniteGroup g = build_from_permutations(3, {{1, 0, 2}, {1, 2, 0}});
  CHECK(g.order == 6);
  CHECK_FALSE(g.is_abelian());
}

TEST_CASE("permutation closure respects the order cap") {
  CHECK_THROWS_AS(build_from_permutations(
                      5, {{1, 0, 2, 3, 4}, {1, 2, 3, 4, 0}}, 100),
                  precondition_error);
}

TEST_CASE("conjugacy classes of S3 and Q8") {
  FiniteGroup s3 = symmetric_group(3);
  CHECK(conjugacy_classes(s3).size() == 3);
  FiniteGroup q8 = quaternion_group();
  CHECK(conjugacy_classes(q8).size() == 5);
  CHECK(center(q8).order() == 2);
}

TEST_CASE("automorphism enumeration") {
  CHECK(enumerate_automorphisms(cyclic_group(4)).size() == 2);
  CHECK(enumerate_automorphisms(symmetric_group(3)).size() == 6);
  CHECK(enumerate_automorphisms(cyclic_group(1)).size() == 1);
  // Aut(Z2 x Z2) = GL(2,2) of order 6.
  CHECK(enumerate_automorphisms(
            direct_product(cyclic_group(2), cyclic_group(2)))
            .size() == 6);
  // Every automorphism of S3 is inner.
  FiniteGroup s3 = symmetric_group(3);
  auto auts = enumerate_automorphisms(s3);
  int inner = 0;
  for (const auto& a : auts)
    for (int g = 0; g < s3.order; ++g)
      if (a == inner_automorphism(s3, g)) {
        ++inner;
        break;
      }
  CHECK(inner == 6);
}

TEST_CASE("composition and inversion of automorphisms") {
  FiniteGroup z8 = cyclic_group(8);
  auto auts = enumerate_automorphisms(z8);
  REQUIRE(auts.size() == 4);
  for (const auto& a : auts) {
    CHECK(compose(a, inverse(a)) == identity_automorphism(z8));
    CHECK(automorphism_power(z8, a, 2) == compose(a, a));
  }
}

TEST_CASE("quotient with induced automorphism") {
  FiniteGroup s3 = symmetric_group(3);
  // the alternating subgroup: elements of order 1 or 3
  Subgroup h;
  for (int g = 0; g < s3.order; ++g)
    if (s3.element_order(g) != 2) h.members.push_back(g);
  QuotientResult q = quotient_with_induced(s3, h, identity_automorphism(s3));
  CHECK(q.quotient.order == 2);
  CHECK(q.induced == identity_automorphism(q.quotient));
}

TEST_CASE("quotient by a non-normal subgroup is rejected") {
  FiniteGroup s3 = symmetric_group(3);
  // a subgroup generated by one transposition
  int t = -1;
  for (int g = 0; g < s3.order; ++g)
    if (s3.element_order(g) == 2) {
      t = g;
      break;
    }
  Subgroup h = closure(s3, {t});
  CHECK(h.order() == 2);
  CHECK_THROWS_WITH_AS(
      quotient_with_induced(s3, h, identity_automorphism(s3)),
      doctest::Contains("NotNormal"), validation_error);
}
