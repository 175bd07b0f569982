#include <doctest.h>

#include <algorithm>

#include "twisted/chars.hpp"
#include "twisted/corpus.hpp"

using namespace twisted;

TEST_CASE("character table degrees of small groups") {
  CHECK(character_table(symmetric_group(3)).degrees ==
        std::vector<std::int64_t>{1, 1, 2});
  CHECK(character_table(symmetric_group(4)).degrees ==
        std::vector<std::int64_t>{1, 1, 2, 3, 3});
  CHECK(character_table(quaternion_group()).degrees ==
        std::vector<std::int64_t>{1, 1, 1, 1, 2});
  CHECK(character_table(alternating_group(5)).degrees ==
        std::vector<std::int64_t>{1, 3, 3, 4, 5});
  CHECK(character_table(corpus_group("H27")).degrees ==
        std::vector<std::int64_t>{1, 1, 1, 1, 1, 1, 1, 1, 1, 3, 3});
}

TEST_CASE("orthogonality holds mod p and in the exact lift") {
  for (const char* name : {"Z6", "S3", "D4", "Q8", "A4"}) {
    FiniteGroup g = corpus_group(name);
    CharacterTable t = character_table(g, true);
    CHECK_NOTHROW(verify_orthogonality(t, g));
  }
}

TEST_CASE("two primes give the same degrees") {
  for (const char* name : {"S3", "D5", "A4"}) {
    FiniteGroup g = corpus_group(name);
    CHECK(character_table(g).degrees == character_table_guard(g).degrees);
  }
}

TEST_CASE("tbft on Z4 with inversion") {
  FiniteGroup z4 = cyclic_group(4);
  auto rep = tbft_check(z4, make_automorphism(z4, {0, 3, 2, 1}));
  CHECK(rep.pass);
  CHECK(rep.reidemeister_number == 2);
  CHECK(rep.fixed_characters == 2);
}

TEST_CASE("tbft on the trivial group") {
  FiniteGroup e = cyclic_group(1);
  auto rep = tbft_check(e, identity_automorphism(e));
  CHECK(rep.pass);
  CHECK(rep.reidemeister_number == 1);
}

TEST_CASE("tbft across all automorphisms of S3") {
  FiniteGroup s3 = symmetric_group(3);
  for (const auto& phi : enumerate_automorphisms(s3)) {
    auto rep = tbft_check(s3, phi);
    CHECK(rep.pass);
    CHECK(rep.reidemeister_number == 3);
  }
}

TEST_CASE("coinvariants dimension equals the class count") {
  FiniteGroup z4 = cyclic_group(4);
  CHECK(twisted_coinvariants_dimension(z4,
                                       make_automorphism(z4, {0, 3, 2, 1})) ==
        2);
  FiniteGroup s3 = symmetric_group(3);
  CHECK(twisted_coinvariants_dimension(s3, identity_automorphism(s3)) == 3);
}

TEST_CASE("induced trivial character of A3 in S3 is (2,0,2)") {
  FiniteGroup s3 = symmetric_group(3);
  Subgroup a3;
  for (int g = 0; g < s3.order; ++g)
    if (s3.element_order(g) != 2) a3.members.push_back(g);
  std::sort(a3.members.begin(), a3.members.end());
  ClassFunction ind = induced_trivial_character(s3, a3);
  CHECK(ind.values == std::vector<long long>{2, 0, 2});
}

TEST_CASE("twisted inner character decomposition on small groups") {
  for (const char* name : {"Z6", "S3", "D4", "Q8"}) {
    FiniteGroup g = corpus_group(name);
    for (const auto& phi : enumerate_automorphisms(g)) {
      auto rep = twisted_inner_character(g, phi);
      CHECK(rep.pass);
      CHECK(rep.induced_decomposition_ok);
      CHECK(rep.multiplicity_of_trivial ==
            reidemeister_partition(g, phi).count);
    }
  }
}

TEST_CASE("isogredience counts") {
  FiniteGroup q8 = quaternion_group();
  auto rep = isogredience_count(q8, identity_automorphism(q8));
  CHECK(rep.pass);
  CHECK(rep.isogredience_classes == 4);

  FiniteGroup s3 = symmetric_group(3);
  rep = isogredience_count(s3, identity_automorphism(s3));
  CHECK(rep.pass);
  CHECK(rep.isogredience_classes == 3);

  FiniteGroup z6 = cyclic_group(6);
  rep = isogredience_count(z6, identity_automorphism(z6));
  CHECK(rep.pass);
  CHECK(rep.isogredience_classes == 1);
}
