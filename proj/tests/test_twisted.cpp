#include <doctest.h>

#include "twisted/corpus.hpp"
#include "twisted/twisted.hpp"

using namespace twisted;

TEST_CASE("Z4 with inversion has classes {0,2} and {1,3}") {
  FiniteGroup z4 = cyclic_group(4);
  Automorphism inv = make_automorphism(z4, {0, 3, 2, 1});
  auto p = reidemeister_partition(z4, inv);
  CHECK(p.count == 2);
  CHECK(p.class_of[0] == p.class_of[2]);
  CHECK(p.class_of[1] == p.class_of[3]);
  CHECK(p.class_of[0] != p.class_of[1]);
  CHECK(p.representatives == std::vector<int>{0, 1});
}

TEST_CASE("identity automorphism recovers ordinary conjugacy") {
  for (const char* name : {"S3", "S4", "Q8", "D4", "A4"}) {
    FiniteGroup g = corpus_group(name);
    auto p = reidemeister_partition(g, identity_automorphism(g));
    CHECK(p.count == static_cast<int>(conjugacy_classes(g).size()));
  }
}

TEST_CASE("twisted stabilizer cosets") {
  FiniteGroup s3 = symmetric_group(3);
  Automorphism id = identity_automorphism(s3);
  auto p = reidemeister_partition(s3, id);
  for (int g = 0; g < s3.order; ++g)
    for (int h = 0; h < s3.order; ++h) {
      auto st = twisted_stabilizer(s3, id, g, h);
      if (p.class_of[g] == p.class_of[h])
        CHECK(static_cast<int>(st.coset.size()) == st.stabilizer_order);
      else
        CHECK(st.coset.empty());
    }
}

TEST_CASE("fixed subgroup of inversion on Z8") {
  FiniteGroup z8 = cyclic_group(8);
  std::vector<int> images(8);
  for (int i = 0; i < 8; ++i) images[i] = (8 - i) % 8;
  Subgroup c = fixed_subgroup(z8, make_automorphism(z8, images));
  CHECK(c.members == std::vector<int>{0, 4});
}

TEST_CASE("shift classes and Reidemeister invariance") {
  FiniteGroup s4 = symmetric_group(4);
  Automorphism id = identity_automorphism(s4);
  for (int k = 0; k < s4.order; k += 5) CHECK(shift_class_check(s4, id, k).pass);
}

TEST_CASE("quotient monotonicity on Q8 over its center") {
  FiniteGroup q8 = quaternion_group();
  auto rep =
      quotient_monotonicity_check(q8, center(q8), identity_automorphism(q8));
  CHECK(rep.pass);
  CHECK(rep.r_group == 5);
  CHECK(rep.r_quotient == 4);
}

TEST_CASE("bounds hold on corpus identity pairs") {
  for (const char* name : {"Z12", "S4", "Q8", "A5"}) {
    FiniteGroup g = corpus_group(name);
    CHECK(check_bounds(g, identity_automorphism(g)).pass);
  }
}

TEST_CASE("landau bound check accepts unit-fraction partitions") {
  CHECK(landau_bound_check({1}).pass);
  CHECK(landau_bound_check({2, 4, 4}).pass);
  CHECK(landau_bound_check({2, 3, 6}).pass);
  CHECK(landau_bound_check({4, 4, 4, 4}).pass);
}

TEST_CASE("landau bound check rejects bad hypotheses") {
  CHECK_THROWS_AS(landau_bound_check({2, 3, 7}), precondition_error);
  CHECK_THROWS_AS(landau_bound_check({}), precondition_error);
  CHECK_THROWS_AS(landau_bound_check({4, 2, 4}), precondition_error);
  CHECK_THROWS_AS(landau_bound_check({-2, 2}), precondition_error);
}

TEST_CASE("Burnside oracle agrees with the orbit partition") {
  for (const char* name : {"Z6", "S3", "D4", "Q8"}) {
    FiniteGroup g = corpus_group(name);
    for (const auto& phi : enumerate_automorphisms(g))
      CHECK(reidemeister_burnside_oracle(g, phi) ==
            reidemeister_partition(g, phi).count);
  }
}
