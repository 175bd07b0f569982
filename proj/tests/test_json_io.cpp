#include <doctest.h>

#include "twisted/json_io.hpp"
#include "twisted/twisted.hpp"

using namespace twisted;

TEST_CASE("group round-trip from a table document") {
  json j = {{"name", "Z3"},
            {"format", "table"},
            {"table", {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}}};
  FiniteGroup g = group_from_json(j);
  CHECK(g.order == 3);
  CHECK(g.name == "Z3");
}

TEST_CASE("group from permutation generators") {
  json j = {{"format", "permutations"},
            {"degree", 3},
            {"generators", {{1, 0, 2}, {1, 2, 0}}}};
  CHECK(group_from_json(j).order == 6);
}

TEST_CASE("malformed documents raise validation errors") {
  CHECK_THROWS_AS(group_from_json(json{{"format", "table"}}), validation_error);
  CHECK_THROWS_AS(group_from_json(json{{"format", "nope"}}), validation_error);
  CHECK_THROWS_AS(
      group_from_json(json{{"format", "table"},
                           {"table", {{0, 1, 2}, {1, 2, 0}, {2, 0, 0}}}}),
      validation_error);
}

TEST_CASE("automorphism from full images and from generator images") {
  FiniteGroup z4 = group_from_json(
      json{{"format", "table"},
           {"table", {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}}}});
  Automorphism a = automorphism_from_json(json{{"images", {0, 3, 2, 1}}}, z4);
  Automorphism b = automorphism_from_json(json{{"generator_images", {3}}}, z4);
  CHECK(a == b);
  CHECK(reidemeister_partition(z4, a).count == 2);
  CHECK_THROWS_AS(automorphism_from_json(json{{"images", {0, 1, 1, 3}}}, z4),
                  validation_error);
  CHECK_THROWS_AS(automorphism_from_json(json{{"images", {0, 1}}}, z4),
                  validation_error);
}

TEST_CASE("matrix parsing accepts big decimal strings") {
  json j = {{"n", 2},
            {"entries", {{"123456789012345678901", 1}, {0, "-7"}}}};
  IntMatrix m = matrix_from_json(j);
  CHECK(m.at(0, 0) == mpz_class("123456789012345678901"));
  CHECK(m.at(1, 1) == -7);
  json back = matrix_to_json(m);
  CHECK(matrix_from_json(back) == m);
}

TEST_CASE("matrix shape errors are validation errors") {
  CHECK_THROWS_AS(matrix_from_json(json{{"n", 2}, {"entries", {{1, 0}}}}),
                  validation_error);
  CHECK_THROWS_AS(
      matrix_from_json(json{{"n", 1}, {"entries", {{"x"}}}}),
      validation_error);
}
