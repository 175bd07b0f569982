#include <doctest.h>

#include "twisted/corpus.hpp"
#include "twisted/dynamics.hpp"

using namespace twisted;

TEST_CASE("moebius and divisors") {
  CHECK(moebius(1) == 1);
  CHECK(moebius(2) == -1);
  CHECK(moebius(4) == 0);
  CHECK(moebius(6) == 1);
  CHECK(moebius(30) == -1);
  CHECK(divisors(12) == std::vector<long long>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("Reidemeister sequence of [[2,1],[1,1]] starts 1, 5, 16") {
  auto seq = reidemeister_sequence(IntMatrix::from_rows({{2, 1}, {1, 1}}), 3);
  CHECK(seq.values[0] == RCount::of(1));
  CHECK(seq.values[1] == RCount::of(5));
  CHECK(seq.values[2] == RCount::of(16));
}

TEST_CASE("Gauss congruences for [[2,1],[1,1]]") {
  auto seq = reidemeister_sequence(IntMatrix::from_rows({{2, 1}, {1, 1}}), 6);
  auto g2 = gauss_congruence_check(seq, 2);
  CHECK(g2.pass);
  CHECK(g2.sum == 4);
  CHECK(g2.quotient == 2);
  auto g3 = gauss_congruence_check(seq, 3);
  CHECK(g3.pass);
  CHECK(g3.sum == 15);
  CHECK(g3.quotient == 5);
  for (long long n = 1; n <= 6; ++n)
    CHECK(gauss_congruence_check(seq, n).pass);
}

TEST_CASE("Gauss congruence rejects infinite required values") {
  auto seq = reidemeister_sequence(IntMatrix::identity(2), 2);
  CHECK_THROWS_WITH_AS(gauss_congruence_check(seq, 2),
                       doctest::Contains("InfiniteValueEncountered"),
                       precondition_error);
}

TEST_CASE("constant sequences satisfy all Gauss congruences") {
  FiniteGroup s3 = corpus_group("S3");
  auto seq = reidemeister_sequence(s3, identity_automorphism(s3), 6);
  for (const auto& v : seq.values) CHECK(v == RCount::of(3));
  for (long long n = 1; n <= 6; ++n) {
    auto rep = gauss_congruence_check(seq, n);
    CHECK(rep.pass);
    if (n > 1) CHECK(rep.sum == 0);  // Möbius sums of a constant cancel
  }
}

TEST_CASE("periodic point accounting for the quarter rotation") {
  auto pc = periodic_point_accounting(IntMatrix::from_rows({{0, 1}, {-1, 0}}),
                                      2);
  CHECK(pc.least_period.at(1) == 2);
  CHECK(pc.least_period.at(2) == 2);
  CHECK(pc.accounting_ok);
  CHECK(pc.divisibility_ok);
}

TEST_CASE("periodic point accounting for an Anosov matrix") {
  auto pc = periodic_point_accounting(IntMatrix::from_rows({{2, 1}, {1, 1}}),
                                      6);
  CHECK(pc.accounting_ok);
  CHECK(pc.divisibility_ok);
  mpz_class total = 0;
  for (const auto& [d, p] : pc.least_period) total += p;
  CHECK(total == 320);  // |det(A^6 - I)|
}

TEST_CASE("periodic point accounting on a finite group") {
  FiniteGroup q8 = corpus_group("Q8");
  for (const auto& phi : enumerate_automorphisms(q8)) {
    auto pc = periodic_point_accounting(q8, phi, 6);
    CHECK(pc.accounting_ok);
    CHECK(pc.divisibility_ok);
  }
}
