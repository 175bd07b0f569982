#include <doctest.h>

#include <random>

#include "twisted/chars.hpp"
#include "twisted/corpus.hpp"
#include "twisted/twisted.hpp"

using namespace twisted;

// Cross-module invariants over every (group, automorphism) pair of the
// bundled corpus, capped for runtime where noted.

namespace {

template <typename F>
void for_corpus_pairs(int max_order, F&& f) {
  for (const auto& entry : default_corpus()) {
    FiniteGroup g = entry.build();
    if (g.order > max_order) continue;
    auto auts = enumerate_automorphisms(g);
    for (std::size_t i = 0; i < auts.size(); ++i)
      f(entry.name, g, auts[i]);
  }
}

}  // namespace

TEST_CASE("orbit-stabilizer: |class| * |stabilizer| = |G|") {
  for_corpus_pairs(24, [](const std::string&, const FiniteGroup& g,
                          const Automorphism& phi) {
    auto p = reidemeister_partition(g, phi);
    for (int c = 0; c < p.count; ++c) {
      auto st = twisted_stabilizer(g, phi, p.representatives[c],
                                   p.representatives[c]);
      CHECK(p.class_sizes[c] * st.stabilizer_order == g.order);
    }
  });
}

TEST_CASE("coset identity: transporters are stabilizer cosets") {
  std::mt19937 rng(0x5eed);
  for_corpus_pairs(16, [&](const std::string&, const FiniteGroup& g,
                           const Automorphism& phi) {
    auto p = reidemeister_partition(g, phi);
    std::uniform_int_distribution<int> pick(0, g.order - 1);
    for (int trial = 0; trial < 8; ++trial) {
      int a = pick(rng), b = pick(rng);
      auto st = twisted_stabilizer(g, phi, a, b);
      if (p.class_of[a] == p.class_of[b]) {
        CHECK(static_cast<int>(st.coset.size()) == st.stabilizer_order);
        // each transporter k moves a to b
        for (int k : st.coset)
          CHECK(g.mul(g.mul(k, a), phi(g.inv(k))) == b);
      } else {
        CHECK(st.coset.empty());
      }
    }
  });
}

TEST_CASE("shift bijection and invariance under inner twists") {
  std::mt19937 rng(1234);
  for_corpus_pairs(12, [&](const std::string&, const FiniteGroup& g,
                           const Automorphism& phi) {
    std::uniform_int_distribution<int> pick(0, g.order - 1);
    CHECK(shift_class_check(g, phi, pick(rng)).pass);
  });
}

TEST_CASE("quotient monotonicity over the center") {
  for_corpus_pairs(24, [](const std::string&, const FiniteGroup& g,
                          const Automorphism& phi) {
    Subgroup z = center(g);
    if (z.order() == 1 || z.order() == g.order) return;
    CHECK(quotient_monotonicity_check(g, z, phi).pass);
  });
}

TEST_CASE("Burnside oracle equality on the whole corpus") {
  for_corpus_pairs(27, [](const std::string&, const FiniteGroup& g,
                          const Automorphism& phi) {
    CHECK(reidemeister_burnside_oracle(g, phi) ==
          reidemeister_partition(g, phi).count);
  });
}

TEST_CASE("TBFT equality on the whole corpus") {
  for (const auto& entry : default_corpus()) {
    FiniteGroup g = entry.build();
    if (g.order > 27) continue;
    CharacterTable primary = character_table(g);
    CharacterTable guard = character_table_guard(g);
    for (const auto& phi : enumerate_automorphisms(g))
      CHECK(tbft_check(g, phi, primary, guard).pass);
  }
}

TEST_CASE("coinvariants dimension equals R on small corpus groups") {
  for_corpus_pairs(12, [](const std::string&, const FiniteGroup& g,
                          const Automorphism& phi) {
    CHECK(twisted_coinvariants_dimension(g, phi) ==
          reidemeister_partition(g, phi).count);
  });
}

TEST_CASE("twisted permutation character decomposes into induced trivials") {
  for_corpus_pairs(12, [](const std::string&, const FiniteGroup& g,
                          const Automorphism& phi) {
    CHECK(twisted_inner_character(g, phi).pass);
  });
}

TEST_CASE("isogredience count equals the central-quotient Reidemeister") {
  for_corpus_pairs(24, [](const std::string&, const FiniteGroup& g,
                          const Automorphism& phi) {
    CHECK(isogredience_count(g, phi).pass);
  });
}

TEST_CASE("fixed-subgroup and class-count bounds hold corpus-wide") {
  for_corpus_pairs(27, [](const std::string&, const FiniteGroup& g,
                          const Automorphism& phi) {
    CHECK(check_bounds(g, phi).pass);
  });
}
