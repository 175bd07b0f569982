// Acceptance suite: one line per criterion, PASS/FAIL with a short summary.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "twisted/chars.hpp"
#include "twisted/corpus.hpp"
#include "twisted/dynamics.hpp"
#include "twisted/lattice.hpp"
#include "twisted/twisted.hpp"

using namespace twisted;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& title, double budget_s,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  if (secs > budget_s) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
  }
  if (!ok) ++g_failures;
  std::printf("criterion %2d: %s  %s (%s; %.2fs)\n", number,
              ok ? "PASS" : "FAIL", title.c_str(), detail.c_str(), secs);
  std::fflush(stdout);
}

std::vector<std::pair<std::string, FiniteGroup>> corpus_upto(int max_order) {
  std::vector<std::pair<std::string, FiniteGroup>> out;
  for (const auto& entry : default_corpus()) {
    FiniteGroup g = entry.build();
    if (g.order <= max_order) out.emplace_back(entry.name, std::move(g));
  }
  return out;
}

IntMatrix random_unimodular(std::mt19937& rng, int n, long long entry_bound) {
  std::uniform_int_distribution<int> row(0, n - 1), coeff(-2, 2), sign(0, 1);
  for (;;) {
    IntMatrix a = IntMatrix::identity(n);
    for (int step = 0; step < 8; ++step) {
      int i = row(rng), j = row(rng);
      if (i == j) continue;
      int c = coeff(rng);
      for (int k = 0; k < n; ++k) a.at(j, k) += c * a.at(i, k);
    }
    if (sign(rng)) {
      for (int k = 0; k < n; ++k) a.at(0, k) = -a.at(0, k);
    }
    bool bounded = true;
    for (const auto& e : a.entries)
      if (abs(e) > static_cast<long>(entry_bound)) bounded = false;
    if (bounded) return a;
  }
}

// All nondecreasing tuples of at most max_len positive integers whose
// reciprocals sum to 1.
void unit_fraction_partitions(mpq_class remaining, long long min_x,
                              int slots_left, std::vector<long long>& prefix,
                              std::vector<std::vector<long long>>& out) {
  if (remaining == 0) {
    if (!prefix.empty()) out.push_back(prefix);
    return;
  }
  if (slots_left == 0 || remaining < 0) return;
  // 1/x <= remaining  and  slots_left/x >= remaining
  mpz_class lo_num = remaining.get_den(), lo_den = remaining.get_num();
  long long x_min = min_x;
  {
    mpz_class q = (lo_num + lo_den - 1) / lo_den;  // ceil(1/remaining)
    if (q > static_cast<long>(x_min)) x_min = q.get_si();
  }
  mpz_class hi = (mpz_class(slots_left) * remaining.get_den()) /
                 remaining.get_num();  // floor(slots/remaining)
  for (long long x = x_min; mpz_class(static_cast<long>(x)) <= hi; ++x) {
    prefix.push_back(x);
    unit_fraction_partitions(remaining - mpq_class(1, static_cast<long>(x)),
                             x, slots_left - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

int main() {
  criterion(1, "TBFT equality across the corpus (order <= 60)", 300,
            [](std::string& detail) {
              int pairs = 0;
              for (auto& [name, g] : corpus_upto(60)) {
                CharacterTable primary = character_table(g);
                CharacterTable guard = character_table_guard(g);
                for (const auto& phi : enumerate_automorphisms(g)) {
                  ++pairs;
                  if (!tbft_check(g, phi, primary, guard).pass) {
                    detail = "failed on " + name;
                    return false;
                  }
                }
              }
              detail = std::to_string(pairs) + " pairs";
              return true;
            });

  criterion(2, "coinvariants dimension equals R (order <= 24)", 120,
            [](std::string& detail) {
              int pairs = 0;
              for (auto& [name, g] : corpus_upto(24))
                for (const auto& phi : enumerate_automorphisms(g)) {
                  ++pairs;
                  if (twisted_coinvariants_dimension(g, phi) !=
                      reidemeister_partition(g, phi).count) {
                    detail = "failed on " + name;
                    return false;
                  }
                }
              detail = std::to_string(pairs) + " pairs";
              return true;
            });

  criterion(3, "Spec(Z) = {2, inf}; Z^2 witnesses for k <= 50", 10,
            [](std::string& detail) {
              auto z = spectrum_search(SpectrumFamily::Z, 1, 1, 1);
              if (z.realized.size() != 1 || z.realized[0].value != 2 ||
                  !z.includes_infinity) {
                detail = "Spec(Z) wrong";
                return false;
              }
              auto zn = spectrum_search(SpectrumFamily::Zn, 2, 50, 1);
              if (!zn.includes_infinity ||
                  reidemeister_number_lattice(zn.infinity_witness).finite) {
                detail = "no valid infinity witness";
                return false;
              }
              if (zn.realized.size() != 50) {
                detail = "missing witnesses";
                return false;
              }
              for (int k = 1; k <= 50; ++k) {
                const IntMatrix& a = zn.realized[k - 1].matrix;
                if (zn.realized[k - 1].value != k || abs(a.det()) != 1 ||
                    abs((a - IntMatrix::identity(2)).det()) != k ||
                    static_cast<long long>(fixed_dual_characters(a).size()) !=
                        k) {
                  detail = "witness for k=" + std::to_string(k) + " invalid";
                  return false;
                }
              }
              detail = "50 witnesses re-verified twice";
              return true;
            });

  criterion(
      4, "Heisenberg: even values only, 2 realized, quotient oracle", 120,
      [](std::string& detail) {
        auto res = spectrum_search(SpectrumFamily::Heisenberg, 2, 1, 6);
        bool has2 = false;
        for (const auto& w : res.realized) {
          if (w.value % 2 != 0) {
            detail = "odd value " + w.value.get_str();
            return false;
          }
          if (w.value == 2) has2 = true;
          if (heisenberg_reidemeister(w.matrix) != RCount::of(w.value)) {
            detail = "witness does not recompute";
            return false;
          }
        }
        if (!has2) {
          detail = "value 2 not realized";
          return false;
        }
        // Brute-force oracle on H(Z/4): matrices that descend there with
        // quotient count equal to the infinite product formula.
        FiniteGroup h4 = heisenberg_group(4);
        for (auto rows : {std::vector<std::vector<long long>>{{2, 1}, {1, 0}},
                          {{-2, 1}, {1, 0}},
                          {{0, 1}, {1, 2}},
                          {{0, -1}, {-1, -2}},
                          {{1, 2}, {2, 3}},
                          {{3, 2}, {2, 1}},
                          {{1, -2}, {-2, 3}},
                          {{-3, 2}, {2, -1}}}) {
          IntMatrix a = IntMatrix::from_rows(rows);
          Automorphism phi = heisenberg_automorphism(h4, 4, a);
          if (mpz_class(reidemeister_partition(h4, phi).count) !=
              heisenberg_reidemeister(a).value) {
            detail = "oracle mismatch";
            return false;
          }
        }
        detail = std::to_string(res.realized.size()) +
                 " search values, 8 oracle cases";
        return true;
      });

  criterion(
      5, "Gauss congruences: random matrices, corpus pairs, accounting", 300,
      [](std::string& detail) {
        std::mt19937 rng(0x5eed);
        int matrices = 0, congruences = 0, accountings = 0;
        while (matrices < 100) {
          int n = matrices % 2 == 0 ? 2 : 3;
          IntMatrix a = random_unimodular(rng, n, 50);
          auto seq = reidemeister_sequence(a, 12);
          bool all_finite = true;
          for (const auto& v : seq.values) all_finite &= v.finite;
          if (!all_finite) continue;  // det(A^n - I) = 0 for some n <= 12
          ++matrices;
          for (long long k = 1; k <= 12; ++k) {
            if (!gauss_congruence_check(seq, k).pass) {
              detail = "congruence failed for a random matrix at n=" +
                       std::to_string(k);
              return false;
            }
            ++congruences;
          }
          if (seq.values[11].value <= 100000) {
            auto pc = periodic_point_accounting(a, 12, 1000000);
            if (!pc.accounting_ok || !pc.divisibility_ok) {
              detail = "accounting failed for a random matrix";
              return false;
            }
            ++accountings;
          }
        }
        for (auto& [name, g] : corpus_upto(64))
          for (const auto& phi : enumerate_automorphisms(g)) {
            auto seq = reidemeister_sequence(g, phi, 12);
            for (long long k = 1; k <= 12; ++k) {
              if (!gauss_congruence_check(seq, k).pass) {
                detail = "congruence failed on " + name;
                return false;
              }
              ++congruences;
            }
          }
        detail = std::to_string(matrices) + " matrices, " +
                 std::to_string(congruences) + " congruences, " +
                 std::to_string(accountings) + " accountings";
        return true;
      });

  criterion(6, "twisted permutation character decomposition (order <= 60)",
            300, [](std::string& detail) {
              int pairs = 0;
              for (auto& [name, g] : corpus_upto(60))
                for (const auto& phi : enumerate_automorphisms(g)) {
                  ++pairs;
                  auto rep = twisted_inner_character(g, phi);
                  if (!rep.pass || !rep.induced_decomposition_ok ||
                      rep.multiplicity_of_trivial !=
                          reidemeister_partition(g, phi).count) {
                    detail = "failed on " + name;
                    return false;
                  }
                }
              detail = std::to_string(pairs) + " pairs";
              return true;
            });

  criterion(7, "isogredience count equals central-quotient R", 300,
            [](std::string& detail) {
              int pairs = 0;
              for (auto& [name, g] : corpus_upto(1024))
                for (const auto& phi : enumerate_automorphisms(g)) {
                  ++pairs;
                  if (!isogredience_count(g, phi).pass) {
                    detail = "failed on " + name;
                    return false;
                  }
                }
              detail = std::to_string(pairs) + " pairs";
              return true;
            });

  criterion(8, "fixed-subgroup bounds and Landau chain", 120,
            [](std::string& detail) {
              for (auto& [name, g] : corpus_upto(1024))
                for (const auto& phi : enumerate_automorphisms(g))
                  if (!check_bounds(g, phi).pass) {
                    detail = "bounds failed on " + name;
                    return false;
                  }
              std::vector<std::vector<long long>> parts;
              std::vector<long long> prefix;
              unit_fraction_partitions(1, 1, 4, prefix, parts);
              if (parts.size() != 19) {
                detail = "expected 19 unit-fraction partitions, got " +
                         std::to_string(parts.size());
                return false;
              }
              for (const auto& xs : parts)
                if (!landau_bound_check(xs).pass) {
                  detail = "Landau chain failed";
                  return false;
                }
              detail = "all corpus pairs, 19 partitions";
              return true;
            });

  criterion(9, "separability witness recovers the full count", 60,
            [](std::string& detail) {
              std::mt19937 rng(0xface);
              int done = 0;
              while (done < 100) {
                int n = done % 2 == 0 ? 2 : 3;
                IntMatrix a = random_unimodular(rng, n, 30);
                RCount r = reidemeister_number_lattice(a);
                if (!r.finite) continue;
                ++done;
                if (finite_quotient_reidemeister(a, separability_witness(a)) !=
                    r.value) {
                  detail = "mismatch on a random matrix";
                  return false;
                }
              }
              detail = "100 matrices";
              return true;
            });

  criterion(10, "fixed dual characters: finite order, full count", 120,
            [](std::string& detail) {
              std::mt19937 rng(0xface);  // same stream as criterion 9
              int done = 0;
              while (done < 100) {
                int n = done % 2 == 0 ? 2 : 3;
                IntMatrix a = random_unimodular(rng, n, 30);
                RCount r = reidemeister_number_lattice(a);
                if (!r.finite || r.value > 200000) continue;
                ++done;
                auto pts = fixed_dual_characters(a, 1 << 20);
                if (mpz_class(static_cast<long>(pts.size())) != r.value) {
                  detail = "count mismatch";
                  return false;
                }
                for (const auto& p : pts) {
                  if (p.order < 1) {
                    detail = "bad order";
                    return false;
                  }
                  for (const auto& c : p.coords) {
                    mpq_class scaled = c * p.order;
                    if (scaled.get_den() != 1 || c < 0 || c >= 1) {
                      detail = "character not of finite order";
                      return false;
                    }
                  }
                }
              }
              detail = "100 matrices";
              return true;
            });

  criterion(
      11, "structural identities: exhaustive <= 24, sampled above", 300,
      [](std::string& detail) {
        long long checks = 0;
        for (auto& [name, g] : corpus_upto(1024)) {
          auto auts = enumerate_automorphisms(g);
          std::mt19937 rng(0x5eed ^ g.order);
          std::uniform_int_distribution<int> pick(0, g.order - 1);
          std::uniform_int_distribution<int> pick_aut(
              0, static_cast<int>(auts.size()) - 1);
          bool exhaustive = g.order <= 24;
          auto run = [&](const Automorphism& phi, int a, int b,
                         int k) -> bool {
            auto part = reidemeister_partition(g, phi);
            auto st_a = twisted_stabilizer(g, phi, a, a);
            if (part.class_sizes[part.class_of[a]] * st_a.stabilizer_order !=
                g.order)
              return false;  // orbit-stabilizer
            auto st = twisted_stabilizer(g, phi, a, b);
            if (part.class_of[a] == part.class_of[b]
                    ? static_cast<int>(st.coset.size()) != st.stabilizer_order
                    : !st.coset.empty())
              return false;  // coset identity
            if (!shift_class_check(g, phi, k).pass) return false;
            if (reidemeister_burnside_oracle(g, phi) != part.count)
              return false;
            Subgroup z = center(g);
            if (z.order() > 1 && z.order() < g.order &&
                !quotient_monotonicity_check(g, z, phi).pass)
              return false;
            ++checks;
            return true;
          };
          if (exhaustive) {
            for (const auto& phi : auts)
              for (int a = 0; a < g.order; ++a)
                if (!run(phi, a, (a * 7 + 1) % g.order,
                         (a * 3 + 2) % g.order)) {
                  detail = "failed on " + name;
                  return false;
                }
          } else {
            for (int trial = 0; trial < 100; ++trial)
              if (!run(auts[pick_aut(rng)], pick(rng), pick(rng),
                       pick(rng))) {
                detail = "failed on " + name;
                return false;
              }
          }
        }
        detail = std::to_string(checks) + " identity bundles";
        return true;
      });

  if (g_failures == 0) std::printf("all 11 acceptance criteria passed\n");
  return g_failures;
}
