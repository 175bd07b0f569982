// Command-line front end: twisted conjugacy computations on finite groups,
// integer lattices, and the discrete Heisenberg group. All subcommands emit
// a JSON run report on stdout; --pretty indents it.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "twisted/chars.hpp"
#include "twisted/corpus.hpp"
#include "twisted/dynamics.hpp"
#include "twisted/json_io.hpp"
#include "twisted/lattice.hpp"
#include "twisted/twisted.hpp"

namespace {

using twisted::json;

int order_cap() {
  if (const char* env = std::getenv("TWISTED_ORDER_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1)
      throw twisted::validation_error("BadOrderCap",
                                      "TWISTED_ORDER_CAP must be a positive "
                                      "integer, got \"" +
                                          std::string(env) + "\"");
    return static_cast<int>(v);
  }
  return 1024;
}

struct GroupArgs {
  std::string group_file;
  std::string corpus_name;
  std::string aut_file;

  void add_to(CLI::App* cmd, bool aut_required) {
    auto* g = cmd->add_option("--group", group_file,
                              "group JSON file (table or permutations)");
    auto* c = cmd->add_option("--corpus", corpus_name, "bundled group name");
    g->excludes(c);
    cmd->add_option("--aut", aut_file,
                    "automorphism JSON file (identity when omitted)")
        ->required(aut_required);
  }

  twisted::FiniteGroup load() const {
    if (!corpus_name.empty()) return twisted::corpus_group(corpus_name);
    if (group_file.empty())
      throw twisted::validation_error("MissingInput",
                                      "need --group or --corpus");
    return twisted::load_group(group_file);
  }

  twisted::Automorphism load_aut(const twisted::FiniteGroup& g) const {
    if (aut_file.empty()) return twisted::identity_automorphism(g);
    return twisted::load_automorphism(aut_file, g);
  }

  json inputs() const {
    json j = json::object();
    if (!corpus_name.empty()) j["corpus"] = corpus_name;
    if (!group_file.empty()) j["group_file"] = group_file;
    if (!aut_file.empty()) j["aut_file"] = aut_file;
    return j;
  }
};

json partition_to_json(const twisted::FiniteGroup& g,
                       const twisted::Automorphism& phi,
                       const twisted::ReidemeisterPartition& p) {
  json classes = json::array();
  for (int c = 0; c < p.count; ++c) {
    json members = json::array();
    for (int x = 0; x < g.order; ++x)
      if (p.class_of[x] == c) members.push_back(x);
    classes.push_back(std::move(members));
  }
  json stabilizers = json::array();
  for (int c = 0; c < p.count; ++c) {
    auto st = twisted::twisted_stabilizer(g, phi, p.representatives[c],
                                          p.representatives[c]);
    stabilizers.push_back(st.stabilizer_order);
  }
  return json{{"order", g.order},
              {"reidemeister_number", p.count},
              {"representatives", p.representatives},
              {"class_sizes", p.class_sizes},
              {"classes", std::move(classes)},
              {"stabilizer_orders", std::move(stabilizers)}};
}

json tbft_to_json(const twisted::TbftReport& rep) {
  return json{{"reidemeister_number", rep.reidemeister_number},
              {"fixed_characters", rep.fixed_characters},
              {"pass", rep.pass}};
}

struct Failure {
  std::string group, property;
  int aut_index = -1;
};

json run_corpus_checks(int max_order, int cap, bool* all_pass,
                       std::vector<Failure>* failures) {
  json groups = json::array();
  for (const auto& entry : twisted::default_corpus()) {
    twisted::FiniteGroup g = entry.build();
    if (g.order > max_order) continue;
    auto auts = twisted::enumerate_automorphisms(g, cap);
    twisted::CharacterTable primary = twisted::character_table(g, false, cap);
    twisted::CharacterTable guard = twisted::character_table_guard(g);
    twisted::verify_orthogonality(primary, g);

    json checks = json::object();
    auto record = [&](const std::string& property, int aut_index, bool ok) {
      json& c = checks[property];
      if (c.is_null()) c = json{{"pass", true}, {"runs", 0}};
      c["runs"] = c["runs"].get<int>() + 1;
      if (!ok) {
        c["pass"] = false;
        if (!c.contains("first_failure")) c["first_failure"] = aut_index;
        *all_pass = false;
        failures->push_back({entry.name, property, aut_index});
      }
    };

    for (int i = 0; i < static_cast<int>(auts.size()); ++i) {
      const auto& phi = auts[i];
      auto part = twisted::reidemeister_partition(g, phi);

      record("tbft", i, twisted::tbft_check(g, phi, primary, guard).pass);
      if (g.order <= 24)
        record("coinvariants", i,
               twisted::twisted_coinvariants_dimension(g, phi) == part.count);
      record("lemma_5_2", i, twisted::twisted_inner_character(g, phi).pass);
      record("lemma_7_4", i, twisted::isogredience_count(g, phi).pass);
      record("bounds", i, twisted::check_bounds(g, phi).pass);
      record("burnside_oracle", i,
             twisted::reidemeister_burnside_oracle(g, phi) == part.count);
      record("shift_classes", i,
             twisted::shift_class_check(g, phi, g.order > 1 ? 1 : 0).pass);
      // Coset identity: |{g}_φ| · |St(g)| = |G| at every representative.
      bool coset_ok = true;
      for (int c = 0; c < part.count && coset_ok; ++c) {
        auto st = twisted::twisted_stabilizer(g, phi, part.representatives[c],
                                              part.representatives[c]);
        coset_ok = part.class_sizes[c] * st.stabilizer_order == g.order;
      }
      record("orbit_stabilizer", i, coset_ok);
    }
    groups.push_back(json{{"name", entry.name},
                          {"order", g.order},
                          {"automorphisms", auts.size()},
                          {"checks", std::move(checks)}});
  }
  return groups;
}

void emit(const json& report, bool pretty) {
  if (pretty)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << report.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"twisted conjugacy toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent JSON output");

  GroupArgs classes_args;
  auto* cmd_classes = app.add_subcommand(
      "classes", "Reidemeister partition of a finite group");
  classes_args.add_to(cmd_classes, false);

  GroupArgs tbft_args;
  bool tbft_all = false, tbft_deep = false;
  auto* cmd_tbft = app.add_subcommand(
      "tbft", "twisted Burnside-Frobenius check R(phi) = #fixed characters");
  tbft_args.add_to(cmd_tbft, false);
  cmd_tbft->add_flag("--all-automorphisms", tbft_all,
                     "enumerate every automorphism");
  cmd_tbft->add_flag("--deep", tbft_deep,
                     "also compare the twisted coinvariants dimension");

  std::string family = "Z";
  int spec_n = 2, value_bound = 20, search_bound = 6;
  auto* cmd_spectrum =
      app.add_subcommand("spectrum", "Reidemeister spectrum of a family");
  cmd_spectrum
      ->add_option("--family", family, "Z, Zn, or Heisenberg")
      ->check(CLI::IsMember({"Z", "Zn", "Heisenberg"}));
  cmd_spectrum->add_option("--n", spec_n, "rank for family Zn");
  cmd_spectrum->add_option("--value-bound", value_bound,
                           "find witnesses for every value up to this");
  cmd_spectrum->add_option("--search-bound", search_bound,
                           "word length bound for the Heisenberg search");

  GroupArgs cong_args;
  std::string matrix_file;
  int max_n = 12;
  bool with_periods = false;
  auto* cmd_congruence = app.add_subcommand(
      "congruence", "Gauss congruences for iterated Reidemeister numbers");
  cong_args.add_to(cmd_congruence, false);
  cmd_congruence->add_option("--matrix", matrix_file,
                             "lattice automorphism JSON file");
  cmd_congruence->add_option("--max-n", max_n, "check n = 1..N");
  cmd_congruence->add_flag("--periods", with_periods,
                           "also run periodic-point accounting at n = N");

  GroupArgs iso_args;
  auto* cmd_iso = app.add_subcommand(
      "isogredience", "S(Phi) versus the central-quotient Reidemeister count");
  iso_args.add_to(cmd_iso, false);

  GroupArgs char_args;
  bool with_lift = false;
  auto* cmd_chars =
      app.add_subcommand("char-table", "irreducible character table");
  char_args.add_to(cmd_chars, false);
  cmd_chars->add_flag("--lift", with_lift,
                      "include exact cyclotomic character values");

  int max_order = 64;
  auto* cmd_verify = app.add_subcommand(
      "verify-corpus", "run every cross-module invariant over the corpus");
  cmd_verify->add_option("--max-order", max_order,
                         "skip corpus groups above this order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  auto started = std::chrono::steady_clock::now();
  json report;
  int exit_code = 0;
  try {
    int cap = order_cap();

    if (*cmd_classes) {
      twisted::FiniteGroup g = classes_args.load();
      twisted::Automorphism phi = classes_args.load_aut(g);
      auto part = twisted::reidemeister_partition(g, phi);
      report = json{{"command", "classes"},
                    {"inputs", classes_args.inputs()},
                    {"results", partition_to_json(g, phi, part)},
                    {"pass", true}};
    } else if (*cmd_tbft) {
      twisted::FiniteGroup g = tbft_args.load();
      twisted::CharacterTable primary = twisted::character_table(g, false, cap);
      twisted::CharacterTable guard = twisted::character_table_guard(g);
      json results = json::object();
      bool pass = true;
      auto run_one = [&](const twisted::Automorphism& phi) {
        json j = tbft_to_json(twisted::tbft_check(g, phi, primary, guard));
        if (tbft_deep) {
          int dim = twisted::twisted_coinvariants_dimension(g, phi);
          j["coinvariants_dimension"] = dim;
          j["pass"] =
              j["pass"].get<bool>() && dim == j["reidemeister_number"];
        }
        pass = pass && j["pass"].get<bool>();
        return j;
      };
      if (tbft_all) {
        json rows = json::array();
        for (const auto& phi : twisted::enumerate_automorphisms(g, cap))
          rows.push_back(run_one(phi));
        results["automorphisms"] = rows.size();
        results["reports"] = std::move(rows);
      } else {
        results = run_one(tbft_args.load_aut(g));
      }
      report = json{{"command", "tbft"},
                    {"inputs", tbft_args.inputs()},
                    {"results", std::move(results)},
                    {"pass", pass}};
    } else if (*cmd_spectrum) {
      twisted::SpectrumFamily fam = family == "Z" ? twisted::SpectrumFamily::Z
                                    : family == "Zn"
                                        ? twisted::SpectrumFamily::Zn
                                        : twisted::SpectrumFamily::Heisenberg;
      auto res = twisted::spectrum_search(fam, spec_n, value_bound,
                                          search_bound);
      report = json{{"command", "spectrum"},
                    {"inputs",
                     {{"family", family},
                      {"n", spec_n},
                      {"value_bound", value_bound},
                      {"search_bound", search_bound}}},
                    {"results", twisted::spectrum_to_json(res)},
                    {"pass", true}};
    } else if (*cmd_congruence) {
      json inputs = cong_args.inputs();
      twisted::ReidemeisterSequence seq;
      if (!matrix_file.empty()) {
        inputs["matrix_file"] = matrix_file;
        seq = twisted::reidemeister_sequence(twisted::load_matrix(matrix_file),
                                             max_n);
      } else {
        twisted::FiniteGroup g = cong_args.load();
        seq = twisted::reidemeister_sequence(g, cong_args.load_aut(g), max_n);
      }
      json rows = json::array();
      bool pass = true;
      for (int n = 1; n <= max_n; ++n) {
        auto rep = twisted::gauss_congruence_check(seq, n);
        pass = pass && rep.pass;
        json row{{"n", n}, {"sum", rep.sum.get_str()}, {"pass", rep.pass}};
        if (rep.pass) row["quotient"] = rep.quotient.get_str();
        rows.push_back(std::move(row));
      }
      json values = json::array();
      for (const auto& v : seq.values) values.push_back(v.str());
      json results{{"sequence", std::move(values)},
                   {"congruences", std::move(rows)}};
      if (with_periods) {
        twisted::PeriodicPointCount pc =
            !matrix_file.empty()
                ? twisted::periodic_point_accounting(
                      twisted::load_matrix(matrix_file), max_n)
                : [&] {
                    twisted::FiniteGroup g = cong_args.load();
                    return twisted::periodic_point_accounting(
                        g, cong_args.load_aut(g), max_n);
                  }();
        json periods = json::object();
        for (const auto& [d, p] : pc.least_period)
          periods[std::to_string(d)] = p.get_str();
        results["periods"] = json{{"n", pc.n},
                                  {"least_period", std::move(periods)},
                                  {"accounting_ok", pc.accounting_ok},
                                  {"divisibility_ok", pc.divisibility_ok}};
        pass = pass && pc.accounting_ok && pc.divisibility_ok;
      }
      report = json{{"command", "congruence"},
                    {"inputs", std::move(inputs)},
                    {"results", std::move(results)},
                    {"pass", pass}};
    } else if (*cmd_iso) {
      twisted::FiniteGroup g = iso_args.load();
      auto rep = twisted::isogredience_count(g, iso_args.load_aut(g));
      report = json{{"command", "isogredience"},
                    {"inputs", iso_args.inputs()},
                    {"results",
                     {{"isogredience_classes", rep.isogredience_classes},
                      {"central_quotient_reidemeister",
                       rep.r_central_quotient},
                      {"pass", rep.pass}}},
                    {"pass", rep.pass}};
      if (!rep.pass) exit_code = 4;
    } else if (*cmd_chars) {
      twisted::FiniteGroup g = char_args.load();
      twisted::CharacterTable t = twisted::character_table(g, with_lift, cap);
      twisted::verify_orthogonality(t, g);
      // Guard prime: degrees must agree.
      twisted::CharacterTable guard = twisted::character_table_guard(g);
      if (t.degrees != guard.degrees)
        throw twisted::internal_error(
            "character degrees differ between primes " +
            std::to_string(t.prime) + " and " + std::to_string(guard.prime));
      report = json{{"command", "char-table"},
                    {"inputs", char_args.inputs()},
                    {"results", twisted::character_table_to_json(t)},
                    {"pass", true}};
    } else if (*cmd_verify) {
      bool all_pass = true;
      std::vector<Failure> failures;
      json groups = run_corpus_checks(max_order, cap, &all_pass, &failures);
      json fail_list = json::array();
      for (const auto& f : failures)
        fail_list.push_back(json{{"group", f.group},
                                 {"automorphism_index", f.aut_index},
                                 {"property", f.property}});
      report = json{{"command", "verify-corpus"},
                    {"inputs", {{"max_order", max_order}}},
                    {"results",
                     {{"groups", std::move(groups)},
                      {"failures", std::move(fail_list)}}},
                    {"pass", all_pass}};
      if (!all_pass) {
        for (const auto& f : failures)
          std::cerr << "FAIL " << f.group << " automorphism " << f.aut_index
                    << " property " << f.property << "\n";
        exit_code = 4;
      }
    }
  } catch (const twisted::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const twisted::precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const twisted::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }

  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - started)
                     .count();
  report["wall_ms"] = elapsed;
  emit(report, pretty);
  return exit_code;
}
