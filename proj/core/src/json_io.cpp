#include "twisted/json_io.hpp"

#include <fstream>

namespace twisted {

namespace {

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw validation_error("FileNotFound", "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw validation_error("ParseError", std::string(e.what()));
  }
  return j;
}

mpz_class parse_entry(const json& v) {
  if (v.is_number_integer())
    return mpz_class(static_cast<long>(v.get<long long>()));
  if (v.is_string()) {
    try {
      return mpz_class(v.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw validation_error("ParseError",
                             "bad integer literal " + v.get<std::string>());
    }
  }
  throw validation_error("ParseError", "matrix entry must be int or string");
}

}  // namespace

FiniteGroup group_from_json(const json& j) {
  std::string name = j.value("name", "");
  std::string format = j.value("format", j.contains("table") ? "table"
                                                             : "permutations");
  if (format == "table") {
    if (!j.contains("table"))
      throw validation_error("ParseError", "missing \"table\"");
    auto table = j.at("table").get<std::vector<std::vector<int>>>();
    return build_from_table(std::move(table), name);
  }
  if (format == "permutations") {
    if (!j.contains("degree") || !j.contains("generators"))
      throw validation_error("ParseError",
                             "missing \"degree\" or \"generators\"");
    auto gens = j.at("generators").get<std::vector<std::vector<int>>>();
    return build_from_permutations(j.at("degree").get<int>(), gens, 1024,
                                   name);
  }
  throw validation_error("ParseError", "unknown format " + format);
}

FiniteGroup load_group(const std::string& path) {
  return group_from_json(load_file(path));
}

Automorphism automorphism_from_json(const json& j, const FiniteGroup& g) {
  if (j.contains("images")) {
    auto images = j.at("images").get<std::vector<int>>();
    if (static_cast<int>(images.size()) != g.order)
      throw validation_error("ParseError", "image list has wrong length");
    return make_automorphism(g, std::move(images));
  }
  if (j.contains("generator_images")) {
    auto gi = j.at("generator_images").get<std::vector<int>>();
    std::vector<int> gens = generating_set(g);
    if (gi.size() != gens.size())
      throw validation_error(
          "ParseError", "expected " + std::to_string(gens.size()) +
                            " generator images, got " +
                            std::to_string(gi.size()));
    // Extend along the closure of the generating set.
    std::vector<int> images(g.order, -1);
    images[g.identity] = g.identity;
    std::vector<int> bfs{g.identity};
    for (std::size_t i = 0; i < bfs.size(); ++i)
      for (std::size_t k = 0; k < gens.size(); ++k) {
        int y = g.mul(bfs[i], gens[k]);
        if (images[y] < 0) {
          images[y] = g.mul(images[bfs[i]], gi[k]);
          bfs.push_back(y);
        }
      }
    return make_automorphism(g, std::move(images));
  }
  throw validation_error("ParseError",
                         "need \"images\" or \"generator_images\"");
}

Automorphism load_automorphism(const std::string& path, const FiniteGroup& g) {
  return automorphism_from_json(load_file(path), g);
}

IntMatrix matrix_from_json(const json& j) {
  int n = j.at("n").get<int>();
  const json& rows = j.at("entries");
  if (static_cast<int>(rows.size()) != n)
    throw validation_error("ParseError", "wrong number of matrix rows");
  IntMatrix a(n);
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(rows[r].size()) != n)
      throw validation_error("ParseError", "wrong number of matrix columns");
    for (int c = 0; c < n; ++c) a.at(r, c) = parse_entry(rows[r][c]);
  }
  return a;
}

IntMatrix load_matrix(const std::string& path) {
  return matrix_from_json(load_file(path));
}

namespace {

json int_to_json(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

}  // namespace

json matrix_to_json(const IntMatrix& a) {
  json rows = json::array();
  for (int r = 0; r < a.n; ++r) {
    json row = json::array();
    for (int c = 0; c < a.n; ++c) row.push_back(int_to_json(a.at(r, c)));
    rows.push_back(std::move(row));
  }
  return json{{"n", a.n}, {"entries", std::move(rows)}};
}

json character_table_to_json(const CharacterTable& t) {
  json classes = json::array();
  for (const auto& c : t.classes) classes.push_back(c.size());
  json j{{"prime", t.prime},
         {"degrees", t.degrees},
         {"classes", std::move(classes)},
         {"rows", t.rows}};
  if (t.lift) {
    json lift = json::array();
    for (const auto& row : *t.lift) {
      json lrow = json::array();
      for (const auto& coeffs : row) lrow.push_back(coeffs);
      lift.push_back(std::move(lrow));
    }
    j["exponent"] = t.exponent;
    j["lift"] = std::move(lift);
  }
  return j;
}

json spectrum_to_json(const SpectrumResult& s) {
  json witnesses = json::array();
  for (const auto& w : s.realized)
    witnesses.push_back(
        {{"value", int_to_json(w.value)}, {"matrix", matrix_to_json(w.matrix)}});
  json j{{"family", s.family},
         {"realized", std::move(witnesses)},
         {"includes_infinity", s.includes_infinity}};
  if (s.includes_infinity)
    j["infinity_witness"] = matrix_to_json(s.infinity_witness);
  return j;
}

}  // namespace twisted
