#ifndef TWISTED_JSON_IO_HPP
#define TWISTED_JSON_IO_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "twisted/chars.hpp"
#include "twisted/group.hpp"
#include "twisted/lattice.hpp"

namespace twisted {

using json = nlohmann::json;

// Group file: {"name": str?, "format": "table"|"permutations",
//              "table": [[int]]} or {"degree": int, "generators": [[int]]}.
FiniteGroup group_from_json(const json& j);
FiniteGroup load_group(const std::string& path);

// Automorphism file: {"images": [int]} (full element map) or
// {"generator_images": [int]} (images of the greedy generating set).
Automorphism automorphism_from_json(const json& j, const FiniteGroup& g);
Automorphism load_automorphism(const std::string& path, const FiniteGroup& g);

// Matrix file: {"n": int, "entries": [[int|decimal string]]}.
IntMatrix matrix_from_json(const json& j);
IntMatrix load_matrix(const std::string& path);

json matrix_to_json(const IntMatrix& a);
json character_table_to_json(const CharacterTable& t);
json spectrum_to_json(const SpectrumResult& s);

}  // namespace twisted

#endif
