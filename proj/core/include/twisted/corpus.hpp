#ifndef TWISTED_CORPUS_HPP
#define TWISTED_CORPUS_HPP

#include <functional>
#include <string>
#include <vector>

#include "twisted/group.hpp"

namespace twisted {

struct CorpusEntry {
  std::string name;
  std::function<FiniteGroup()> build;
};

FiniteGroup cyclic_group(int n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
FiniteGroup symmetric_group(int n);
FiniteGroup alternating_group(int n);
FiniteGroup dihedral_group(int n);  // order 2n
FiniteGroup quaternion_group();     // Q8

// Bundled named groups: trivial, Z/2..Z/12, Z/2xZ/2, Z/2xZ/4, S3, S4,
// D4, D5, D6, Q8, A4, A5, H(Z/3). Every entry validates under the
// group-core axioms.
const std::vector<CorpusEntry>& default_corpus();

FiniteGroup corpus_group(const std::string& name);

}  // namespace twisted

#endif
