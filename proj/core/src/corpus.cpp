#include "twisted/corpus.hpp"

#include <numeric>

#include "twisted/lattice.hpp"

namespace twisted {

FiniteGroup cyclic_group(int n) {
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  return build_from_table(std::move(table), "Z" + std::to_string(n));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  int n = a.order * b.order;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int xa = x / b.order, xb = x % b.order;
      int ya = y / b.order, yb = y % b.order;
      table[x][y] = a.mul(xa, ya) * b.order + b.mul(xb, yb);
    }
  return build_from_table(std::move(table), a.name + "x" + b.name);
}

FiniteGroup symmetric_group(int n) {
  std::vector<int> transposition(n), cycle(n);
  std::iota(transposition.begin(), transposition.end(), 0);
  std::swap(transposition[0], transposition[1]);
  for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  return build_from_permutations(n, {transposition, cycle}, 1024,
                                 "S" + std::to_string(n));
}

FiniteGroup alternating_group(int n) {
  std::vector<int> three(n);
  std::iota(three.begin(), three.end(), 0);
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  std::vector<int> second(n);
  std::iota(second.begin(), second.end(), 0);
  if (n % 2 == 1) {
    for (int i = 0; i < n; ++i) second[i] = (i + 1) % n;  // n-cycle, even
  } else {
    // (0 1)(2 3 ... n-1)
    second[0] = 1;
    second[1] = 0;
    for (int i = 2; i < n; ++i) second[i] = i + 1 == n ? 2 : i + 1;
  }
  return build_from_permutations(n, {three, second}, 1024,
                                 "A" + std::to_string(n));
}

FiniteGroup dihedral_group(int n) {
  std::vector<int> rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return build_from_permutations(n, {rot, refl}, 1024,
                                 "D" + std::to_string(n));
}

FiniteGroup quaternion_group() {
  // Elements 1, -1, i, -i, j, -j, k, -k as indices 0..7; built from the
  // regular representation of the generators i and j.
  // i: 1->i, i->-1, -1->-i, -i->1 ; j->-k? use quaternion multiplication.
  auto mul = [](int x, int y) {
    // encode q = s*b with sign s in {0,1} (plus/minus), basis b in {1,i,j,k}
    int sx = x & 1, bx = x >> 1;
    int sy = y & 1, by = y >> 1;
    // basis products: i*i=-1, i*j=k, j*i=-k, etc.
    static const int table_b[4][4] = {
        {0, 1, 2, 3},
        {1, 0, 3, 2},
        {2, 3, 0, 1},
        {3, 2, 1, 0}};
    static const int table_s[4][4] = {
        {0, 0, 0, 0},
        {0, 1, 0, 1},
        {0, 1, 1, 0},
        {0, 0, 1, 1}};
    int b = table_b[bx][by];
    int s = sx ^ sy ^ table_s[bx][by];
    return (b << 1) | s;
  };
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) table[x][y] = mul(x, y);
  return build_from_table(std::move(table), "Q8");
}

const std::vector<CorpusEntry>& default_corpus() {
  static const std::vector<CorpusEntry> corpus = [] {
    std::vector<CorpusEntry> c;
    c.push_back({"trivial", [] { return cyclic_group(1); }});
    for (int n = 2; n <= 12; ++n)
      c.push_back({"Z" + std::to_string(n), [n] { return cyclic_group(n); }});
    c.push_back({"Z2xZ2", [] {
                   return direct_product(cyclic_group(2), cyclic_group(2));
                 }});
    c.push_back({"Z2xZ4", [] {
                   return direct_product(cyclic_group(2), cyclic_group(4));
                 }});
    c.push_back({"S3", [] { return symmetric_group(3); }});
    c.push_back({"S4", [] { return symmetric_group(4); }});
    c.push_back({"D4", [] { return dihedral_group(4); }});
    c.push_back({"D5", [] { return dihedral_group(5); }});
    c.push_back({"D6", [] { return dihedral_group(6); }});
    c.push_back({"Q8", [] { return quaternion_group(); }});
    c.push_back({"A4", [] { return alternating_group(4); }});
    c.push_back({"A5", [] { return alternating_group(5); }});
    c.push_back({"H27", [] { return heisenberg_group(3); }});
    return c;
  }();
  return corpus;
}

FiniteGroup corpus_group(const std::string& name) {
  for (const auto& e : default_corpus())
    if (e.name == name) return e.build();
  throw validation_error("UnknownGroup", "no corpus entry named " + name);
}

}  // namespace twisted
