#include "twisted/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace twisted {

int FiniteGroup::power(int a, long long e) const {
  if (e < 0) return power(inv(a), -e);
  int r = identity;
  int base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

int FiniteGroup::element_order(int a) const {
  int x = a;
  int n = 1;
  while (x != identity) {
    x = mul(x, a);
    ++n;
  }
  return n;
}

long long FiniteGroup::exponent() const {
  long long e = 1;
  for (int a = 0; a < order; ++a) e = std::lcm(e, (long long)element_order(a));
  return e;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order; ++a)
    for (int b = a + 1; b < order; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool Subgroup::contains(int g) const {
  return std::binary_search(members.begin(), members.end(), g);
}

namespace {

std::string triple(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," +
         std::to_string(c) + ")";
}

void check_associativity(const FiniteGroup& g) {
  int n = g.order;
  auto check = [&](int a, int b, int c) {
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
      throw validation_error("NotAssociative",
                             "witness triple " + triple(a, b, c));
  };
  if (n <= 256) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check(a, b, c);
  } else {
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<int> d(0, n - 1);
    for (int i = 0; i < 10000; ++i) check(d(rng), d(rng), d(rng));
  }
}

}  // namespace

FiniteGroup build_from_table(std::vector<std::vector<int>> table,
                             std::string name) {
  int n = static_cast<int>(table.size());
  if (n == 0) throw validation_error("NotLatinSquare", "empty table");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n)
      throw validation_error("NotLatinSquare",
                             "row " + std::to_string(a) + " has wrong length");
    for (int b = 0; b < n; ++b)
      if (table[a][b] < 0 || table[a][b] >= n)
        throw validation_error(
            "NotLatinSquare",
            "entry out of range at " + triple(a, b, table[a][b]));
  }
  // Latin square property.
  for (int a = 0; a < n; ++a) {
    std::vector<bool> row(n, false), col(n, false);
    for (int b = 0; b < n; ++b) {
      if (row[table[a][b]])
        throw validation_error("NotLatinSquare",
                               "row " + std::to_string(a) +
                                   " repeats value " +
                                   std::to_string(table[a][b]));
      row[table[a][b]] = true;
      if (col[table[b][a]])
        throw validation_error("NotLatinSquare",
                               "column " + std::to_string(a) +
                                   " repeats value " +
                                   std::to_string(table[b][a]));
      col[table[b][a]] = true;
    }
  }
  // Identity.
  int e = -1;
  for (int a = 0; a < n && e < 0; ++a) {
    bool ok = true;
    for (int b = 0; b < n; ++b)
      if (table[a][b] != b || table[b][a] != b) {
        ok = false;
        break;
      }
    if (ok) e = a;
  }
  if (e < 0) throw validation_error("NoIdentity", "no two-sided identity");
  // Inverses.
  std::vector<int> inverse(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (table[a][b] == e && table[b][a] == e) {
        inverse[a] = b;
        break;
      }
    if (inverse[a] < 0)
      throw validation_error("NoInverse",
                             "element " + std::to_string(a) +
                                 " has no two-sided inverse");
  }
  FiniteGroup g;
  g.order = n;
  g.table = std::move(table);
  g.identity = e;
  g.inverse = std::move(inverse);
  g.name = std::move(name);
  check_associativity(g);
  return g;
}

FiniteGroup build_from_permutations(
    int degree, const std::vector<std::vector<int>>& generators, int order_cap,
    std::string name) {
  for (const auto& p : generators) {
    if (static_cast<int>(p.size()) != degree)
      throw validation_error("NotLatinSquare", "generator of wrong degree");
    std::vector<bool> seen(degree, false);
    for (int v : p) {
      if (v < 0 || v >= degree || seen[v])
        throw validation_error("NotLatinSquare", "generator is not a bijection");
      seen[v] = true;
    }
  }
  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  auto mul = [degree](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> c(degree);
    for (int i = 0; i < degree; ++i) c[i] = a[b[i]];
    return c;
  };

  // Dimino-style closure by a worklist of products.
  std::vector<std::vector<int>> elems{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& gen : generators) {
      auto prod = mul(elems[i], gen);
      if (index.emplace(prod, static_cast<int>(elems.size())).second) {
        elems.push_back(prod);
        if (static_cast<int>(elems.size()) > order_cap)
          throw precondition_error(
              "OrderLimitExceeded",
              "closure exceeds cap " + std::to_string(order_cap));
      }
    }
  }
  int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = index.at(mul(elems[a], elems[b]));
  return build_from_table(std::move(table), std::move(name));
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<std::vector<int>> classes;
  std::vector<bool> done(g.order, false);
  for (int a = 0; a < g.order; ++a) {
    if (done[a]) continue;
    std::vector<int> cls;
    std::vector<int> work{a};
    done[a] = true;
    while (!work.empty()) {
      int x = work.back();
      work.pop_back();
      cls.push_back(x);
      for (int s = 0; s < g.order; ++s) {
        int y = g.conj(s, x);
        if (!done[y]) {
          done[y] = true;
          work.push_back(y);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

Subgroup center(const FiniteGroup& g) {
  Subgroup z;
  for (int a = 0; a < g.order; ++a) {
    bool central = true;
    for (int b = 0; b < g.order; ++b)
      if (g.mul(a, b) != g.mul(b, a)) {
        central = false;
        break;
      }
    if (central) z.members.push_back(a);
  }
  return z;
}

Subgroup closure(const FiniteGroup& g, const std::vector<int>& elems) {
  std::vector<bool> in(g.order, false);
  std::vector<int> work{g.identity};
  in[g.identity] = true;
  for (std::size_t i = 0; i < work.size(); ++i)
    for (int s : elems) {
      int y = g.mul(work[i], s);
      if (!in[y]) {
        in[y] = true;
        work.push_back(y);
      }
    }
  Subgroup h;
  for (int a = 0; a < g.order; ++a)
    if (in[a]) h.members.push_back(a);
  return h;
}

std::vector<int> generating_set(const FiniteGroup& g) {
  std::vector<int> gens;
  Subgroup h = closure(g, {});
  while (h.order() < g.order) {
    for (int a = 0; a < g.order; ++a)
      if (!h.contains(a)) {
        gens.push_back(a);
        break;
      }
    h = closure(g, gens);
  }
  return gens;
}

Automorphism identity_automorphism(const FiniteGroup& g) {
  Automorphism a;
  a.images.resize(g.order);
  std::iota(a.images.begin(), a.images.end(), 0);
  a.inverse_images = a.images;
  return a;
}

Automorphism inner_automorphism(const FiniteGroup& g, int elem) {
  Automorphism a;
  a.images.resize(g.order);
  a.inverse_images.resize(g.order);
  for (int x = 0; x < g.order; ++x) {
    a.images[x] = g.conj(elem, x);
    a.inverse_images[a.images[x]] = x;
  }
  return a;
}

Automorphism compose(const Automorphism& a, const Automorphism& b) {
  Automorphism c;
  int n = static_cast<int>(a.images.size());
  c.images.resize(n);
  c.inverse_images.resize(n);
  for (int x = 0; x < n; ++x) c.images[x] = a.images[b.images[x]];
  for (int x = 0; x < n; ++x) c.inverse_images[c.images[x]] = x;
  return c;
}

Automorphism inverse(const Automorphism& a) {
  Automorphism b;
  b.images = a.inverse_images;
  b.inverse_images = a.images;
  return b;
}

Automorphism automorphism_power(const FiniteGroup& g, const Automorphism& a,
                                long long e) {
  Automorphism r = identity_automorphism(g);
  Automorphism base = e < 0 ? inverse(a) : a;
  long long k = e < 0 ? -e : e;
  while (k > 0) {
    if (k & 1) r = compose(r, base);
    base = compose(base, base);
    k >>= 1;
  }
  return r;
}

bool is_automorphism(const FiniteGroup& g, const std::vector<int>& images) {
  if (static_cast<int>(images.size()) != g.order) return false;
  std::vector<bool> hit(g.order, false);
  for (int v : images) {
    if (v < 0 || v >= g.order || hit[v]) return false;
    hit[v] = true;
  }
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      if (images[g.mul(a, b)] != g.mul(images[a], images[b])) return false;
  return true;
}

Automorphism make_automorphism(const FiniteGroup& g, std::vector<int> images) {
  if (!is_automorphism(g, images))
    throw validation_error("NotAutomorphism",
                           "images are not a bijective homomorphism");
  Automorphism a;
  a.images = std::move(images);
  a.inverse_images.resize(g.order);
  for (int x = 0; x < g.order; ++x) a.inverse_images[a.images[x]] = x;
  return a;
}

std::vector<Automorphism> enumerate_automorphisms(const FiniteGroup& g,
                                                  int order_cap) {
  if (g.order > order_cap)
    throw precondition_error("OrderLimitExceeded",
                             "group order " + std::to_string(g.order) +
                                 " exceeds cap " + std::to_string(order_cap));
  std::vector<int> gens = generating_set(g);

  std::vector<int> orders(g.order);
  for (int a = 0; a < g.order; ++a) orders[a] = g.element_order(a);

  std::vector<Automorphism> result;
  std::vector<int> choice(gens.size());

  auto try_leaf = [&]() {
    // Extend generator images along the BFS word decomposition, then verify.
    std::vector<int> images(g.order, -1);
    images[g.identity] = g.identity;
    std::vector<int> bfs{g.identity};
    std::vector<bool> placed(g.order, false);
    placed[g.identity] = true;
    for (std::size_t i = 0; i < bfs.size(); ++i)
      for (std::size_t j = 0; j < gens.size(); ++j) {
        int y = g.mul(bfs[i], gens[j]);
        if (!placed[y]) {
          placed[y] = true;
          images[y] = g.mul(images[bfs[i]], choice[j]);
          bfs.push_back(y);
        }
      }
    if (is_automorphism(g, images)) result.push_back(make_automorphism(g, images));
  };

  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (depth == gens.size()) {
      try_leaf();
      return;
    }
    int want = orders[gens[depth]];
    for (int c = 0; c < g.order; ++c)
      if (orders[c] == want) {
        choice[depth] = c;
        self(self, depth + 1);
      }
  };
  rec(rec, 0);

  std::sort(result.begin(), result.end());
  return result;
}

bool is_normal(const FiniteGroup& g, const Subgroup& h, int* witness) {
  for (int s = 0; s < g.order; ++s)
    for (int x : h.members)
      if (!h.contains(g.conj(s, x))) {
        if (witness) *witness = x;
        return false;
      }
  return true;
}

QuotientResult quotient_with_induced(const FiniteGroup& g, const Subgroup& h,
                                     const Automorphism& phi) {
  if (!h.contains(g.identity))
    throw validation_error("NotSubgroup", "missing identity");
  int w = -1;
  if (!is_normal(g, h, &w))
    throw validation_error("NotNormal",
                           "witness element " + std::to_string(w));
  for (int x : h.members)
    if (!h.contains(phi(x)))
      throw validation_error("NotInvariant",
                             "witness element " + std::to_string(x));

  // Coset of x, canonically labelled by its minimal member.
  std::vector<int> coset_min(g.order, -1);
  for (int x = 0; x < g.order; ++x) {
    int m = g.order;
    for (int hh : h.members) m = std::min(m, g.mul(hh, x));
    coset_min[x] = m;
  }
  std::vector<int> reps;
  for (int x = 0; x < g.order; ++x)
    if (coset_min[x] == x) reps.push_back(x);
  std::vector<int> rep_index(g.order, -1);
  for (std::size_t i = 0; i < reps.size(); ++i)
    rep_index[reps[i]] = static_cast<int>(i);

  int q = static_cast<int>(reps.size());
  std::vector<std::vector<int>> table(q, std::vector<int>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      table[i][j] = rep_index[coset_min[g.mul(reps[i], reps[j])]];

  QuotientResult r;
  r.quotient = build_from_table(std::move(table),
                                g.name.empty() ? "" : g.name + "/H");
  r.projection.images.resize(g.order);
  for (int x = 0; x < g.order; ++x)
    r.projection.images[x] = rep_index[coset_min[x]];

  std::vector<int> images(q);
  for (int i = 0; i < q; ++i) images[i] = rep_index[coset_min[phi(reps[i])]];
  r.induced = make_automorphism(r.quotient, std::move(images));
  return r;
}

}  // namespace twisted
