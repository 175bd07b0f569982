#include "twisted/chars.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "twisted/fp.hpp"

namespace twisted {

namespace {

using i64 = std::int64_t;
using Vec = std::vector<i64>;
using Mat = std::vector<Vec>;

// Column-style basis of a subspace of F_p^k, normalized so that each basis
// vector has a 1 at its pivot row and all other basis vectors vanish there.
struct Subspace {
  std::vector<Vec> basis;
  std::vector<int> pivots;
};

void echelonize(const Fp& f, Subspace& s) {
  std::vector<Vec> out;
  std::vector<int> pivots;
  for (Vec v : s.basis) {
    for (std::size_t i = 0; i < out.size(); ++i) {
      i64 c = v[pivots[i]];
      if (c != 0)
        for (std::size_t r = 0; r < v.size(); ++r)
          v[r] = f.sub(v[r], f.mul(c, out[i][r]));
    }
    int p = -1;
    for (std::size_t r = 0; r < v.size(); ++r)
      if (v[r] != 0) {
        p = static_cast<int>(r);
        break;
      }
    if (p < 0) continue;
    i64 inv = f.inv(v[p]);
    for (auto& x : v) x = f.mul(x, inv);
    for (std::size_t i = 0; i < out.size(); ++i) {
      i64 c = out[i][p];
      if (c != 0)
        for (std::size_t r = 0; r < v.size(); ++r)
          out[i][r] = f.sub(out[i][r], f.mul(c, v[r]));
    }
    out.push_back(std::move(v));
    pivots.push_back(p);
  }
  s.basis = std::move(out);
  s.pivots = std::move(pivots);
}

// Characteristic polynomial of an n×n matrix over F_p via Hessenberg
// reduction. Coefficients low-to-high, monic.
Vec char_poly(const Fp& f, Mat h) {
  int n = static_cast<int>(h.size());
  for (int c = 0; c < n - 1; ++c) {
    int piv = -1;
    for (int r = c + 1; r < n; ++r)
      if (h[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != c + 1) {
      std::swap(h[piv], h[c + 1]);
      for (int r = 0; r < n; ++r) std::swap(h[r][piv], h[r][c + 1]);
    }
    i64 inv = f.inv(h[c + 1][c]);
    for (int r = c + 2; r < n; ++r) {
      i64 m = f.mul(h[r][c], inv);
      if (m == 0) continue;
      for (int j = 0; j < n; ++j) h[r][j] = f.sub(h[r][j], f.mul(m, h[c + 1][j]));
      // column operation preserving similarity
      for (int j = 0; j < n; ++j)
        h[j][c + 1] = f.add(h[j][c + 1], f.mul(m, h[j][r]));
    }
  }
  // p_m(x) = (x - h[m-1][m-1]) p_{m-1}(x)
  //          - Σ_i h[i-1][m-1]·(Π subdiagonals)·p_{i-1}(x)
  std::vector<Vec> p(n + 1);
  p[0] = {1};
  for (int m = 1; m <= n; ++m) {
    Vec cur(m + 1, 0);
    for (int j = 0; j < m; ++j) {
      cur[j + 1] = f.add(cur[j + 1], p[m - 1][j]);
      cur[j] = f.sub(cur[j], f.mul(f.reduce(h[m - 1][m - 1]), p[m - 1][j]));
    }
    i64 prod = 1;
    for (int i = m - 1; i >= 1; --i) {
      prod = f.mul(prod, h[i][i - 1]);
      i64 coef = f.mul(h[i - 1][m - 1], prod);
      if (coef == 0) continue;
      for (int j = 0; j < i; ++j)
        cur[j] = f.sub(cur[j], f.mul(coef, p[i - 1][j]));
    }
    p[m] = std::move(cur);
  }
  return p[n];
}

std::vector<i64> poly_roots(const Fp& f, const Vec& poly) {
  std::vector<i64> roots;
  for (i64 x = 0; x < f.modulus(); ++x) {
    i64 v = 0;
    for (int j = static_cast<int>(poly.size()) - 1; j >= 0; --j)
      v = f.add(f.mul(v, x), poly[j]);
    if (v == 0) roots.push_back(x);
  }
  return roots;
}

// Kernel basis of an n×n matrix over F_p.
std::vector<Vec> kernel(const Fp& f, Mat m) {
  int n = static_cast<int>(m.size());
  std::vector<int> pivot_col;
  int row = 0;
  for (int c = 0; c < n && row < n; ++c) {
    int piv = -1;
    for (int r = row; r < n; ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[row]);
    i64 inv = f.inv(m[row][c]);
    for (int j = 0; j < n; ++j) m[row][j] = f.mul(m[row][j], inv);
    for (int r = 0; r < n; ++r)
      if (r != row && m[r][c] != 0) {
        i64 coef = m[r][c];
        for (int j = 0; j < n; ++j)
          m[r][j] = f.sub(m[r][j], f.mul(coef, m[row][j]));
      }
    pivot_col.push_back(c);
    ++row;
  }
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<Vec> ker;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    Vec v(n, 0);
    v[c] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r)
      v[pivot_col[r]] = f.sub(0, m[r][c]);
    ker.push_back(std::move(v));
  }
  return ker;
}

struct ClassData {
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;
  std::vector<int> class_rep;
  std::vector<int> inverse_class;
  int k = 0;
};

ClassData class_data(const FiniteGroup& g) {
  ClassData d;
  d.classes = conjugacy_classes(g);
  d.k = static_cast<int>(d.classes.size());
  d.class_of.assign(g.order, -1);
  for (int c = 0; c < d.k; ++c)
    for (int x : d.classes[c]) d.class_of[x] = c;
  for (int c = 0; c < d.k; ++c) d.class_rep.push_back(d.classes[c].front());
  for (int c = 0; c < d.k; ++c)
    d.inverse_class.push_back(d.class_of[g.inv(d.class_rep[c])]);
  return d;
}

// Class-sum multiplication matrix M_i with (M_i)_{j,l} = a_{ijl}, the number
// of ways z_l = x·y with x in C_i, y in C_j.
Mat class_matrix(const FiniteGroup& g, const ClassData& d, int i) {
  Mat counts(d.k, Vec(d.k, 0));
  for (int x : d.classes[i])
    for (int y = 0; y < g.order; ++y)
      counts[d.class_of[y]][d.class_of[g.mul(x, y)]] += 1;
  for (int j = 0; j < d.k; ++j)
    for (int l = 0; l < d.k; ++l) {
      i64 sz = static_cast<i64>(d.classes[l].size());
      if (counts[j][l] % sz != 0)
        throw internal_error("class constant not divisible by class size");
      counts[j][l] /= sz;
    }
  return counts;
}

CharacterTable dixon_table(const FiniteGroup& g, i64 prime, bool with_lift);

}  // namespace

CharacterTable character_table(const FiniteGroup& g, bool with_lift,
                               int order_cap) {
  if (g.order > order_cap)
    throw precondition_error("OrderLimitExceeded",
                             "group order exceeds cap");
  i64 p = find_splitting_prime(g.exponent(), 2LL * g.order);
  return dixon_table(g, p, with_lift);
}

CharacterTable character_table_guard(const FiniteGroup& g) {
  i64 p = find_splitting_prime(g.exponent(), 2LL * g.order);
  i64 p2 = find_splitting_prime(g.exponent(), p);
  return dixon_table(g, p2, false);
}

namespace {

CharacterTable dixon_table(const FiniteGroup& g, i64 prime, bool with_lift) {
  Fp f(prime);
  ClassData d = class_data(g);
  int k = d.k;

  std::vector<Mat> ms;
  ms.reserve(k);
  for (int i = 0; i < k; ++i) ms.push_back(class_matrix(g, d, i));

  // Split F_p^k into common eigenspaces of the class matrices.
  std::vector<Subspace> spaces;
  {
    Subspace full;
    for (int r = 0; r < k; ++r) {
      Vec e(k, 0);
      e[r] = 1;
      full.basis.push_back(std::move(e));
    }
    echelonize(f, full);
    spaces.push_back(std::move(full));
  }
  for (int i = 0; i < k; ++i) {
    std::vector<Subspace> next;
    for (auto& s : spaces) {
      int dim = static_cast<int>(s.basis.size());
      if (dim == 1) {
        next.push_back(std::move(s));
        continue;
      }
      // Restriction of M_i to the (invariant) subspace, in basis coordinates.
      Mat r(dim, Vec(dim, 0));
      for (int j = 0; j < dim; ++j) {
        Vec mb(k, 0);
        for (int row = 0; row < k; ++row) {
          i64 acc = 0;
          for (int col = 0; col < k; ++col)
            acc = f.add(acc, f.mul(f.reduce(ms[i][row][col]), s.basis[j][col]));
          mb[row] = acc;
        }
        for (int t = 0; t < dim; ++t) r[t][j] = mb[s.pivots[t]];
        // consistency: mb must lie in the subspace
        Vec rec(k, 0);
        for (int t = 0; t < dim; ++t)
          for (int c = 0; c < k; ++c)
            rec[c] = f.add(rec[c], f.mul(r[t][j], s.basis[t][c]));
        if (rec != mb)
          throw internal_error("class matrix does not preserve eigenspace");
      }
      for (i64 lambda : poly_roots(f, char_poly(f, r))) {
        Mat shifted = r;
        for (int t = 0; t < dim; ++t)
          shifted[t][t] = f.sub(shifted[t][t], lambda);
        Subspace sub;
        for (const Vec& coords : kernel(f, shifted)) {
          Vec v(k, 0);
          for (int t = 0; t < dim; ++t)
            for (int c = 0; c < k; ++c)
              v[c] = f.add(v[c], f.mul(coords[t], s.basis[t][c]));
          sub.basis.push_back(std::move(v));
        }
        echelonize(f, sub);
        if (!sub.basis.empty()) next.push_back(std::move(sub));
      }
    }
    spaces = std::move(next);
  }
  if (static_cast<int>(spaces.size()) != k)
    throw internal_error("eigenspace splitting did not reach dimension k");

  // Matrix entries act on vectors w with w_j = |C_j|χ(g_j)/d; normalize by
  // w = 1 at the identity class, then recover d and the character values.
  int e_cls = d.class_of[g.identity];
  CharacterTable t;
  t.prime = prime;
  t.k = k;
  t.classes = d.classes;
  t.class_of = d.class_of;
  t.class_rep = d.class_rep;
  t.inverse_class = d.inverse_class;
  t.exponent = g.exponent();

  std::vector<std::pair<i64, Vec>> rows;  // (degree, residues)
  for (const auto& s : spaces) {
    Vec w = s.basis.front();
    if (w[e_cls] == 0) throw internal_error("eigenvector vanishes at identity");
    i64 scale = f.inv(w[e_cls]);
    for (auto& x : w) x = f.mul(x, scale);

    i64 norm = 0;  // Σ_i ω_i ω_{i*} / |C_i|
    for (int c = 0; c < k; ++c) {
      i64 term = f.mul(w[c], w[d.inverse_class[c]]);
      norm = f.add(norm, f.mul(term, f.inv(static_cast<i64>(
                                        d.classes[c].size()))));
    }
    i64 dsq = f.mul(f.reduce(g.order), f.inv(norm));
    i64 deg = f.sqrt(dsq);
    if (deg < 0) throw internal_error("degree^2 is a non-residue");
    deg = std::min(deg, prime - deg);
    if (deg <= 0 || deg * deg > g.order)
      throw internal_error("implausible character degree");

    Vec chi(k);
    for (int c = 0; c < k; ++c)
      chi[c] = f.mul(f.mul(deg, w[c]),
                     f.inv(static_cast<i64>(d.classes[c].size())));
    rows.emplace_back(deg, std::move(chi));
  }
  std::sort(rows.begin(), rows.end());

  i64 degree_sq_sum = 0;
  for (auto& [deg, chi] : rows) {
    degree_sq_sum += deg * deg;
    t.degrees.push_back(deg);
    t.rows.push_back(std::move(chi));
  }
  if (degree_sq_sum != g.order)
    throw internal_error("degree squares do not sum to |G|");

  if (with_lift) {
    // χ(g) = Σ_j m_j ζ_m^j with m = ord(g); recover the eigenvalue
    // multiplicities m_j from mod-p data by a discrete Fourier sum.
    i64 z = f.pow(f.primitive_root(), (prime - 1) / t.exponent);
    std::vector<std::vector<std::vector<long long>>> lift(
        k, std::vector<std::vector<long long>>(k));
    for (int c = 0; c < k; ++c) {
      int rep = d.class_rep[c];
      int m = g.element_order(rep);
      i64 zm = f.pow(z, t.exponent / m);
      i64 zm_inv = f.inv(zm);
      std::vector<int> power_class(m);
      int x = g.identity;
      for (int j = 0; j < m; ++j) {
        power_class[j] = d.class_of[x];
        x = g.mul(x, rep);
      }
      for (int row = 0; row < k; ++row) {
        std::vector<long long> coeff(t.exponent, 0);
        for (int j = 0; j < m; ++j) {
          i64 acc = 0;
          for (int l = 0; l < m; ++l)
            acc = f.add(acc, f.mul(t.rows[row][power_class[l]],
                                   f.pow(zm_inv, (i64)j * l % m)));
          i64 mj = f.mul(acc, f.inv(m));
          if (mj > t.degrees[row])
            throw internal_error("eigenvalue multiplicity out of range");
          coeff[(long long)j * (t.exponent / m)] = mj;
        }
        lift[row][c] = std::move(coeff);
      }
    }
    t.lift = std::move(lift);
  }
  return t;
}

// ---- exact cyclotomic helpers for the lift orthogonality check ----

using Poly = std::vector<long long>;

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// Exact division, q = a / b with b monic-leading ±1; throws if not exact.
Poly poly_div_exact(Poly a, const Poly& b) {
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  for (int i = static_cast<int>(a.size()) - 1;
       i >= static_cast<int>(b.size()) - 1; --i) {
    long long lead = b.back();
    if (a[i] % lead != 0) throw internal_error("inexact polynomial division");
    long long c = a[i] / lead;
    q[i - (b.size() - 1)] = c;
    for (std::size_t j = 0; j < b.size(); ++j)
      a[i - (b.size() - 1) + j] -= c * b[j];
  }
  for (long long x : a)
    if (x != 0) throw internal_error("inexact polynomial division");
  return q;
}

int moebius_small(int n) {
  int m = 1;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      m = -m;
    }
  if (n > 1) m = -m;
  return m;
}

Poly cyclotomic(int n) {
  Poly num{1};
  std::vector<Poly> dens;
  for (int dd = 1; dd <= n; ++dd) {
    if (n % dd != 0) continue;
    Poly f(dd + 1, 0);
    f[0] = -1;
    f[dd] = 1;
    int mu = moebius_small(n / dd);
    if (mu == 1)
      num = poly_mul(num, f);
    else if (mu == -1)
      dens.push_back(std::move(f));
  }
  for (const auto& dpoly : dens) num = poly_div_exact(std::move(num), dpoly);
  return num;
}

// Remainder of a mod the monic polynomial b.
Poly poly_rem(Poly a, const Poly& b) {
  for (int i = static_cast<int>(a.size()) - 1;
       i >= static_cast<int>(b.size()) - 1; --i) {
    long long c = a[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      a[i - (b.size() - 1) + j] -= c * b[j];
  }
  a.resize(std::min(a.size(), b.size() - 1));
  return a;
}

}  // namespace

void verify_orthogonality(const CharacterTable& t, const FiniteGroup& g) {
  Fp f(t.prime);
  for (int i = 0; i < t.k; ++i)
    for (int j = 0; j < t.k; ++j) {
      i64 acc = 0;
      for (int c = 0; c < t.k; ++c) {
        i64 term = f.mul(t.rows[i][c], t.rows[j][t.inverse_class[c]]);
        acc = f.add(acc,
                    f.mul(f.reduce((i64)t.classes[c].size()), term));
      }
      i64 expect = (i == j) ? f.reduce(g.order) : 0;
      if (acc != expect)
        throw internal_error("row orthogonality fails mod p at (" +
                             std::to_string(i) + "," + std::to_string(j) + ")");
    }
  if (!t.lift) return;

  // Exact orthogonality in Z[x]/(Φ_e).
  const auto& lift = *t.lift;
  Fp f2(t.prime);
  Poly phi_e = cyclotomic(static_cast<int>(t.exponent));
  i64 z = f2.pow(f2.primitive_root(), (t.prime - 1) / t.exponent);
  for (int i = 0; i < t.k; ++i)
    for (int j = 0; j < t.k; ++j) {
      Poly acc(2 * t.exponent, 0);
      for (int c = 0; c < t.k; ++c) {
        const auto& a = lift[i][c];
        const auto& b = lift[j][t.inverse_class[c]];
        long long sz = static_cast<long long>(t.classes[c].size());
        for (std::size_t u = 0; u < a.size(); ++u) {
          if (a[u] == 0) continue;
          for (std::size_t v = 0; v < b.size(); ++v)
            acc[u + v] += sz * a[u] * b[v];
        }
      }
      // fold x^e = 1, then reduce mod Φ_e
      Poly folded(t.exponent, 0);
      for (std::size_t u = 0; u < acc.size(); ++u)
        folded[u % t.exponent] += acc[u];
      Poly r = poly_rem(folded, phi_e);
      long long expect = (i == j) ? g.order : 0;
      bool ok = !r.empty() ? r[0] == expect : expect == 0;
      for (std::size_t u = 1; u < r.size(); ++u)
        if (r[u] != 0) ok = false;
      if (r.empty() && expect != 0) ok = false;
      if (!ok)
        throw internal_error("exact orthogonality fails at (" +
                             std::to_string(i) + "," + std::to_string(j) + ")");
    }
  // The mod-p reduction of the lift must reproduce the stored rows.
  for (int i = 0; i < t.k; ++i)
    for (int c = 0; c < t.k; ++c) {
      i64 red = 0;
      for (long long u = 0; u < t.exponent; ++u)
        red = f2.add(red, f2.mul(f2.reduce(lift[i][c][u]), f2.pow(z, u)));
      if (red != t.rows[i][c])
        throw internal_error("lift does not reduce to stored row");
    }
}

DualAction dual_action(const CharacterTable& t, const FiniteGroup& g,
                       const Automorphism& phi) {
  DualAction a;
  a.class_permutation.resize(t.k);
  for (int c = 0; c < t.k; ++c)
    a.class_permutation[c] = t.class_of[phi(t.class_rep[c])];

  std::map<std::vector<i64>, int> row_index;
  for (int i = 0; i < t.k; ++i) row_index[t.rows[i]] = i;
  a.row_permutation.resize(t.k);
  for (int i = 0; i < t.k; ++i) {
    std::vector<i64> composed(t.k);  // χ_i∘φ
    for (int c = 0; c < t.k; ++c)
      composed[c] = t.rows[i][a.class_permutation[c]];
    auto it = row_index.find(composed);
    if (it == row_index.end())
      throw internal_error("RowMatchFailed: χ∘φ matches no table row");
    a.row_permutation[i] = it->second;
    if (it->second == i) a.fixed_rows.push_back(i);
  }
  return a;
}

TbftReport tbft_check(const FiniteGroup& g, const Automorphism& phi) {
  CharacterTable primary = character_table(g);
  CharacterTable guard = character_table_guard(g);
  return tbft_check(g, phi, primary, guard);
}

TbftReport tbft_check(const FiniteGroup& g, const Automorphism& phi,
                      const CharacterTable& primary,
                      const CharacterTable& guard) {
  TbftReport rep;
  rep.reidemeister_number = reidemeister_partition(g, phi).count;
  DualAction a1 = dual_action(primary, g, phi);
  DualAction a2 = dual_action(guard, g, phi);
  if (a1.fixed_rows.size() != a2.fixed_rows.size())
    throw internal_error("fixed-row counts disagree between guard primes");
  rep.fixed_characters = static_cast<int>(a1.fixed_rows.size());
  rep.pass = rep.reidemeister_number == rep.fixed_characters;
  return rep;
}

namespace {

// Rank over Q by fraction-free (Bareiss) elimination.
int rank_bareiss(std::vector<std::vector<mpz_class>> m) {
  if (m.empty()) return 0;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  mpz_class prev = 1;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int j = c + 1; j < cols; ++j) {
        m[r][j] = (m[rank][c] * m[r][j] - m[r][c] * m[rank][j]) / prev;
      }
      m[r][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

}  // namespace

int twisted_coinvariants_dimension(const FiniteGroup& g,
                                   const Automorphism& phi) {
  std::vector<int> gens = generating_set(g);
  std::vector<std::vector<mpz_class>> m;
  m.reserve(gens.size() * g.order);
  for (int s : gens) {
    int si = phi(g.inv(s));
    for (int h = 0; h < g.order; ++h) {
      int image = g.mul(g.mul(s, h), si);
      if (image == h) continue;
      std::vector<mpz_class> row(g.order, 0);
      row[h] = 1;
      row[image] = -1;
      m.push_back(std::move(row));
    }
  }
  return g.order - rank_bareiss(std::move(m));
}

ClassFunction induced_trivial_character(const FiniteGroup& g,
                                        const Subgroup& h) {
  ClassData d = class_data(g);
  ClassFunction cf;
  cf.values.resize(d.k);
  for (int c = 0; c < d.k; ++c) {
    int rep = d.class_rep[c];
    long long count = 0;
    for (int x = 0; x < g.order; ++x)
      if (h.contains(g.conj(x, rep))) ++count;
    if (count % h.order() != 0)
      throw internal_error("induced character value is not integral");
    cf.values[c] = count / h.order();
  }
  return cf;
}

TwistedInnerReport twisted_inner_character(const FiniteGroup& g,
                                           const Automorphism& phi) {
  TwistedInnerReport rep;
  ClassData d = class_data(g);

  // χ(x) = #{a : x a φ(x^-1) = a}; a character, hence constant on classes.
  std::vector<long long> per_element(g.order, 0);
  for (int x = 0; x < g.order; ++x) {
    int xi = phi(g.inv(x));
    for (int a = 0; a < g.order; ++a)
      if (g.mul(g.mul(x, a), xi) == a) ++per_element[x];
  }
  rep.character.resize(d.k);
  for (int c = 0; c < d.k; ++c) {
    rep.character[c] = per_element[d.class_rep[c]];
    for (int x : d.classes[c])
      if (per_element[x] != rep.character[c])
        throw internal_error("twisted inner character not a class function");
  }

  // Decomposition over twisted class representatives a:
  // χ_{γ^φ} = Σ_a Ind_{C_φ(a)}^G 1.
  ReidemeisterPartition part = reidemeister_partition(g, phi);
  std::vector<long long> sum(d.k, 0);
  for (int a : part.representatives) {
    Subgroup st;
    for (int kk = 0; kk < g.order; ++kk)
      if (g.mul(g.mul(kk, a), phi(g.inv(kk))) == a) st.members.push_back(kk);
    ClassFunction ind = induced_trivial_character(g, st);
    for (int c = 0; c < d.k; ++c) sum[c] += ind.values[c];
  }
  rep.induced_decomposition_ok = sum == rep.character;

  long long inner = 0;
  for (int c = 0; c < d.k; ++c)
    inner += static_cast<long long>(d.classes[c].size()) * rep.character[c];
  if (inner % g.order != 0)
    throw internal_error("⟨χ,1⟩ is not an integer");
  rep.multiplicity_of_trivial = inner / g.order;
  rep.pass = rep.induced_decomposition_ok &&
             rep.multiplicity_of_trivial == part.count;
  return rep;
}

IsogredienceReport isogredience_count(const FiniteGroup& g,
                                      const Automorphism& alpha) {
  IsogredienceReport rep;

  // Distinct representatives τ_s∘α of the outer class.
  std::map<std::vector<int>, int> index;
  std::vector<Automorphism> reps;
  for (int s = 0; s < g.order; ++s) {
    Automorphism b = compose(inner_automorphism(g, s), alpha);
    if (index.emplace(b.images, static_cast<int>(reps.size())).second)
      reps.push_back(std::move(b));
  }
  // Orbits under β ↦ τ_h ∘ β ∘ τ_h^-1.
  std::vector<int> cls(reps.size(), -1);
  int count = 0;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (cls[i] >= 0) continue;
    int id = count++;
    std::vector<std::size_t> work{i};
    cls[i] = id;
    while (!work.empty()) {
      std::size_t cur = work.back();
      work.pop_back();
      for (int h = 0; h < g.order; ++h) {
        Automorphism conj = compose(
            inner_automorphism(g, h),
            compose(reps[cur], inner_automorphism(g, g.inv(h))));
        int j = index.at(conj.images);
        if (cls[j] < 0) {
          cls[j] = id;
          work.push_back(static_cast<std::size_t>(j));
        }
      }
    }
  }
  rep.isogredience_classes = count;

  QuotientResult q = quotient_with_induced(g, center(g), alpha);
  rep.r_central_quotient =
      reidemeister_partition(q.quotient, q.induced).count;
  rep.pass = rep.isogredience_classes == rep.r_central_quotient;
  return rep;
}

}  // namespace twisted
