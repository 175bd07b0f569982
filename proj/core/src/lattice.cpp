#include "twisted/lattice.hpp"

#include <algorithm>
#include <map>

namespace twisted {

IntMatrix IntMatrix::identity(int dim) {
  IntMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  IntMatrix m(static_cast<int>(rows.size()));
  for (int r = 0; r < m.n; ++r) {
    if (static_cast<int>(rows[r].size()) != m.n)
      throw validation_error("NotSquare", "matrix rows have unequal length");
    for (int c = 0; c < m.n; ++c) m.at(r, c) = static_cast<long>(rows[r][c]);
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  IntMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const mpz_class& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < n; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  IntMatrix r(n);
  for (int i = 0; i < n * n; ++i) r.entries[i] = entries[i] - o.entries[i];
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(j, i) = at(i, j);
  return r;
}

IntMatrix IntMatrix::power(long long e) const {
  IntMatrix r = identity(n);
  IntMatrix base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

mpz_class IntMatrix::det() const {
  // Bareiss fraction-free elimination.
  IntMatrix m = *this;
  mpz_class prev = 1;
  int sign = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (m.at(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(c, j));
      sign = -sign;
    }
    for (int r = c + 1; r < n; ++r) {
      for (int j = c + 1; j < n; ++j)
        m.at(r, j) = (m.at(c, c) * m.at(r, j) - m.at(r, c) * m.at(c, j)) / prev;
      m.at(r, c) = 0;
    }
    prev = m.at(c, c);
  }
  return sign * m.at(n - 1, n - 1);
}

SNFDecomposition smith_normal_form(const IntMatrix& a) {
  int n = a.n;
  SNFDecomposition s;
  s.u = IntMatrix::identity(n);
  s.v = IntMatrix::identity(n);
  s.d = a;
  IntMatrix& d = s.d;

  auto swap_rows = [&](int i, int j) {
    for (int c = 0; c < n; ++c) {
      std::swap(d.at(i, c), d.at(j, c));
      std::swap(s.u.at(i, c), s.u.at(j, c));
    }
  };
  auto swap_cols = [&](int i, int j) {
    for (int r = 0; r < n; ++r) {
      std::swap(d.at(r, i), d.at(r, j));
      std::swap(s.v.at(r, i), s.v.at(r, j));
    }
  };
  auto add_row = [&](int dst, int src, const mpz_class& q) {
    for (int c = 0; c < n; ++c) {
      d.at(dst, c) += q * d.at(src, c);
      s.u.at(dst, c) += q * s.u.at(src, c);
    }
  };
  auto add_col = [&](int dst, int src, const mpz_class& q) {
    for (int r = 0; r < n; ++r) {
      d.at(r, dst) += q * d.at(r, src);
      s.v.at(r, dst) += q * s.v.at(r, src);
    }
  };

  for (int t = 0; t < n; ++t) {
    for (;;) {
      // Minimal-|value| pivot in the trailing submatrix, ties by position.
      int pr = -1, pc = -1;
      mpz_class best;
      for (int r = t; r < n; ++r)
        for (int c = t; c < n; ++c)
          if (d.at(r, c) != 0) {
            mpz_class v = abs(d.at(r, c));
            if (pr < 0 || v < best) {
              best = v;
              pr = r;
              pc = c;
            }
          }
      if (pr < 0) goto done;  // trailing block is zero
      if (pr != t) swap_rows(t, pr);
      if (pc != t) swap_cols(t, pc);

      bool reduced = true;
      for (int r = t + 1; r < n; ++r)
        if (d.at(r, t) != 0) {
          mpz_class q = -(d.at(r, t) / d.at(t, t));
          add_row(r, t, q);
          if (d.at(r, t) != 0) reduced = false;
        }
      for (int c = t + 1; c < n; ++c)
        if (d.at(t, c) != 0) {
          mpz_class q = -(d.at(t, c) / d.at(t, t));
          add_col(c, t, q);
          if (d.at(t, c) != 0) reduced = false;
        }
      if (!reduced) continue;

      // Enforce the divisibility chain: fold a non-divisible entry into
      // column t and keep reducing.
      bool divides = true;
      for (int r = t + 1; r < n && divides; ++r)
        for (int c = t + 1; c < n && divides; ++c)
          if (d.at(r, c) % d.at(t, t) != 0) {
            add_col(t, c, 1);
            divides = false;
          }
      if (divides) break;
    }
    if (d.at(t, t) < 0) {
      for (int c = 0; c < n; ++c) {
        d.at(t, c) = -d.at(t, c);
        s.u.at(t, c) = -s.u.at(t, c);
      }
    }
  }
done:
  for (int i = 0; i < n; ++i) s.divisors.push_back(d.at(i, i));
  return s;
}

RCount reidemeister_number_lattice(const IntMatrix& a) {
  mpz_class da = a.det();
  if (da != 1 && da != -1)
    throw validation_error("NotUnimodular",
                           "det = " + da.get_str());
  mpz_class dd = (a - IntMatrix::identity(a.n)).det();
  if (dd == 0) return RCount::infinity();
  return RCount::of(abs(dd));
}

std::vector<TorusPoint> fixed_dual_characters(const IntMatrix& a,
                                              long long cap) {
  IntMatrix b = a.transpose() - IntMatrix::identity(a.n);
  mpz_class dd = b.det();
  if (dd == 0)
    throw precondition_error("InfiniteFixedSet", "det(A-I) = 0");
  SNFDecomposition s = smith_normal_form(b);
  mpz_class total = 1;
  for (const auto& d : s.divisors) total *= d;
  if (total > static_cast<long>(cap))
    throw precondition_error("EnumerationTooLarge",
                             total.get_str() + " fixed points exceed cap");

  int n = a.n;
  std::vector<TorusPoint> points;
  std::vector<mpz_class> idx(n, 0);
  for (;;) {
    // x = V·y with y_i = idx_i / d_i, reduced to [0,1).
    TorusPoint p;
    p.coords.resize(n);
    mpz_class ord = 1;
    for (int r = 0; r < n; ++r) {
      mpq_class x = 0;
      for (int c = 0; c < n; ++c)
        if (idx[c] != 0) x += mpq_class(s.v.at(r, c) * idx[c], s.divisors[c]);
      x.canonicalize();
      // reduce mod 1 into [0,1)
      mpz_class fl = x.get_num() / x.get_den();
      if (x < 0 && x.get_num() % x.get_den() != 0) fl -= 1;
      x -= fl;
      p.coords[r] = x;
      ord = lcm(ord, x.get_den());
    }
    p.order = ord;
    points.push_back(std::move(p));

    int pos = n - 1;
    while (pos >= 0) {
      idx[pos] += 1;
      if (idx[pos] < s.divisors[pos]) break;
      idx[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  std::sort(points.begin(), points.end());
  return points;
}

mpz_class finite_quotient_reidemeister(const IntMatrix& a,
                                       const mpz_class& m) {
  SNFDecomposition s = smith_normal_form(a - IntMatrix::identity(a.n));
  mpz_class r = 1;
  for (const auto& d : s.divisors) r *= gcd(d, m);
  return r;
}

mpz_class separability_witness(const IntMatrix& a) {
  SNFDecomposition s = smith_normal_form(a - IntMatrix::identity(a.n));
  for (const auto& d : s.divisors)
    if (d == 0)
      throw precondition_error("InfiniteReidemeister", "det(A-I) = 0");
  return s.divisors.back();
}

RCount heisenberg_reidemeister(const IntMatrix& a) {
  if (a.n != 2)
    throw validation_error("NotUnimodular", "expected a 2x2 matrix");
  mpz_class da = a.det();
  if (da != 1 && da != -1)
    throw validation_error("NotUnimodular", "det = " + da.get_str());
  mpz_class abelian = abs((a - IntMatrix::identity(2)).det());
  mpz_class central = abs(da - 1);
  if (abelian == 0 || central == 0) return RCount::infinity();
  return RCount::of(abelian * central);
}

namespace {

int heis_index(int m, int a, int b, int c) { return (a * m + b) * m + c; }

}  // namespace

FiniteGroup heisenberg_group(int m) {
  if (m < 1 || m > 10)
    throw precondition_error("OrderLimitExceeded",
                             "H(Z/m) table path requires 1 <= m <= 10");
  int n = m * m * m;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int a2 = 0; a2 < m; ++a2)
          for (int b2 = 0; b2 < m; ++b2)
            for (int c2 = 0; c2 < m; ++c2)
              table[heis_index(m, a, b, c)][heis_index(m, a2, b2, c2)] =
                  heis_index(m, (a + a2) % m, (b + b2) % m,
                             (c + c2 + a * b2) % m);
  return build_from_table(std::move(table), "H(Z/" + std::to_string(m) + ")");
}

Automorphism heisenberg_automorphism(const FiniteGroup& h, int m,
                                     const IntMatrix& a) {
  if (a.n != 2)
    throw validation_error("NotInduced", "expected a 2x2 matrix");
  auto entry = [&](int r, int c) {
    mpz_class v = a.at(r, c) % m;
    return static_cast<int>(v.get_si() < 0 ? v.get_si() + m : v.get_si());
  };
  int p = entry(0, 0), r = entry(1, 0);  // image of x: first column
  int q = entry(0, 1), s = entry(1, 1);  // image of y: second column
  mpz_class detz = a.det() % m;
  int det = static_cast<int>(detz.get_si() < 0 ? detz.get_si() + m
                                               : detz.get_si());

  int gx = heis_index(m, p, r, 0);
  int gy = heis_index(m, q, s, 0);
  int gz = heis_index(m, 0, 0, det % m);

  std::vector<int> images(h.order);
  for (int ea = 0; ea < m; ++ea)
    for (int eb = 0; eb < m; ++eb)
      for (int ec = 0; ec < m; ++ec) {
        // (a,b,c) = x^a y^b z^{c-ab}
        int img = h.mul(h.power(gx, ea), h.power(gy, eb));
        img = h.mul(img, h.power(gz, (long long)ec - (long long)ea * eb));
        images[heis_index(m, ea, eb, ec)] = img;
      }
  if (!is_automorphism(h, images))
    throw validation_error("NotInduced",
                           "matrix does not induce an automorphism of H(Z/" +
                               std::to_string(m) + ")");
  return make_automorphism(h, std::move(images));
}

FiniteGroup lattice_quotient_group(int n, int m) {
  long long order = 1;
  for (int i = 0; i < n; ++i) order *= m;
  if (order > 1024)
    throw precondition_error("OrderLimitExceeded", "m^n exceeds 1024");
  int sz = static_cast<int>(order);
  auto coords = [&](int idx) {
    std::vector<int> c(n);
    for (int i = n - 1; i >= 0; --i) {
      c[i] = idx % m;
      idx /= m;
    }
    return c;
  };
  auto index = [&](const std::vector<int>& c) {
    int idx = 0;
    for (int i = 0; i < n; ++i) idx = idx * m + ((c[i] % m) + m) % m;
    return idx;
  };
  std::vector<std::vector<int>> table(sz, std::vector<int>(sz));
  for (int a = 0; a < sz; ++a) {
    auto ca = coords(a);
    for (int b = 0; b < sz; ++b) {
      auto cb = coords(b);
      std::vector<int> cc(n);
      for (int i = 0; i < n; ++i) cc[i] = ca[i] + cb[i];
      table[a][b] = index(cc);
    }
  }
  return build_from_table(std::move(table),
                          "(Z/" + std::to_string(m) + ")^" + std::to_string(n));
}

Automorphism lattice_quotient_automorphism(const FiniteGroup& g, int n, int m,
                                           const IntMatrix& a) {
  std::vector<int> images(g.order);
  for (int idx = 0; idx < g.order; ++idx) {
    std::vector<int> c(n);
    int rest = idx;
    for (int i = n - 1; i >= 0; --i) {
      c[i] = rest % m;
      rest /= m;
    }
    int out = 0;
    for (int r = 0; r < n; ++r) {
      mpz_class v = 0;
      for (int j = 0; j < n; ++j) v += a.at(r, j) * c[j];
      v %= m;
      if (v < 0) v += m;
      out = out * m + static_cast<int>(v.get_si());
    }
    images[idx] = out;
  }
  return make_automorphism(g, std::move(images));
}

namespace {

IntMatrix zn_witness(int n, int k) {
  if (n == 2)
    return IntMatrix::from_rows({{k + 1, k}, {1, 1}});
  // Companion matrix of x^n + k·x - 1: det = ±1, |det(A-I)| = k.
  IntMatrix c(n);
  for (int i = 1; i < n; ++i) c.at(i, i - 1) = 1;
  c.at(0, n - 1) = 1;   // -c_0
  c.at(1, n - 1) = -k;  // -c_1
  return c;
}

void verify_zn_witness(const IntMatrix& a, int k) {
  mpz_class da = a.det();
  if (da != 1 && da != -1)
    throw precondition_error("WitnessNotFound", "witness is not unimodular");
  RCount r = reidemeister_number_lattice(a);
  if (!r.finite || r.value != k)
    throw precondition_error("WitnessNotFound",
                             "witness does not realize " + std::to_string(k));
  auto pts = fixed_dual_characters(a);
  if (mpz_class(static_cast<long>(pts.size())) != r.value)
    throw precondition_error("WitnessNotFound",
                             "torus-point count disagrees with determinant");
}

}  // namespace

SpectrumResult spectrum_search(SpectrumFamily family, int n, int value_bound,
                               int search_bound) {
  if (value_bound < 1 || search_bound < 1)
    throw precondition_error("HypothesisViolated", "bounds must be positive");
  SpectrumResult res;
  switch (family) {
    case SpectrumFamily::Z: {
      res.family = "Z";
      // Aut(Z) = {1, -1}, exhaustively.
      IntMatrix one = IntMatrix::identity(1);
      IntMatrix minus(1);
      minus.at(0, 0) = -1;
      res.includes_infinity = true;
      res.infinity_witness = one;
      RCount r = reidemeister_number_lattice(minus);
      res.realized.push_back({r.value, minus});
      break;
    }
    case SpectrumFamily::Zn: {
      res.family = "Z^" + std::to_string(n);
      if (n < 2)
        throw precondition_error("HypothesisViolated",
                                 "Zn family requires n >= 2");
      for (int k = 1; k <= value_bound; ++k) {
        IntMatrix w = zn_witness(n, k);
        verify_zn_witness(w, k);
        res.realized.push_back({k, w});
      }
      res.includes_infinity = true;
      res.infinity_witness = IntMatrix::identity(n);
      break;
    }
    case SpectrumFamily::Heisenberg: {
      res.family = "Heisenberg";
      IntMatrix s = IntMatrix::from_rows({{0, 1}, {-1, 0}});
      IntMatrix t = IntMatrix::from_rows({{1, 1}, {0, 1}});
      IntMatrix ti = IntMatrix::from_rows({{1, -1}, {0, 1}});
      IntMatrix j = IntMatrix::from_rows({{1, 0}, {0, -1}});
      std::vector<IntMatrix> gens{s, t, ti, j};

      std::map<std::vector<mpz_class>, int> seen;
      std::vector<IntMatrix> frontier{IntMatrix::identity(2)};
      seen[frontier[0].entries] = 0;
      std::vector<IntMatrix> all = frontier;
      for (int len = 1; len <= search_bound; ++len) {
        std::vector<IntMatrix> next;
        for (const auto& w : frontier)
          for (const auto& g : gens) {
            IntMatrix prod = w * g;
            if (seen.emplace(prod.entries, len).second) {
              next.push_back(prod);
              all.push_back(prod);
            }
          }
        frontier = std::move(next);
      }
      std::map<mpz_class, IntMatrix> realized;
      bool has_inf = false;
      IntMatrix inf_witness;
      for (const auto& w : all) {
        RCount r = heisenberg_reidemeister(w);
        if (!r.finite) {
          if (!has_inf) {
            has_inf = true;
            inf_witness = w;
          }
        } else {
          realized.emplace(r.value, w);
        }
      }
      for (auto& [v, w] : realized) res.realized.push_back({v, w});
      res.includes_infinity = has_inf;
      res.infinity_witness = inf_witness;
      break;
    }
  }
  return res;
}

}  // namespace twisted
