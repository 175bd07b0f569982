#include "twisted/dynamics.hpp"

#include <algorithm>

namespace twisted {

int moebius(long long n) {
  if (n < 1) throw precondition_error("HypothesisViolated", "n must be >= 1");
  int m = 1;
  for (long long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      m = -m;
    }
  if (n > 1) m = -m;
  return m;
}

std::vector<long long> divisors(long long n) {
  std::vector<long long> ds;
  for (long long d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      ds.push_back(d);
      if (d != n / d) ds.push_back(n / d);
    }
  std::sort(ds.begin(), ds.end());
  return ds;
}

ReidemeisterSequence reidemeister_sequence(const FiniteGroup& g,
                                           const Automorphism& phi,
                                           int max_n) {
  ReidemeisterSequence seq;
  for (int n = 1; n <= max_n; ++n) {
    Automorphism pn = automorphism_power(g, phi, n);
    seq.values.push_back(
        RCount::of(reidemeister_partition(g, pn).count));
  }
  return seq;
}

ReidemeisterSequence reidemeister_sequence(const IntMatrix& a, int max_n) {
  ReidemeisterSequence seq;
  for (int n = 1; n <= max_n; ++n)
    seq.values.push_back(reidemeister_number_lattice(a.power(n)));
  return seq;
}

GaussReport gauss_congruence_check(const ReidemeisterSequence& seq,
                                   long long n) {
  GaussReport rep;
  rep.n = n;
  for (long long d : divisors(n)) {
    int mu = moebius(d);
    if (mu == 0) continue;
    const RCount& r = seq.values.at(n / d - 1);
    if (!r.finite)
      throw precondition_error("InfiniteValueEncountered",
                               "R(φ^" + std::to_string(n / d) +
                                   ") is infinite");
    rep.sum += mu * r.value;
  }
  rep.pass = rep.sum % static_cast<long>(n) == 0;
  if (rep.pass) rep.quotient = rep.sum / static_cast<long>(n);
  return rep;
}

PeriodicPointCount periodic_point_accounting(const FiniteGroup& g,
                                             const Automorphism& phi,
                                             long long n) {
  PeriodicPointCount out;
  out.n = n;
  CharacterTable table = character_table(g);
  auto ds = divisors(n);

  std::map<long long, mpz_class> fixed;  // F_d = #Fix(φ̂^d)
  for (long long d : ds) {
    Automorphism pd = automorphism_power(g, phi, d);
    DualAction act = dual_action(table, g, pd);
    fixed[d] = static_cast<long>(act.fixed_rows.size());
  }
  // P_d = Σ_{e|d} μ(d/e)·F_e
  for (long long d : ds) {
    mpz_class p = 0;
    for (long long e : divisors(d)) p += moebius(d / e) * fixed[e];
    out.least_period[d] = p;
  }
  Automorphism pn = automorphism_power(g, phi, n);
  mpz_class rn = reidemeister_partition(g, pn).count;
  mpz_class total = 0;
  out.divisibility_ok = true;
  for (long long d : ds) {
    total += out.least_period[d];
    if (out.least_period[d] % static_cast<long>(d) != 0)
      out.divisibility_ok = false;
  }
  out.accounting_ok = total == rn;
  return out;
}

namespace {

// x ↦ A^T x mod Z^n on a torus point.
TorusPoint dual_map(const IntMatrix& at, const TorusPoint& p) {
  TorusPoint q;
  int n = at.n;
  q.coords.resize(n);
  mpz_class ord = 1;
  for (int r = 0; r < n; ++r) {
    mpq_class x = 0;
    for (int c = 0; c < n; ++c)
      if (p.coords[c] != 0) x += mpq_class(at.at(r, c)) * p.coords[c];
    x.canonicalize();
    mpz_class fl = x.get_num() / x.get_den();
    if (x < 0 && x.get_num() % x.get_den() != 0) fl -= 1;
    x -= fl;
    q.coords[r] = x;
    ord = lcm(ord, x.get_den());
  }
  q.order = ord;
  return q;
}

}  // namespace

PeriodicPointCount periodic_point_accounting(const IntMatrix& a, long long n,
                                             long long cap) {
  PeriodicPointCount out;
  out.n = n;
  auto ds = divisors(n);
  std::map<long long, mpz_class> fixed;
  for (long long d : ds) {
    RCount r = reidemeister_number_lattice(a.power(d));
    if (!r.finite)
      throw precondition_error("InfiniteValueEncountered",
                               "det(A^" + std::to_string(d) + " - I) = 0");
    fixed[d] = r.value;
  }
  for (long long d : ds) {
    mpz_class p = 0;
    for (long long e : divisors(d)) p += moebius(d / e) * fixed[e];
    out.least_period[d] = p;
  }
  mpz_class total = 0;
  out.divisibility_ok = true;
  for (long long d : ds) {
    total += out.least_period[d];
    if (out.least_period[d] % static_cast<long>(d) != 0)
      out.divisibility_ok = false;
  }
  out.accounting_ok = total == fixed[n];

  // Direct orbit partition of the n-periodic points, when feasible.
  if (fixed[n] <= static_cast<long>(cap)) {
    IntMatrix at = a.transpose();
    std::vector<TorusPoint> pts = fixed_dual_characters(a.power(n), cap);
    std::map<long long, mpz_class> direct;
    for (const auto& p : pts) {
      long long period = 0;
      for (long long d : ds) {
        // least d | n with (A^T)^d x = x
        TorusPoint r = p;
        for (long long i = 0; i < d; ++i) r = dual_map(at, r);
        if (r == p) {
          period = d;
          break;
        }
      }
      if (period == 0)
        throw internal_error("periodic point has no period dividing n");
      direct[period] += 1;
    }
    for (long long d : ds) {
      mpz_class want = out.least_period[d];
      mpz_class got = direct.count(d) ? direct[d] : mpz_class(0);
      if (want != got)
        throw internal_error(
            "direct orbit count disagrees with Möbius inversion at d = " +
            std::to_string(d));
    }
  }
  return out;
}

}  // namespace twisted
