#include "twisted/twisted.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace twisted {

ReidemeisterPartition reidemeister_partition(const FiniteGroup& g,
                                             const Automorphism& phi) {
  ReidemeisterPartition p;
  p.class_of.assign(g.order, -1);
  for (int a = 0; a < g.order; ++a) {
    if (p.class_of[a] >= 0) continue;
    int id = p.count++;
    p.representatives.push_back(a);
    std::vector<int> work{a};
    p.class_of[a] = id;
    int size = 0;
    while (!work.empty()) {
      int x = work.back();
      work.pop_back();
      ++size;
      for (int s = 0; s < g.order; ++s) {
        int y = g.mul(g.mul(s, x), phi(g.inv(s)));
        if (p.class_of[y] < 0) {
          p.class_of[y] = id;
          work.push_back(y);
        }
      }
    }
    p.class_sizes.push_back(size);
  }
  return p;
}

TwistedStabilizerResult twisted_stabilizer(const FiniteGroup& g,
                                           const Automorphism& phi, int base,
                                           int target) {
  TwistedStabilizerResult r;
  r.base_point = base;
  r.target = target;
  for (int k = 0; k < g.order; ++k)
    if (g.mul(g.mul(k, base), phi(g.inv(k))) == target) r.coset.push_back(k);
  // |St(g,h)| = |St(g)| whenever nonempty (the set is a coset of St(g)).
  if (target == base) {
    r.stabilizer_order = static_cast<int>(r.coset.size());
  } else {
    int n = 0;
    for (int k = 0; k < g.order; ++k)
      if (g.mul(g.mul(k, base), phi(g.inv(k))) == base) ++n;
    r.stabilizer_order = n;
  }
  return r;
}

Subgroup fixed_subgroup(const FiniteGroup& g, const Automorphism& phi) {
  Subgroup h;
  for (int k = 0; k < g.order; ++k)
    if (phi(k) == k) h.members.push_back(k);
  return h;
}

CheckReport shift_class_check(const FiniteGroup& g, const Automorphism& phi,
                              int k) {
  CheckReport rep;
  Automorphism shifted = compose(inner_automorphism(g, g.inv(k)), phi);
  ReidemeisterPartition left = reidemeister_partition(g, phi);
  ReidemeisterPartition right = reidemeister_partition(g, shifted);
  if (left.count != right.count) {
    rep.pass = false;
    rep.detail = "R(φ) = " + std::to_string(left.count) +
                 " but R(τ_{k^-1}∘φ) = " + std::to_string(right.count);
    return rep;
  }
  // {g}_φ·k must be a single class of the shifted partition, namely the
  // class of g·k.
  for (int a = 0; a < g.order; ++a) {
    std::set<int> image_classes;
    for (int x = 0; x < g.order; ++x)
      if (left.class_of[x] == left.class_of[a])
        image_classes.insert(right.class_of[g.mul(x, k)]);
    if (image_classes.size() != 1 ||
        *image_classes.begin() != right.class_of[g.mul(a, k)]) {
      rep.pass = false;
      rep.detail = "class of g = " + std::to_string(a) +
                   " does not shift onto the class of g·k";
      return rep;
    }
  }
  return rep;
}

QuotientMonotonicityReport quotient_monotonicity_check(
    const FiniteGroup& g, const Subgroup& h, const Automorphism& phi) {
  QuotientMonotonicityReport rep;
  QuotientResult q = quotient_with_induced(g, h, phi);
  rep.r_group = reidemeister_partition(g, phi).count;
  rep.r_quotient = reidemeister_partition(q.quotient, q.induced).count;
  rep.pass = rep.r_group >= rep.r_quotient;
  return rep;
}

BoundsReport check_bounds(const FiniteGroup& g, const Automorphism& phi) {
  BoundsReport rep;
  rep.reidemeister_number = reidemeister_partition(g, phi).count;
  rep.fixed_subgroup_order = fixed_subgroup(g, phi).order();
  long long r = rep.reidemeister_number;
  mpz_class bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), static_cast<unsigned long>(r),
                static_cast<unsigned long>(r - 1));
  bool jabara = mpz_class(rep.fixed_subgroup_order) <= bound;  // |C| ≤ r^{r-1}
  double lhs = std::sqrt(std::log2(double(rep.fixed_subgroup_order)));
  bool log_bound = lhs <= double(r) + 1e-12;
  rep.pass = jabara && log_bound;
  return rep;
}

CheckReport landau_bound_check(const std::vector<long long>& xs) {
  CheckReport rep;
  std::size_t n = xs.size();
  if (n == 0)
    throw precondition_error("HypothesisViolated", "empty sequence");
  for (std::size_t i = 0; i < n; ++i) {
    if (xs[i] <= 0)
      throw precondition_error("HypothesisViolated", "nonpositive entry");
    if (i > 0 && xs[i] < xs[i - 1])
      throw precondition_error("HypothesisViolated", "sequence decreases");
  }
  mpq_class sum = 0;
  for (long long x : xs) sum += mpq_class(1, static_cast<long>(x));
  if (sum != 1)
    throw precondition_error("HypothesisViolated",
                             "reciprocals sum to " + sum.get_str() + ", not 1");

  mpz_class bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), static_cast<unsigned long>(n),
                static_cast<unsigned long>(2 * n - 1));
  if (mpz_class(static_cast<long>(xs.back())) > bound) {
    rep.pass = false;
    rep.detail = "max " + std::to_string(xs.back()) + " exceeds n^{2n-1} = " +
                 bound.get_str();
    return rep;
  }
  // Chain n·x_1···x_r ≥ x_{r+1}.
  mpz_class prod = static_cast<long>(n);
  for (std::size_t r = 0; r + 1 < n; ++r) {
    prod *= static_cast<long>(xs[r]);
    if (prod < static_cast<long>(xs[r + 1])) {
      rep.pass = false;
      rep.detail = "chain fails at r = " + std::to_string(r + 1);
      return rep;
    }
  }
  return rep;
}

int reidemeister_burnside_oracle(const FiniteGroup& g,
                                 const Automorphism& phi) {
  long long total = 0;
  for (int x = 0; x < g.order; ++x) {
    int xi = phi(g.inv(x));
    for (int a = 0; a < g.order; ++a)
      if (g.mul(g.mul(x, a), xi) == a) ++total;
  }
  return static_cast<int>(total / g.order);
}

}  // namespace twisted
