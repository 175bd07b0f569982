#include "twisted/fp.hpp"

namespace twisted {

std::int64_t Fp::sqrt(std::int64_t a) const {
  a = reduce(a);
  if (a == 0) return 0;
  if (p_ == 2) return a;
  if (pow(a, (p_ - 1) / 2) != 1) return -1;
  if (p_ % 4 == 3) return pow(a, (p_ + 1) / 4);

  // Tonelli-Shanks for p ≡ 1 (mod 4).
  std::int64_t q = p_ - 1;
  int s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::int64_t z = 2;
  while (pow(z, (p_ - 1) / 2) == 1) ++z;
  std::int64_t m = s;
  std::int64_t c = pow(z, q);
  std::int64_t t = pow(a, q);
  std::int64_t r = pow(a, (q + 1) / 2);
  while (t != 1) {
    std::int64_t i = 0;
    std::int64_t tt = t;
    while (tt != 1) {
      tt = mul(tt, tt);
      ++i;
    }
    std::int64_t b = c;
    for (std::int64_t j = 0; j < m - i - 1; ++j) b = mul(b, b);
    m = i;
    c = mul(b, b);
    t = mul(t, c);
    r = mul(r, b);
  }
  return r;
}

std::int64_t Fp::primitive_root() const {
  if (p_ == 2) return 1;
  // Factor p-1 by trial division.
  std::vector<std::int64_t> primes;
  std::int64_t n = p_ - 1;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      primes.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) primes.push_back(n);
  for (std::int64_t g = 2; g < p_; ++g) {
    bool ok = true;
    for (std::int64_t q : primes) {
      if (pow(g, (p_ - 1) / q) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw internal_error("no primitive root found");
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t find_splitting_prime(std::int64_t m, std::int64_t lower) {
  for (std::int64_t p = (lower / m + 1) * m + 1;; p += m) {
    if (p > (std::int64_t{1} << 31))
      throw precondition_error("PrimeSearchFailed",
                               "no prime ≡ 1 mod " + std::to_string(m) +
                                   " below 2^31");
    if (is_prime(p)) return p;
  }
}

}  // namespace twisted
