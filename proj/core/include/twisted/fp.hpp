#ifndef TWISTED_FP_HPP
#define TWISTED_FP_HPP

#include <cstdint>
#include <vector>

#include "twisted/errors.hpp"

namespace twisted {

// Arithmetic in the prime field F_p for p < 2^31. Values are canonical
// representatives in [0, p).
class Fp {
public:
  explicit Fp(std::int64_t p) : p_(p) {}

  std::int64_t modulus() const { return p_; }

  std::int64_t reduce(std::int64_t a) const {
    a %= p_;
    return a < 0 ? a + p_ : a;
  }
  std::int64_t add(std::int64_t a, std::int64_t b) const {
    std::int64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::int64_t sub(std::int64_t a, std::int64_t b) const {
    std::int64_t s = a - b;
    return s < 0 ? s + p_ : s;
  }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return (a * b) % p_; }

  std::int64_t pow(std::int64_t a, std::int64_t e) const {
    std::int64_t r = 1 % p_;
    a = reduce(a);
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  std::int64_t inv(std::int64_t a) const {
    a = reduce(a);
    if (a == 0) throw internal_error("Fp::inv of zero");
    return pow(a, p_ - 2);
  }

  // Tonelli-Shanks. Returns r with r*r == a, or -1 if a is a non-residue.
  std::int64_t sqrt(std::int64_t a) const;

  // Smallest generator of the multiplicative group.
  std::int64_t primitive_root() const;

private:
  std::int64_t p_;
};

bool is_prime(std::int64_t n);

// Smallest prime p with p ≡ 1 (mod m) and p > lower.
std::int64_t find_splitting_prime(std::int64_t m, std::int64_t lower);

}  // namespace twisted

#endif
