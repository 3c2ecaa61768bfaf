#pragma once

#include <cstdint>
#include <string>

#include "gin/error.hpp"

namespace gin {

using Coeff = std::uint32_t;

inline constexpr std::uint32_t kDefaultPrime = 32003;

inline bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t q = 2; q * q <= v; ++q) {
    if (v % q == 0) return false;
  }
  return true;
}

/// Integers mod an odd prime p < 2^31. Elements are plain Coeff values in [0, p).
class PrimeField {
 public:
  PrimeField() : PrimeField(kDefaultPrime) {}
  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p < 3 || p >= (1u << 31) || !is_prime(p)) {
      throw UsageError("modulus " + std::to_string(p) + " is not an odd prime below 2^31");
    }
  }

  std::uint32_t p() const { return p_; }

  Coeff reduce(std::int64_t v) const {
    const auto m = static_cast<std::int64_t>(p_);
    v %= m;
    if (v < 0) v += m;
    return static_cast<Coeff>(v);
  }
  Coeff add(Coeff a, Coeff b) const {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Coeff pow(Coeff a, std::uint64_t e) const {
    Coeff r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  Coeff inv(Coeff a) const {
    if (a == 0) throw UsageError("inverse of zero");
    return pow(a, p_ - 2);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

}  // namespace gin
