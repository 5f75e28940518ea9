#pragma once

#include <cstdint>
#include <stdexcept>

#include "duple/rational.hpp"

namespace duple {

// Prime-field primitives.  Field elements are stored as uint32_t and the
// modulus is restricted to [2, 2^31 - 1], so a product of two reduced
// values fits in 64 bits without widening tricks.

inline constexpr std::uint64_t kDefaultPrime = 2147483647ull;  // 2^31 - 1
inline constexpr std::uint64_t kMaxPrime = 2147483647ull;

inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint64_t p) {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}

inline std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint64_t p) {
  std::uint64_t s = static_cast<std::uint64_t>(a) + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}

inline std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint64_t p) {
  return a >= b ? a - b : static_cast<std::uint32_t>(a + p - b);
}

inline std::uint32_t pow_mod(std::uint32_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p, b = base % p;
  while (exp > 0) {
    if (exp & 1) result = result * b % p;
    b = b * b % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint64_t p) {
  if (a == 0) throw std::domain_error("inv_mod: zero has no inverse");
  return pow_mod(a, p - 2, p);
}

// Deterministic Miller-Rabin, valid for every 64-bit input.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  auto mulmod64 = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
  };
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = 1, base = a % n, e = d;
    while (e > 0) {
      if (e & 1) x = mulmod64(x, base, n);
      base = mulmod64(base, base, n);
      e >>= 1;
    }
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < r - 1 && composite; ++i) {
      x = mulmod64(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

inline void require_field_prime(std::uint64_t p) {
  if (p < 2 || p > kMaxPrime || !is_prime(p)) {
    throw std::invalid_argument("prime field modulus must be a prime in [2, 2^31 - 1], got " +
                                std::to_string(p));
  }
}

// Image of an exact rational in F_p; the denominator must be a unit mod p.
inline std::uint32_t reduce_mod(const Rational& r, std::uint64_t p) {
  std::int64_t n = r.num() % static_cast<std::int64_t>(p);
  if (n < 0) n += static_cast<std::int64_t>(p);
  std::uint64_t d = static_cast<std::uint64_t>(r.den()) % p;
  if (d == 0) throw std::domain_error("reduce_mod: denominator divisible by p");
  std::uint32_t nv = static_cast<std::uint32_t>(n);
  if (d == 1) return nv;
  return mul_mod(nv, inv_mod(static_cast<std::uint32_t>(d), p), p);
}

}  // namespace duple
