#pragma once

#include <bit>
#include <cstdint>
#include <limits>

#include "steenrod/error.hpp"

namespace steenrod {

/// Marker for an unbounded Sq_0 / P_0 level (the zero element, the unit).
inline constexpr int kInfiniteLevel = std::numeric_limits<int>::max();

/// C(n, k) mod 2 by Lucas: odd iff the binary digits of k are a subset of those of n.
constexpr bool binomial_odd(std::uint64_t n, std::uint64_t k) noexcept {
  return k <= n && (k & ~n) == 0;
}

/// C(n, k) mod p for a prime p, digit by digit in base p.
constexpr std::uint32_t binomial_mod(std::uint64_t n, std::uint64_t k, std::uint32_t p) noexcept {
  if (k > n) return 0;
  std::uint64_t result = 1;
  while (k > 0 || n > 0) {
    const std::uint64_t nd = n % p;
    const std::uint64_t kd = k % p;
    if (kd > nd) return 0;
    // small binomial C(nd, kd) with nd < p, computed exactly then reduced
    std::uint64_t c = 1;
    for (std::uint64_t i = 0; i < kd; ++i) c = c * (nd - i) / (i + 1);
    result = (result * (c % p)) % p;
    n /= p;
    k /= p;
  }
  return static_cast<std::uint32_t>(result);
}

constexpr std::int64_t ipow(std::int64_t base, int exponent) {
  if (exponent < 0) throw PreconditionError("ipow: negative exponent");
  std::int64_t result = 1;
  for (int i = 0; i < exponent; ++i) {
    if (result > std::numeric_limits<std::int64_t>::max() / (base == 0 ? 1 : base))
      throw ResourceError("ipow: overflow");
    result *= base;
  }
  return result;
}

/// Exact ceiling of num / den for den > 0.
constexpr std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw PreconditionError("ceil_div: non-positive denominator");
  const std::int64_t q = num / den;
  return (num % den != 0 && num > 0) ? q + 1 : q;
}

constexpr bool is_power_of_two(std::uint64_t n) noexcept { return std::has_single_bit(n); }

/// Multiplicative inverse mod a prime p (p small).
constexpr std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  a %= p;
  if (a == 0) throw PreconditionError("inverse_mod: zero has no inverse");
  std::uint64_t result = 1;
  std::uint64_t base = a;
  std::uint32_t e = p - 2;
  while (e > 0) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

constexpr bool is_prime(std::uint32_t n) noexcept {
  if (n < 2) return false;
  for (std::uint32_t i = 2; i * i <= n; ++i)
    if (n % i == 0) return false;
  return true;
}

}  // namespace steenrod
