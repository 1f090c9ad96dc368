#pragma once

#include <cstdint>
#include <limits>
#include <optional>

namespace gprs {

struct PrimePower {
  std::uint64_t p = 0;
  std::uint32_t s = 0;
};

constexpr bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

/// Splits q = p^s; empty when q is not a prime power.
constexpr std::optional<PrimePower> decompose_prime_power(std::uint64_t q) noexcept {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return PrimePower{q, 1};
  std::uint32_t s = 0;
  while (q % p == 0) {
    q /= p;
    ++s;
  }
  if (q != 1) return std::nullopt;
  return PrimePower{p, s};
}

/// Largest r with p^r | n. n must be positive.
constexpr unsigned p_adic_valuation(std::uint64_t n, std::uint64_t p) noexcept {
  unsigned r = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++r;
  }
  return r;
}

inline constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

constexpr std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) noexcept {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

/// base^exp, clamped to kSaturated on overflow.
constexpr std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) noexcept {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    r = saturating_mul(r, base);
    if (r == kSaturated) break;
  }
  return r;
}

/// C(n, r) clamped to kSaturated on overflow.
constexpr std::uint64_t saturating_binomial(std::uint64_t n, std::uint64_t r) noexcept {
  if (r > n) return 0;
  if (r > n - r) r = n - r;
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;
    if (acc > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace gprs
