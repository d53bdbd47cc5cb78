#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace nps {

using Int = std::int64_t;

constexpr bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Integer power; caller guarantees no overflow.
constexpr Int ipow(Int base, Int exp) {
  Int r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

/// Least non-negative residue.
constexpr Int mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

constexpr Int powmod(Int base, Int exp, Int m) {
  if (m == 1) return 0;
  Int r = 1;
  Int b = mod(base, m);
  while (exp > 0) {
    if (exp & 1) r = r * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return r;
}

/// Inverse of a modulo m, if gcd(a, m) = 1.
inline std::optional<Int> inverse_mod(Int a, Int m) {
  Int old_r = mod(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    Int t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) return std::nullopt;
  return mod(old_s, m);
}

/// Multiplicative order of a modulo m; nullopt unless gcd(a, m) = 1.
inline std::optional<Int> multiplicative_order(Int a, Int m) {
  if (m == 1) return 1;
  a = mod(a, m);
  if (std::gcd(a, m) != 1) return std::nullopt;
  Int x = a, k = 1;
  while (x != 1) {
    x = x * a % m;
    ++k;
  }
  return k;
}

inline std::vector<Int> divisors(Int n) {
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline std::vector<Int> prime_factors(Int n) {
  std::vector<Int> ps;
  for (Int d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    ps.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

/// Largest power of p dividing n.
inline Int prime_part(Int n, Int p) {
  Int r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

/// Exponent of p in n (p-adic valuation).
inline int valuation(Int n, Int p) {
  int v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

/// Returns e if n == p^e for a prime p (p^0 = 1 counts with any p).
inline std::optional<int> log_prime_power(Int n, Int p) {
  if (n < 1) return std::nullopt;
  int e = valuation(n, p);
  if (ipow(p, e) != n) return std::nullopt;
  return e;
}

}  // namespace nps
