#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nps/families.hpp"

namespace nps {

inline constexpr int kMaxClassifiedK = 13;

/// One entry of a classification list: a family with an optional integer
/// parameter n >= n_min and a number of prime parameters subject to a side
/// condition.
struct BucketTemplate {
  std::string text;
  /// 0 when the entry has no n parameter.
  Int n_min = 0;
  /// Multiplier on the sweep bound for n (used by the cyclic entry).
  Int n_scale = 1;
  /// Names of the prime parameters, in slot order.
  std::vector<std::string> primes;
  std::string condition;
  std::function<bool(std::span<const Int>)> primes_ok;
  std::function<FamilySpec(Int, std::span<const Int>)> make;

  bool has_n() const { return n_min > 0; }

  /// Smallest admissible primes (lexicographically), if any below 100.
  std::optional<std::vector<Int>> minimal_primes() const;
  /// n = n_min, minimal primes.
  FamilySpec minimal() const;
  /// Minimal primes, n from n_min to max(n_min, n_scale * max_n), order <= cap.
  std::vector<FamilySpec> instances(Int max_n, std::size_t cap) const;
  /// All admissible instances of exactly the given order, primes drawn from
  /// the prime divisors of `order`.
  std::vector<FamilySpec> instances_of_order(Int order) const;
};

/// Transcription of the classification of groups with exactly k nonpower
/// subgroups, 0 <= k <= 13. Empty for k = 1, 2. Throws ValidationError
/// for k outside that range.
std::vector<BucketTemplate> theorem_catalog(int k);

}  // namespace nps
