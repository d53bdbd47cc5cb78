#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "nps/group.hpp"

namespace nps {

/// Default order cap for full subgroup enumeration.
inline constexpr std::size_t kDefaultLatticeCap = 600;

/// Lattice cap after applying the NPS_MAX_ORDER environment override.
std::size_t lattice_cap_from_env(std::size_t fallback = kDefaultLatticeCap);

/// Every subgroup of a group, with normality, conjugacy and power data.
struct Lattice {
  /// Deduplicated, sorted by (size, member list).
  std::vector<Subgroup> subgroups;
  std::vector<bool> normal;
  /// Conjugacy class id per subgroup; ids are numbered by first occurrence.
  std::vector<std::size_t> conjugacy_class;
  /// Divisor m of the exponent -> index of G^m in `subgroups`.
  std::map<std::uint64_t, std::size_t> power_index;

  std::size_t index_of(const Subgroup& h) const;
  bool is_power(std::size_t index) const;
  std::size_t class_count() const;
};

struct PrimeData {
  std::uint64_t p = 0;
  /// p^f is the largest order of a p-element.
  int f = 0;
  /// p^k is the largest order of a cyclic power subgroup that is a p-group.
  int k = 0;

  friend bool operator==(const PrimeData&, const PrimeData&) = default;
};

struct CountSummary {
  std::size_t order = 1;
  std::uint64_t exponent = 1;
  std::size_t s = 1;
  std::size_t ps = 1;
  std::size_t nps = 0;
  std::vector<PrimeData> primes;

  friend bool operator==(const CountSummary&, const CountSummary&) = default;
};

/// All subgroups, as the join-closure of the cyclic subgroups.
/// Throws SizeLimitError when the order exceeds `cap`.
Lattice all_subgroups(const Group& g, std::size_t cap = kDefaultLatticeCap);

/// G^m, the subgroup generated by all m-th powers.
Subgroup power_subgroup(const Group& g, std::uint64_t m);

/// G^m for every divisor m of the exponent.
std::map<std::uint64_t, Subgroup> power_subgroups(const Group& g);

/// Number of distinct power subgroups.
std::size_t power_subgroup_count(const Group& g);

CountSummary counts(const Group& g, std::size_t cap = kDefaultLatticeCap);
CountSummary counts(const Group& g, const Lattice& lattice);

/// All conjugates of h, sorted. Throws ValidationError if h is not a subgroup.
std::vector<Subgroup> conjugates(const Group& g, const Subgroup& h);
/// Normality check that first validates h as a subgroup of g.
bool is_normal_subgroup(const Group& g, const Subgroup& h);
Subgroup normalizer(const Group& g, const Subgroup& h);

bool is_cyclic(const Group& g, const Subgroup& h);
bool is_p_group_order(std::uint64_t n, std::uint64_t p);

/// A Sylow p-subgroup (first in lattice order); trivial if p does not divide |G|.
Subgroup sylow(const Group& g, std::uint64_t p, const Lattice& lattice);
Subgroup sylow(const Group& g, std::uint64_t p);

/// Intersection of the maximal subgroups (G itself for the trivial group).
Subgroup frattini(const Group& g, const Lattice& lattice);
Subgroup frattini(const Group& g);

/// Subgroup generated by x with x^(p^i) = 1. Throws ValidationError
/// unless |G| is a power of a prime.
Subgroup omega(const Group& g, unsigned i);

/// Number of cyclic p-subgroups that are not power subgroups.
std::size_t cyclic_nonpower_p_count(const Group& g, std::uint64_t p, const Lattice& lattice);

/// Maximal subgroups in lattice order.
std::vector<std::size_t> maximal_subgroups(const Lattice& lattice);

}  // namespace nps
