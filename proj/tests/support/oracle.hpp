#pragma once

// Brute-force reference computations. Nothing here calls the library's
// subgroup, power or presentation code; only Group::mul/inv/order and the
// raw table constructor are used.

#include <cstdint>
#include <set>
#include <vector>

#include "nps/group.hpp"
#include "nps/numtheory.hpp"

namespace oracle {

using nps::Element;
using nps::Group;
using Members = std::vector<bool>;

/// Smallest subset containing `gens` that is closed under multiplication.
Members closure(const Group& g, const std::vector<Element>& gens);

/// Order of x by repeated multiplication.
std::uint64_t order_of(const Group& g, Element x);
std::uint64_t exponent(const Group& g);

/// x^m by repeated multiplication.
Element power(const Group& g, Element x, std::uint64_t m);

/// Every subset containing the identity that is closed under products.
/// Exponential: order <= 16 only.
std::set<Members> subgroups_by_subsets(const Group& g);

/// Every subgroup generated by at most three elements.
std::set<Members> subgroups_by_triples(const Group& g);

/// <x^m : x in G>.
Members power_subgroup(const Group& g, std::uint64_t m);

struct Counts {
  std::size_t s = 0, ps = 0, nps = 0;
};

/// ps over every m = 1..e (not only divisors of e).
Counts counts(const Group& g, const std::set<Members>& subgroups);

/// Explicit multiplication tables.
Group quaternion(std::uint64_t order);
Group dihedral(std::uint64_t order);
Group cyclic(std::uint64_t n);
/// C_q x| C_p with a^-1 b a = b^s, elements b^i a^j, from the normal form.
Group metacyclic(std::uint64_t q, std::uint64_t p, std::int64_t s);

bool is_homomorphism(const Group& g, const Group& h, const std::vector<Element>& images);
bool is_bijection(const std::vector<Element>& images, std::size_t n);

}  // namespace oracle
