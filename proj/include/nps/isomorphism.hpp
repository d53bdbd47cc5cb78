#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nps/group.hpp"
#include "nps/lattice.hpp"

namespace nps {

/// Sizes of the conjugacy classes, sorted.
std::vector<std::size_t> class_sizes(const Group& g);

/// Greedy generating sequence: repeatedly adds the highest-order element
/// outside the current span (lowest index on ties).
std::vector<Element> small_generating_set(const Group& g);

/// An isomorphism g -> h if one exists.
///
/// Invariants are compared first, cheapest first (order, exponent, element
/// order histogram, center and derived sizes, class sizes, subgroup counts);
/// then images of a small generating set of g are searched by backtracking
/// with relation checking on every prefix.
std::optional<Morphism> find_isomorphism(const Group& g, const Group& h,
                                         std::size_t cap = kDefaultLatticeCap);

bool are_isomorphic(const Group& g, const Group& h, std::size_t cap = kDefaultLatticeCap);

}  // namespace nps
