#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nps/bitset.hpp"
#include "nps/error.hpp"

namespace nps {

using Element = std::uint32_t;
using Permutation = std::vector<std::uint32_t>;

/// Order cap applied to every group construction unless overridden.
inline constexpr std::size_t kDefaultOrderCap = 4096;

/// A finite group stored as a full multiplication table.
///
/// Elements are numbered 0..order-1 in breadth-first order from the
/// identity (always 0), applying the generators in their stored order.
/// Products are read left to right: mul(x, y) is "x then y", which for
/// permutation groups means points are acted on from the right.
/// Instances are immutable after construction.
class Group {
 public:
  static constexpr Element identity = 0;

  /// Trivial group.
  Group();

  std::size_t order() const { return order_; }
  Element mul(Element x, Element y) const { return table_[std::size_t{x} * order_ + y]; }
  Element inv(Element x) const { return inv_[x]; }
  std::span<const Element> generators() const { return generators_; }
  const std::string& label() const { return label_; }

  /// Copy with a new display label.
  Group relabeled(std::string label) const;

  /// Precomputed order of x (no range check, see element_order()).
  std::uint32_t order_of(Element x) const { return orders_[x]; }

  /// x^k for any integer k.
  Element pow(Element x, std::int64_t k) const;

  Element conjugate(Element x, Element by) const { return mul(mul(inv(by), x), by); }
  Element commutator(Element x, Element y) const {
    return mul(mul(inv(x), inv(y)), mul(x, y));
  }

  /// Builds the canonical group from an arbitrary multiplication table.
  ///
  /// `table` is row-major n*n, `id` is the identity of the raw numbering and
  /// `gens` raw element indices that must generate the whole group. The
  /// result is renumbered breadth-first from the identity.
  /// If `relabel` is non-null it receives the raw-to-canonical index map.
  static Group from_table(std::size_t n, std::span<const Element> table, Element id,
                          std::span<const Element> gens, std::string label = {},
                          std::vector<Element>* relabel = nullptr);

  /// Builds a group from a Cayley graph already in breadth-first order:
  /// `right[g][x]` is x times generator g, element 0 is the identity, and
  /// `gen_elements[g]` is the element that generator g equals.
  static Group from_cayley_graph(const std::vector<std::vector<Element>>& right,
                                 std::vector<Element> gen_elements, std::string label = {});

 private:
  void finish();

  std::size_t order_ = 1;
  std::vector<Element> table_{0};
  std::vector<Element> inv_{0};
  std::vector<std::uint32_t> orders_{1};
  std::vector<Element> generators_;
  std::string label_;
};

/// A subgroup of some parent group, stored as a membership bitset.
///
/// Subgroups do not own their parent; every operation takes the parent
/// group explicitly.
class Subgroup {
 public:
  Subgroup() = default;
  explicit Subgroup(Bitset members) : members_(std::move(members)), size_(members_.count()) {}

  const Bitset& members() const { return members_; }
  std::size_t size() const { return size_; }
  bool contains(Element x) const { return members_.test(x); }
  std::vector<Element> elements() const { return members_.to_vector(); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }
  /// Orders by size, then lexicographically by member list.
  friend std::strong_ordering operator<=>(const Subgroup& a, const Subgroup& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return lex_compare(a.members_, b.members_);
  }

 private:
  Bitset members_;
  std::size_t size_ = 0;
};

/// Element-wise map between two groups.
struct Morphism {
  std::vector<Element> images;

  Element operator()(Element x) const { return images[x]; }
};

// Construction.

/// Group generated by permutations of {0..degree-1}.
Group group_from_generators(std::size_t degree, std::span<const Permutation> perms,
                            std::size_t cap = kDefaultOrderCap);

/// Cyclic group of order n generated by element 1; element i is the i-th power.
Group cyclic_group(std::size_t n);

Group direct_product(const Group& g, const Group& h, std::size_t cap = kDefaultOrderCap);

/// N semidirect K with (n1,k1)(n2,k2) = (n1 * act(k1)(n2), k1 k2).
///
/// `action[i]` is the automorphism of N attached to the i-th generator of K,
/// given as an element permutation of N. The product is generated by the
/// generators of N followed by those of K.
Group semidirect_product(const Group& n, const Group& k, std::span<const Permutation> action,
                         std::size_t cap = kDefaultOrderCap);

/// Coset group G/N and the canonical projection.
std::pair<Group, Morphism> quotient(const Group& g, const Subgroup& n);

// Element-level structure.

/// Order of x; throws ValidationError when x is out of range.
std::uint32_t element_order(const Group& g, Element x);
std::uint64_t exponent(const Group& g);
bool is_abelian(const Group& g);

// Subgroups.

Subgroup trivial_subgroup(const Group& g);
Subgroup whole_group(const Group& g);
/// Smallest subgroup containing `gens`.
Subgroup generate(const Group& g, std::span<const Element> gens);
/// Smallest subgroup containing h and x, where `h_gens` generate h.
Subgroup join(const Group& g, const Subgroup& h, std::span<const Element> h_gens, Element x);
bool is_subgroup(const Group& g, const Bitset& members);
bool is_normal(const Group& g, const Subgroup& h);
Subgroup conjugate(const Group& g, const Subgroup& h, Element by);
Subgroup center(const Group& g);
Subgroup derived_subgroup(const Group& g);
Subgroup intersection(const Subgroup& a, const Subgroup& b);
/// The subgroup as a standalone group, with a greedily chosen generating set.
Group subgroup_as_group(const Group& g, const Subgroup& h);

// Morphisms.

bool is_homomorphism(const Group& domain, const Group& codomain, const Morphism& f);
bool is_automorphism(const Group& g, const Permutation& images);
/// Extends generator images to a homomorphism; empty optional if impossible.
/// `images[i]` is the image of the i-th generator of `domain`.
std::optional<Morphism> extend_homomorphism(const Group& domain, const Group& codomain,
                                            std::span<const Element> images);

/// Exhaustive check of the group axioms on the table: associativity,
/// identity, inverses and generation. O(n^3).
bool verify_axioms(const Group& g);

/// Right regular representation: generator images as permutations of the
/// element indices, x -> x * gen.
std::vector<Permutation> regular_generators(const Group& g);

}  // namespace nps
