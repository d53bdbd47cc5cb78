#include "nps/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>

namespace nps {

namespace {

struct PermHash {
  std::size_t operator()(const Permutation& p) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto v : p) h = (h ^ v) * 0x100000001b3ull;
    return h;
  }
};

constexpr Element kUnset = static_cast<Element>(-1);

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap)
    throw SizeLimitError("group order " + std::to_string(n) + " exceeds cap " +
                         std::to_string(cap));
}

}  // namespace

Group::Group() = default;

Group Group::relabeled(std::string label) const {
  Group g = *this;
  g.label_ = std::move(label);
  return g;
}

Element Group::pow(Element x, std::int64_t k) const {
  const std::int64_t ord = orders_[x];
  k %= ord;
  if (k < 0) k += ord;
  Element result = identity, base = x;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

void Group::finish() {
  inv_.assign(order_, kUnset);
  for (std::size_t x = 0; x < order_; ++x) {
    const Element* row = &table_[x * order_];
    for (std::size_t y = 0; y < order_; ++y) {
      if (row[y] == identity) {
        inv_[x] = static_cast<Element>(y);
        break;
      }
    }
    if (inv_[x] == kUnset) throw ValidationError("multiplication table has no inverse for element " + std::to_string(x));
  }
  orders_.assign(order_, 1);
  for (std::size_t x = 0; x < order_; ++x) {
    Element y = static_cast<Element>(x);
    std::uint32_t k = 1;
    while (y != identity) {
      y = mul(y, static_cast<Element>(x));
      ++k;
      if (k > order_) throw ValidationError("element of infinite order in table");
    }
    orders_[x] = k;
  }
}

Group Group::from_cayley_graph(const std::vector<std::vector<Element>>& right,
                               std::vector<Element> gen_elements, std::string label) {
  const std::size_t ngens = right.size();
  const std::size_t n = ngens == 0 ? 1 : right.front().size();
  // Spanning tree of the Cayley graph: x = parent[x] * gen[parent_gen[x]].
  std::vector<Element> parent(n, kUnset), parent_gen(n, kUnset), bfs;
  bfs.reserve(n);
  bfs.push_back(identity);
  parent[identity] = identity;
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    Element x = bfs[i];
    for (std::size_t g = 0; g < ngens; ++g) {
      Element y = right[g][x];
      if (parent[y] != kUnset) continue;
      parent[y] = x;
      parent_gen[y] = static_cast<Element>(g);
      bfs.push_back(y);
    }
  }
  if (bfs.size() != n) throw ValidationError("generators do not generate the group");

  Group grp;
  grp.order_ = n;
  grp.table_.assign(n * n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    Element* row = &grp.table_[x * n];
    row[identity] = static_cast<Element>(x);
    for (std::size_t i = 1; i < n; ++i) {
      Element y = bfs[i];
      row[y] = right[parent_gen[y]][row[parent[y]]];
    }
  }
  grp.generators_ = std::move(gen_elements);
  grp.label_ = std::move(label);
  grp.finish();
  return grp;
}

Group Group::from_table(std::size_t n, std::span<const Element> table, Element id,
                        std::span<const Element> gens, std::string label,
                        std::vector<Element>* relabel) {
  std::vector<Element> new_of(n, kUnset), old_of;
  old_of.reserve(n);
  new_of[id] = 0;
  old_of.push_back(id);
  for (std::size_t i = 0; i < old_of.size(); ++i) {
    Element x = old_of[i];
    for (Element g : gens) {
      Element y = table[std::size_t{x} * n + g];
      if (new_of[y] != kUnset) continue;
      new_of[y] = static_cast<Element>(old_of.size());
      old_of.push_back(y);
    }
  }
  if (old_of.size() != n) throw ValidationError("generators do not generate the group");

  Group grp;
  grp.order_ = n;
  grp.table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const Element* src = &table[std::size_t{old_of[a]} * n];
    Element* dst = &grp.table_[a * n];
    for (std::size_t b = 0; b < n; ++b) dst[b] = new_of[src[old_of[b]]];
  }
  for (Element g : gens) grp.generators_.push_back(new_of[g]);
  grp.label_ = std::move(label);
  grp.finish();
  if (relabel) *relabel = std::move(new_of);
  return grp;
}

Group group_from_generators(std::size_t degree, std::span<const Permutation> perms,
                            std::size_t cap) {
  for (const auto& p : perms) {
    if (p.size() != degree) throw ValidationError("permutation has wrong degree");
    std::vector<bool> seen(degree, false);
    for (auto v : p) {
      if (v >= degree || seen[v]) throw ValidationError("permutation is not a bijection");
      seen[v] = true;
    }
  }
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0u);

  std::vector<Permutation> elements{id};
  std::unordered_map<Permutation, Element, PermHash> index{{id, 0}};
  std::vector<std::vector<Element>> right(perms.size());
  Permutation prod(degree);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t g = 0; g < perms.size(); ++g) {
      const Permutation& x = elements[i];
      for (std::size_t pt = 0; pt < degree; ++pt) prod[pt] = perms[g][x[pt]];
      auto [it, inserted] = index.try_emplace(prod, static_cast<Element>(elements.size()));
      if (inserted) {
        check_cap(elements.size() + 1, cap);
        elements.push_back(prod);
      }
      right[g].push_back(it->second);
    }
  }
  std::vector<Element> gen_elements;
  for (const auto& p : perms) gen_elements.push_back(index.at(p));
  if (perms.empty()) return Group{};
  return Group::from_cayley_graph(right, std::move(gen_elements));
}

Group cyclic_group(std::size_t n) {
  if (n == 0) throw ValidationError("cyclic group order must be positive");
  if (n == 1) return Group{};
  std::vector<std::vector<Element>> right(1, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i) right[0][i] = static_cast<Element>((i + 1) % n);
  return Group::from_cayley_graph(right, {1}, "C(" + std::to_string(n) + ")");
}

namespace {

// Table for N x| K on pairs (n, k) -> n + |N| k, with phi[k] the automorphism
// attached to k.
Group product_table(const Group& n, const Group& k,
                    const std::vector<Permutation>* phi, std::size_t cap) {
  const std::size_t nn = n.order(), nk = k.order(), total = nn * nk;
  check_cap(total, cap);
  std::vector<Element> table(total * total);
  for (std::size_t k1 = 0; k1 < nk; ++k1) {
    for (std::size_t n1 = 0; n1 < nn; ++n1) {
      Element* row = &table[(n1 + nn * k1) * total];
      for (std::size_t k2 = 0; k2 < nk; ++k2) {
        Element kk = k.mul(static_cast<Element>(k1), static_cast<Element>(k2));
        for (std::size_t n2 = 0; n2 < nn; ++n2) {
          Element acted = phi ? (*phi)[k1][n2] : static_cast<Element>(n2);
          row[n2 + nn * k2] =
              static_cast<Element>(n.mul(static_cast<Element>(n1), acted) + nn * kk);
        }
      }
    }
  }
  std::vector<Element> gens;
  for (Element g : n.generators()) gens.push_back(g);
  for (Element g : k.generators()) gens.push_back(static_cast<Element>(nn * g));
  return Group::from_table(total, table, 0, gens);
}

}  // namespace

Group direct_product(const Group& g, const Group& h, std::size_t cap) {
  return product_table(g, h, nullptr, cap);
}

Group semidirect_product(const Group& n, const Group& k, std::span<const Permutation> action,
                         std::size_t cap) {
  if (action.size() != k.generators().size())
    throw ValidationError("action must list one automorphism per generator of K");
  for (const auto& a : action)
    if (!is_automorphism(n, a)) throw ValidationError("action contains a non-automorphism");
  check_cap(n.order() * k.order(), cap);

  // phi(x g_i) = phi(x) o action_i, checked along every Cayley-graph edge.
  std::vector<Permutation> phi(k.order());
  Permutation id(n.order());
  std::iota(id.begin(), id.end(), 0u);
  phi[Group::identity] = id;
  std::deque<Element> queue{Group::identity};
  std::vector<bool> seen(k.order(), false);
  seen[Group::identity] = true;
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < action.size(); ++i) {
      Element y = k.mul(x, k.generators()[i]);
      Permutation cand(n.order());
      for (std::size_t e = 0; e < n.order(); ++e) cand[e] = phi[x][action[i][e]];
      if (!seen[y]) {
        seen[y] = true;
        phi[y] = std::move(cand);
        queue.push_back(y);
      } else if (phi[y] != cand) {
        throw ValidationError("action does not extend to a homomorphism K -> Aut(N)");
      }
    }
  }
  return product_table(n, k, &phi, cap);
}

std::pair<Group, Morphism> quotient(const Group& g, const Subgroup& n) {
  if (!is_normal(g, n)) throw ValidationError("quotient by a non-normal subgroup");
  const std::size_t order = g.order();
  std::vector<Element> coset(order, kUnset), reps;
  const auto members = n.elements();
  for (std::size_t x = 0; x < order; ++x) {
    if (coset[x] != kUnset) continue;
    const auto c = static_cast<Element>(reps.size());
    reps.push_back(static_cast<Element>(x));
    for (Element m : members) coset[g.mul(static_cast<Element>(x), m)] = c;
  }
  const std::size_t q = reps.size();
  std::vector<Element> table(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) table[a * q + b] = coset[g.mul(reps[a], reps[b])];
  std::vector<Element> gens;
  for (Element x : g.generators()) {
    Element c = coset[x];
    if (c != coset[Group::identity] && std::find(gens.begin(), gens.end(), c) == gens.end())
      gens.push_back(c);
  }
  std::vector<Element> relabel;
  Group result = Group::from_table(q, table, coset[Group::identity], gens, {}, &relabel);
  Morphism proj;
  proj.images.resize(order);
  for (std::size_t x = 0; x < order; ++x) proj.images[x] = relabel[coset[x]];
  return {std::move(result), std::move(proj)};
}

std::uint32_t element_order(const Group& g, Element x) {
  if (x >= g.order())
    throw ValidationError("element index " + std::to_string(x) + " out of range");
  return g.order_of(x);
}

std::uint64_t exponent(const Group& g) {
  std::uint64_t e = 1;
  for (std::size_t x = 0; x < g.order(); ++x) e = std::lcm(e, std::uint64_t{g.order_of(static_cast<Element>(x))});
  return e;
}

bool is_abelian(const Group& g) {
  auto gens = g.generators();
  for (Element a : gens)
    for (Element b : gens)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

Subgroup trivial_subgroup(const Group& g) {
  Bitset b(g.order());
  b.set(Group::identity);
  return Subgroup(std::move(b));
}

Subgroup whole_group(const Group& g) {
  Bitset b(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) b.set(x);
  return Subgroup(std::move(b));
}

Subgroup generate(const Group& g, std::span<const Element> gens) {
  Bitset members(g.order());
  members.set(Group::identity);
  std::vector<Element> list{Group::identity};
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (Element s : gens) {
      Element y = g.mul(list[i], s);
      if (members.test(y)) continue;
      members.set(y);
      list.push_back(y);
    }
  }
  return Subgroup(std::move(members));
}

Subgroup join(const Group& g, const Subgroup& h, std::span<const Element> h_gens, Element x) {
  if (h.contains(x)) return h;
  Bitset members = h.members();
  std::vector<Element> list = h.elements();
  const std::size_t original = list.size();
  // Elements of h are already closed under h_gens; only x is new for them.
  for (std::size_t i = 0; i < list.size(); ++i) {
    Element y = g.mul(list[i], x);
    if (!members.test(y)) {
      members.set(y);
      list.push_back(y);
    }
    if (i < original) continue;
    for (Element s : h_gens) {
      y = g.mul(list[i], s);
      if (members.test(y)) continue;
      members.set(y);
      list.push_back(y);
    }
  }
  return Subgroup(std::move(members));
}

bool is_subgroup(const Group& g, const Bitset& members) {
  if (members.width() != g.order() || !members.test(Group::identity)) return false;
  const auto list = members.to_vector();
  for (Element a : list) {
    if (!members.test(g.inv(a))) return false;
    for (Element b : list)
      if (!members.test(g.mul(a, b))) return false;
  }
  return true;
}

bool is_normal(const Group& g, const Subgroup& h) {
  const auto list = h.elements();
  for (Element s : g.generators())
    for (Element x : list)
      if (!h.contains(g.conjugate(x, s))) return false;
  return true;
}

Subgroup conjugate(const Group& g, const Subgroup& h, Element by) {
  Bitset b(g.order());
  h.members().for_each([&](std::size_t x) { b.set(g.conjugate(static_cast<Element>(x), by)); });
  return Subgroup(std::move(b));
}

Subgroup center(const Group& g) {
  Bitset b(g.order());
  auto gens = g.generators();
  for (std::size_t z = 0; z < g.order(); ++z) {
    const auto e = static_cast<Element>(z);
    bool central = std::all_of(gens.begin(), gens.end(),
                               [&](Element s) { return g.mul(e, s) == g.mul(s, e); });
    if (central) b.set(z);
  }
  return Subgroup(std::move(b));
}

Subgroup derived_subgroup(const Group& g) {
  Subgroup h = trivial_subgroup(g);
  std::vector<Element> gens;
  const auto n = static_cast<Element>(g.order());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      Element c = g.commutator(x, y);
      if (h.contains(c)) continue;
      h = join(g, h, gens, c);
      gens.push_back(c);
    }
  }
  return h;
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  return Subgroup(a.members() & b.members());
}

Group subgroup_as_group(const Group& g, const Subgroup& h) {
  const auto members = h.elements();
  const std::size_t n = members.size();
  std::vector<Element> local(g.order(), kUnset);
  for (std::size_t i = 0; i < n; ++i) local[members[i]] = static_cast<Element>(i);
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = local[g.mul(members[a], members[b])];
  std::vector<Element> gens;
  Subgroup span = trivial_subgroup(g);
  for (Element x : members) {
    if (span.contains(x)) continue;
    span = join(g, span, {}, x);
    gens.push_back(x);
  }
  std::vector<Element> local_gens;
  for (Element x : gens) local_gens.push_back(local[x]);
  return Group::from_table(n, table, local[Group::identity], local_gens);
}

bool is_homomorphism(const Group& domain, const Group& codomain, const Morphism& f) {
  if (f.images.size() != domain.order()) return false;
  const auto n = static_cast<Element>(domain.order());
  for (Element x = 0; x < n; ++x) {
    if (f(x) >= codomain.order()) return false;
    for (Element y = 0; y < n; ++y)
      if (f(domain.mul(x, y)) != codomain.mul(f(x), f(y))) return false;
  }
  return true;
}

bool is_automorphism(const Group& g, const Permutation& images) {
  if (images.size() != g.order()) return false;
  std::vector<bool> seen(g.order(), false);
  for (auto v : images) {
    if (v >= g.order() || seen[v]) return false;
    seen[v] = true;
  }
  return is_homomorphism(g, g, Morphism{images});
}

std::optional<Morphism> extend_homomorphism(const Group& domain, const Group& codomain,
                                            std::span<const Element> images) {
  auto gens = domain.generators();
  if (images.size() != gens.size()) return std::nullopt;
  Morphism f;
  f.images.assign(domain.order(), kUnset);
  f.images[Group::identity] = Group::identity;
  std::vector<Element> queue{Group::identity};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Element x = queue[i];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      Element y = domain.mul(x, gens[j]);
      Element cand = codomain.mul(f.images[x], images[j]);
      if (f.images[y] == kUnset) {
        f.images[y] = cand;
        queue.push_back(y);
      } else if (f.images[y] != cand) {
        return std::nullopt;
      }
    }
  }
  return f;
}

bool verify_axioms(const Group& g) {
  const auto n = static_cast<Element>(g.order());
  for (Element x = 0; x < n; ++x) {
    if (g.mul(Group::identity, x) != x || g.mul(x, Group::identity) != x) return false;
    if (g.mul(x, g.inv(x)) != Group::identity) return false;
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      Element xy = g.mul(x, y);
      for (Element z = 0; z < n; ++z)
        if (g.mul(xy, z) != g.mul(x, g.mul(y, z))) return false;
    }
  return generate(g, g.generators()).size() == g.order();
}

std::vector<Permutation> regular_generators(const Group& g) {
  std::vector<Permutation> perms;
  for (Element s : g.generators()) {
    Permutation p(g.order());
    for (std::size_t x = 0; x < g.order(); ++x) p[x] = g.mul(static_cast<Element>(x), s);
    perms.push_back(std::move(p));
  }
  return perms;
}

}  // namespace nps
