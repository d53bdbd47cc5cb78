#include "nps/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>

#include "nps/numtheory.hpp"

namespace nps {

std::size_t lattice_cap_from_env(std::size_t fallback) {
  const char* env = std::getenv("NPS_MAX_ORDER");
  if (!env || !*env) return fallback;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) throw ValidationError(std::string("bad NPS_MAX_ORDER value: ") + env);
  return static_cast<std::size_t>(v);
}

std::size_t Lattice::index_of(const Subgroup& h) const {
  auto it = std::lower_bound(subgroups.begin(), subgroups.end(), h);
  if (it == subgroups.end() || !(*it == h)) throw ValidationError("subgroup not in lattice");
  return static_cast<std::size_t>(it - subgroups.begin());
}

bool Lattice::is_power(std::size_t index) const {
  return std::any_of(power_index.begin(), power_index.end(),
                     [&](const auto& kv) { return kv.second == index; });
}

std::size_t Lattice::class_count() const {
  return conjugacy_class.empty()
             ? 0
             : *std::max_element(conjugacy_class.begin(), conjugacy_class.end()) + 1;
}

Subgroup power_subgroup(const Group& g, std::uint64_t m) {
  if (m == 0) throw ValidationError("power subgroup exponent must be positive");
  Subgroup h = trivial_subgroup(g);
  std::vector<Element> gens;
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto ord = g.order_of(static_cast<Element>(x));
    Element y = g.pow(static_cast<Element>(x), static_cast<std::int64_t>(m % ord));
    if (h.contains(y)) continue;
    h = join(g, h, gens, y);
    gens.push_back(y);
  }
  return h;
}

std::map<std::uint64_t, Subgroup> power_subgroups(const Group& g) {
  std::map<std::uint64_t, Subgroup> out;
  for (Int m : divisors(static_cast<Int>(exponent(g))))
    out.emplace(static_cast<std::uint64_t>(m), power_subgroup(g, static_cast<std::uint64_t>(m)));
  return out;
}

std::size_t power_subgroup_count(const Group& g) {
  std::set<Subgroup> distinct;
  for (auto& [m, h] : power_subgroups(g)) distinct.insert(h);
  return distinct.size();
}

Lattice all_subgroups(const Group& g, std::size_t cap) {
  const std::size_t n = g.order();
  if (n > cap)
    throw SizeLimitError("group order " + std::to_string(n) + " exceeds lattice cap " +
                         std::to_string(cap));

  // One generator per cyclic subgroup.
  std::vector<Element> cyclic_reps;
  std::vector<bool> covered(n, false);
  for (std::size_t x = 0; x < n; ++x) {
    if (covered[x]) continue;
    const auto e = static_cast<Element>(x);
    const std::uint32_t ord = g.order_of(e);
    for (std::uint32_t k = 1; k <= ord; ++k)
      if (std::gcd(k, ord) == 1) covered[g.pow(e, k)] = true;
    cyclic_reps.push_back(e);
  }

  struct Entry {
    Subgroup sub;
    std::vector<Element> gens;
  };
  std::vector<Entry> entries;
  std::unordered_map<Bitset, std::size_t, BitsetHash> seen;
  auto add = [&](Subgroup h, std::vector<Element> gens) {
    auto [it, inserted] = seen.try_emplace(h.members(), entries.size());
    if (inserted) entries.push_back({std::move(h), std::move(gens)});
  };
  for (Element c : cyclic_reps) {
    std::vector<Element> gens;
    if (c != Group::identity) gens.push_back(c);
    add(generate(g, gens), gens);
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (Element c : cyclic_reps) {
      if (entries[i].sub.contains(c)) continue;
      Subgroup j = join(g, entries[i].sub, entries[i].gens, c);
      if (seen.count(j.members())) continue;
      std::vector<Element> gens = entries[i].gens;
      gens.push_back(c);
      add(std::move(j), std::move(gens));
    }
  }

  Lattice lat;
  lat.subgroups.reserve(entries.size());
  for (auto& e : entries) lat.subgroups.push_back(std::move(e.sub));
  std::sort(lat.subgroups.begin(), lat.subgroups.end());

  std::unordered_map<Bitset, std::size_t, BitsetHash> index;
  for (std::size_t i = 0; i < lat.subgroups.size(); ++i) index.emplace(lat.subgroups[i].members(), i);

  lat.normal.resize(lat.subgroups.size());
  for (std::size_t i = 0; i < lat.subgroups.size(); ++i) lat.normal[i] = is_normal(g, lat.subgroups[i]);

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  lat.conjugacy_class.assign(lat.subgroups.size(), kNone);
  std::size_t next_class = 0;
  for (std::size_t i = 0; i < lat.subgroups.size(); ++i) {
    if (lat.conjugacy_class[i] != kNone) continue;
    const std::size_t id = next_class++;
    lat.conjugacy_class[i] = id;
    std::vector<std::size_t> orbit{i};
    for (std::size_t o = 0; o < orbit.size(); ++o) {
      for (Element s : g.generators()) {
        std::size_t j = index.at(conjugate(g, lat.subgroups[orbit[o]], s).members());
        if (lat.conjugacy_class[j] != kNone) continue;
        lat.conjugacy_class[j] = id;
        orbit.push_back(j);
      }
    }
  }

  for (auto& [m, h] : power_subgroups(g)) lat.power_index[m] = index.at(h.members());
  return lat;
}

bool is_cyclic(const Group& g, const Subgroup& h) {
  bool found = false;
  h.members().for_each([&](std::size_t x) {
    if (g.order_of(static_cast<Element>(x)) == h.size()) found = true;
  });
  return found;
}

bool is_p_group_order(std::uint64_t n, std::uint64_t p) {
  return log_prime_power(static_cast<Int>(n), static_cast<Int>(p)).has_value();
}

CountSummary counts(const Group& g, const Lattice& lattice) {
  CountSummary c;
  c.order = g.order();
  c.exponent = exponent(g);
  c.s = lattice.subgroups.size();
  std::set<std::size_t> powers;
  for (auto& [m, idx] : lattice.power_index) powers.insert(idx);
  c.ps = powers.size();
  c.nps = c.s - c.ps;
  for (Int p : prime_factors(static_cast<Int>(g.order()))) {
    PrimeData d;
    d.p = static_cast<std::uint64_t>(p);
    d.f = valuation(static_cast<Int>(c.exponent), p);
    for (std::size_t idx : powers) {
      const Subgroup& h = lattice.subgroups[idx];
      auto k = log_prime_power(static_cast<Int>(h.size()), p);
      if (k && is_cyclic(g, h)) d.k = std::max(d.k, *k);
    }
    c.primes.push_back(d);
  }
  return c;
}

CountSummary counts(const Group& g, std::size_t cap) { return counts(g, all_subgroups(g, cap)); }

std::vector<Subgroup> conjugates(const Group& g, const Subgroup& h) {
  if (!is_subgroup(g, h.members())) throw ValidationError("not a subgroup of the group");
  std::set<Subgroup> orbit{h};
  std::vector<Subgroup> queue{h};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Element s : g.generators()) {
      Subgroup c = conjugate(g, queue[i], s);
      if (orbit.insert(c).second) queue.push_back(std::move(c));
    }
  }
  return {orbit.begin(), orbit.end()};
}

bool is_normal_subgroup(const Group& g, const Subgroup& h) {
  if (!is_subgroup(g, h.members())) throw ValidationError("not a subgroup of the group");
  return is_normal(g, h);
}

Subgroup normalizer(const Group& g, const Subgroup& h) {
  Bitset b(g.order());
  for (std::size_t x = 0; x < g.order(); ++x)
    if (conjugate(g, h, static_cast<Element>(x)) == h) b.set(x);
  return Subgroup(std::move(b));
}

Subgroup sylow(const Group& g, std::uint64_t p, const Lattice& lattice) {
  const auto part = static_cast<std::size_t>(prime_part(static_cast<Int>(g.order()), static_cast<Int>(p)));
  for (const auto& h : lattice.subgroups)
    if (h.size() == part) return h;
  throw ValidationError("lattice has no Sylow subgroup");  // unreachable for a complete lattice
}

Subgroup sylow(const Group& g, std::uint64_t p) {
  if (g.order() % p != 0) return trivial_subgroup(g);
  return sylow(g, p, all_subgroups(g, lattice_cap_from_env()));
}

std::vector<std::size_t> maximal_subgroups(const Lattice& lattice) {
  std::vector<std::size_t> out;
  const std::size_t top = lattice.subgroups.size() - 1;
  for (std::size_t i = 0; i < top; ++i) {
    bool maximal = true;
    for (std::size_t j = i + 1; j < top && maximal; ++j) {
      if (lattice.subgroups[j].size() > lattice.subgroups[i].size() &&
          lattice.subgroups[i].members().is_subset_of(lattice.subgroups[j].members()))
        maximal = false;
    }
    if (maximal) out.push_back(i);
  }
  return out;
}

Subgroup frattini(const Group& g, const Lattice& lattice) {
  Subgroup phi = whole_group(g);
  for (std::size_t i : maximal_subgroups(lattice)) phi = intersection(phi, lattice.subgroups[i]);
  return phi;
}

Subgroup frattini(const Group& g) { return frattini(g, all_subgroups(g, lattice_cap_from_env())); }

Subgroup omega(const Group& g, unsigned i) {
  if (g.order() == 1) return whole_group(g);
  auto ps = prime_factors(static_cast<Int>(g.order()));
  if (ps.size() != 1) throw ValidationError("omega requires a p-group");
  const Int p = ps.front();
  std::vector<Element> gens;
  for (std::size_t x = 0; x < g.order(); ++x) {
    auto e = static_cast<Element>(x);
    auto k = log_prime_power(g.order_of(e), p);
    if (k && *k <= static_cast<int>(i)) gens.push_back(e);
  }
  return generate(g, gens);
}

std::size_t cyclic_nonpower_p_count(const Group& g, std::uint64_t p, const Lattice& lattice) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < lattice.subgroups.size(); ++i) {
    const Subgroup& h = lattice.subgroups[i];
    if (h.size() == 1 || !is_p_group_order(h.size(), p)) continue;
    if (is_cyclic(g, h) && !lattice.is_power(i)) ++count;
  }
  return count;
}

}  // namespace nps
