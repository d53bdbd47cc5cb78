#include "properties.hpp"

#include <map>
#include <numeric>

#include "nps/numtheory.hpp"

namespace props {

namespace {

std::string where(const nps::Group& g) { return g.label().empty() ? "group" : g.label(); }

}  // namespace

Violations counts_consistent(const nps::Group& g, const nps::Lattice& lattice) {
  Violations v;
  const auto c = nps::counts(g, lattice);
  if (c.s != c.ps + c.nps) v.push_back(where(g) + ": s != ps + nps");
  if (c.ps < 1) v.push_back(where(g) + ": ps < 1");
  if (c.s != lattice.subgroups.size()) v.push_back(where(g) + ": s differs from lattice size");
  for (auto [m, index] : lattice.power_index)
    if (!lattice.normal[index]) v.push_back(where(g) + ": G^" + std::to_string(m) + " not normal");
  return v;
}

Violations cyclic_power_uniqueness(const nps::Group& g, const nps::Lattice& lattice) {
  Violations v;
  const std::uint64_t e = nps::exponent(g);
  // (p, k) -> first divisor m with G^m cyclic of order p^k
  std::map<std::pair<nps::Int, int>, std::uint64_t> seen;
  for (auto [m, index] : lattice.power_index) {
    const nps::Subgroup& h = lattice.subgroups[index];
    if (h.size() == 1 || !nps::is_cyclic(g, h)) continue;
    const auto primes = nps::prime_factors(static_cast<nps::Int>(h.size()));
    if (primes.size() != 1) continue;
    const nps::Int p = primes[0];
    const int k = nps::valuation(static_cast<nps::Int>(h.size()), p);
    auto [it, fresh] = seen.emplace(std::pair{p, k}, m);
    if (!fresh && lattice.subgroups[lattice.power_index.at(it->second)] != h)
      v.push_back(where(g) + ": G^" + std::to_string(it->second) + " and G^" + std::to_string(m) +
                  " are distinct cyclic of order " + std::to_string(h.size()));
    const auto canonical = e / static_cast<std::uint64_t>(nps::ipow(p, k));
    if (nps::power_subgroup(g, canonical) != h)
      v.push_back(where(g) + ": G^" + std::to_string(m) + " differs from G^" + std::to_string(canonical));
  }
  return v;
}

Violations cyclic_nonpower_bound(const nps::Group& g, const nps::Lattice& lattice, bool* applied) {
  Violations v;
  if (applied) *applied = false;
  const auto c = nps::counts(g, lattice);
  for (const auto& d : c.primes) {
    if (d.p == 2) continue;
    const nps::Subgroup p_sylow = nps::sylow(g, d.p, lattice);
    if (nps::is_cyclic(g, p_sylow)) continue;
    if (applied) *applied = true;
    const auto bound = static_cast<std::int64_t>(d.p) * d.f - d.k + 1;
    const auto have = static_cast<std::int64_t>(nps::cyclic_nonpower_p_count(g, d.p, lattice));
    if (have < bound)
      v.push_back(where(g) + ": p=" + std::to_string(d.p) + " has " + std::to_string(have) +
                  " cyclic nonpower p-subgroups, bound " + std::to_string(bound));
  }
  return v;
}

Violations coprime_product(const nps::Group& a, const nps::Group& b, std::size_t cap) {
  Violations v;
  if (std::gcd(a.order(), b.order()) != 1) {
    v.push_back(where(a) + " and " + where(b) + ": orders not coprime");
    return v;
  }
  const auto ca = nps::counts(a, cap), cb = nps::counts(b, cap);
  const auto cab = nps::counts(nps::direct_product(a, b), cap);
  const std::string name = where(a) + " x " + where(b);
  if (cab.nps != ca.nps * cb.s + ca.ps * cb.nps)
    v.push_back(name + ": nps " + std::to_string(cab.nps) + " != nps(A)s(B) + ps(A)nps(B) = " +
                std::to_string(ca.nps * cb.s + ca.ps * cb.nps));
  if (cab.ps != ca.ps * cb.ps) v.push_back(name + ": ps is not multiplicative");
  return v;
}

Violations quotient_monotone(const nps::Group& g, const nps::Lattice& lattice, std::size_t* checked) {
  Violations v;
  const auto base = nps::counts(g, lattice).nps;
  std::size_t formed = 0;
  for (std::size_t i = 0; i < lattice.subgroups.size(); ++i) {
    if (!lattice.normal[i]) continue;
    const auto [q, proj] = nps::quotient(g, lattice.subgroups[i]);
    ++formed;
    const auto nq = nps::counts(q, g.order()).nps;
    if (nq > base)
      v.push_back(where(g) + ": quotient by a normal subgroup of order " +
                  std::to_string(lattice.subgroups[i].size()) + " has nps " + std::to_string(nq) + " > " +
                  std::to_string(base));
  }
  if (checked) *checked += formed;
  return v;
}

Violations power_gcd_rule(const nps::Group& g) {
  Violations v;
  const std::uint64_t e = nps::exponent(g);
  for (std::uint64_t m = 1; m <= e; ++m)
    if (nps::power_subgroup(g, m) != nps::power_subgroup(g, std::gcd(m, e)))
      v.push_back(where(g) + ": G^" + std::to_string(m) + " != G^gcd");
  return v;
}

bool CorpusReport::ok() const {
  return uniqueness.empty() && bound.empty() && coprime.empty() && quotient.empty() && gcd.empty() &&
         consistency.empty();
}

CorpusReport check_corpus(const std::vector<nps::FamilySpec>& corpus, std::size_t cap) {
  CorpusReport r;
  auto append = [](Violations& into, Violations more) { into.insert(into.end(), more.begin(), more.end()); };
  std::vector<nps::Group> groups;
  for (const auto& s : corpus) groups.push_back(nps::build(s));
  for (const auto& g : groups) {
    const auto lattice = nps::all_subgroups(g, cap);
    ++r.groups;
    append(r.consistency, counts_consistent(g, lattice));
    append(r.uniqueness, cyclic_power_uniqueness(g, lattice));
    bool applied = false;
    append(r.bound, cyclic_nonpower_bound(g, lattice, &applied));
    r.bound_groups += applied;
    if (g.order() <= 128) {
      append(r.quotient, quotient_monotone(g, lattice, &r.quotients));
      ++r.quotient_groups;
    }
    if (g.order() <= 100) {
      append(r.gcd, power_gcd_rule(g));
      ++r.gcd_groups;
    }
  }
  for (std::size_t i = 0; i < groups.size(); ++i)
    for (std::size_t j = i + 1; j < groups.size(); ++j) {
      const auto& a = groups[i];
      const auto& b = groups[j];
      if (a.order() == 1 || b.order() == 1 || std::gcd(a.order(), b.order()) != 1 || a.order() * b.order() > cap)
        continue;
      append(r.coprime, coprime_product(a, b, cap));
      ++r.coprime_pairs;
    }
  return r;
}

}  // namespace props
