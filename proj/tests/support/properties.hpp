#pragma once

// Structural identities checked over corpora. Each check returns a list of
// human-readable violations; an empty list means the property holds.

#include <string>
#include <vector>

#include "nps/families.hpp"
#include "nps/group.hpp"
#include "nps/lattice.hpp"

namespace props {

using Violations = std::vector<std::string>;

/// s = ps + nps, ps >= 1, and every power subgroup is normal.
Violations counts_consistent(const nps::Group& g, const nps::Lattice& lattice);

/// Distinct divisors m1, m2 of e with G^m1, G^m2 cyclic of the same
/// prime-power order p^k give the same subgroup, namely G^(e/p^k).
Violations cyclic_power_uniqueness(const nps::Group& g, const nps::Lattice& lattice);

/// For odd p with a non-cyclic Sylow p-subgroup, G has at least pf - k + 1
/// cyclic nonpower p-subgroups. Sets `applied` when some p qualified.
Violations cyclic_nonpower_bound(const nps::Group& g, const nps::Lattice& lattice, bool* applied = nullptr);

/// For coprime |A|, |B|: nps(AxB) = nps(A) s(B) + ps(A) nps(B) and
/// ps(AxB) = ps(A) ps(B).
Violations coprime_product(const nps::Group& a, const nps::Group& b, std::size_t cap);

/// nps(G/N) <= nps(G) for every normal subgroup N. `checked` receives the
/// number of quotients formed.
Violations quotient_monotone(const nps::Group& g, const nps::Lattice& lattice, std::size_t* checked = nullptr);

/// G^m = G^gcd(m, e) for all 1 <= m <= e.
Violations power_gcd_rule(const nps::Group& g);

struct CorpusReport {
  std::size_t groups = 0;
  std::size_t bound_groups = 0;
  std::size_t coprime_pairs = 0;
  std::size_t quotient_groups = 0;
  std::size_t quotients = 0;
  std::size_t gcd_groups = 0;
  Violations uniqueness, bound, coprime, quotient, gcd, consistency;

  bool ok() const;
};

/// Runs every property above over `corpus`: quotients on groups of order
/// <= 128, the gcd rule on order <= 100, and coprime products on every
/// coprime pair with |A||B| <= cap.
CorpusReport check_corpus(const std::vector<nps::FamilySpec>& corpus, std::size_t cap);

}  // namespace props
