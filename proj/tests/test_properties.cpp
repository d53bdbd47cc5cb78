#include <doctest.h>

#include "nps/census.hpp"
#include "nps/families.hpp"
#include "nps/lattice.hpp"
#include "support/oracle.hpp"
#include "support/properties.hpp"

using namespace nps;

namespace {

std::string joined(const props::Violations& v) {
  std::string out;
  for (const auto& line : v) out += line + "\n";
  return out;
}

const props::CorpusReport& corpus_report() {
  static const props::CorpusReport report = props::check_corpus(construction_corpus(), kDefaultLatticeCap);
  return report;
}

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("corpus size") { CHECK(construction_corpus().size() >= 60); }

  TEST_CASE("s = ps + nps and power subgroups are normal") {
    INFO(joined(corpus_report().consistency));
    CHECK(corpus_report().consistency.empty());
  }

  TEST_CASE("cyclic power subgroups of equal prime-power order coincide") {
    INFO(joined(corpus_report().uniqueness));
    CHECK(corpus_report().uniqueness.empty());
  }

  TEST_CASE("odd p with non-cyclic Sylow: at least pf - k + 1 cyclic nonpower p-subgroups") {
    INFO(joined(corpus_report().bound));
    CHECK(corpus_report().bound.empty());
    CHECK(corpus_report().bound_groups >= 10);
  }

  TEST_CASE("coprime products: nps(AxB) = nps(A)s(B) + ps(A)nps(B)") {
    INFO(joined(corpus_report().coprime));
    CHECK(corpus_report().coprime.empty());
    CHECK(corpus_report().coprime_pairs >= 20);
  }

  TEST_CASE("quotients never have more nonpower subgroups") {
    INFO(joined(corpus_report().quotient));
    CHECK(corpus_report().quotient.empty());
    CHECK(corpus_report().quotient_groups >= 40);
  }

  TEST_CASE("G^m = G^gcd(m,e)") {
    INFO(joined(corpus_report().gcd));
    CHECK(corpus_report().gcd.empty());
    CHECK(corpus_report().gcd_groups >= 40);
  }
}

TEST_SUITE("properties detect violations") {
  TEST_CASE("coprime check refuses non-coprime orders") {
    CHECK_FALSE(props::coprime_product(cyclic_group(2), cyclic_group(4), 600).empty());
  }

  TEST_CASE("the bound applies only with a non-cyclic odd Sylow subgroup") {
    const Group c = cyclic_group(45);
    bool applied = true;
    CHECK(props::cyclic_nonpower_bound(c, all_subgroups(c), &applied).empty());
    CHECK_FALSE(applied);
    const Group e = build(parse_spec("C(3)xC(3)xC(2)"));
    CHECK(props::cyclic_nonpower_bound(e, all_subgroups(e), &applied).empty());
    CHECK(applied);
  }

  TEST_CASE("quotient check counts quotients") {
    const Group d = build(parse_spec("D(8)"));
    std::size_t checked = 0;
    CHECK(props::quotient_monotone(d, all_subgroups(d), &checked).empty());
    // 1, center, three of order 4, whole group
    CHECK(checked == 6);
  }
}

TEST_SUITE("properties against oracles") {
  TEST_CASE("power subgroups at non-divisors agree with brute force") {
    for (const auto& s : construction_corpus(40)) {
      const Group g = build(s);
      CAPTURE(g.label());
      for (std::uint64_t m = 1; m <= 2 * exponent(g); ++m) {
        const auto expected = oracle::power_subgroup(g, m);
        const auto got = power_subgroup(g, m);
        for (std::size_t x = 0; x < g.order(); ++x) CHECK(got.contains(static_cast<Element>(x)) == expected[x]);
      }
    }
  }
}
