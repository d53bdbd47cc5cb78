#include <doctest.h>

#include <random>

#include "nps/census.hpp"
#include "nps/families.hpp"
#include "nps/isomorphism.hpp"
#include "nps/lattice.hpp"
#include "nps/presentation.hpp"
#include "support/oracle.hpp"

using namespace nps;

namespace {

Group spec(const char* text) { return build(parse_spec(text)); }

Group enumerate(std::string_view text) {
  const auto e = coset_enumerate(parse_presentation(text));
  REQUIRE(e.complete());
  REQUIRE(e.group.has_value());
  return *e.group;
}

Word random_word(std::mt19937& rng, std::size_t gens, std::size_t length) {
  std::uniform_int_distribution<std::size_t> g(0, gens - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < length; ++i) letters.push_back({g(rng), sign(rng) ? 1 : -1});
  return Word(letters);
}

}  // namespace

TEST_SUITE("fp-presentation parser") {
  TEST_CASE("relator counts") {
    const auto p = parse_presentation("a,b | a^4=1, b^4=1, a^-1 b a = b^-1");
    CHECK(p.generators.size() == 2);
    CHECK(p.relators.size() == 3);
    CHECK(parse_presentation("x,y,z | x^3=y^3=z^3=1, [x,z]=1, [y,z]=1, [x,y]=z").relators.size() == 6);
    CHECK(parse_presentation("a,b | a^4 = b^2").relators.size() == 1);
  }

  TEST_CASE("word syntax") {
    const std::vector<std::string> names{"a", "b"};
    auto rel = [&](const char* text) { return format_word(parse_presentation(text).relators.at(0), names); };
    CHECK(rel("a,b | [a,b]") == "a^-1 b^-1 a b");
    CHECK(rel("a,b | a^b") == "b^-1 a b");
    CHECK(rel("a,b | a^-1") == "a^-1");
    CHECK(rel("a,b | (ab)^2") == "a b a b");
    CHECK(rel("a,b | a*b = b*a") == "a b a^-1 b^-1");
    CHECK(rel("a,b | a a^-1 b") == "b");
    CHECK(rel("< a , b | a ^ 3 >") == "a^3");
    CHECK(parse_presentation("a,b | a^0").relators.at(0).empty());
    CHECK(parse_presentation("a1,a2 | a1 a2").generators == std::vector<std::string>{"a1", "a2"});
  }

  TEST_CASE("parse errors carry positions") {
    auto position = [](const char* text) -> std::size_t {
      try {
        parse_presentation(text);
      } catch (const ParseError& e) {
        return e.position();
      }
      return std::string::npos;
    };
    CHECK(position("a,b | a^4 = c") == 12);
    CHECK(position("a,b | (ab") == 9);
    CHECK(position("a b") == 2);
    CHECK(position("a,b | a^4=1,,") == 12);
    CHECK(position("a,b | a^") == 8);
    CHECK(position("a,a | a") != std::string::npos);
  }

  TEST_CASE("format then parse is idempotent") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      Presentation p;
      p.generators = {"a", "b", "c"};
      for (int i = 0; i < 4; ++i) p.relators.push_back(random_word(rng, 3, 1 + trial % 12));
      const auto text = format_presentation(p);
      const auto once = parse_presentation(text);
      CHECK(once == p);
      CHECK(format_presentation(once) == text);
    }
    for (const auto& s : construction_corpus())
      if (has_builtin_presentation(s)) {
        const auto p = builtin_presentation(s);
        CHECK(parse_presentation(format_presentation(p)) == p);
      }
  }
}

TEST_SUITE("fp-presentation enumeration") {
  TEST_CASE("enumeration examples") {
    const Group q8 = enumerate(builtin_presentation_text(parse_spec("Q(8)")));
    CHECK(q8.order() == 8);
    CHECK(are_isomorphic(q8, oracle::quaternion(8)));
    const Group c5 = enumerate("a | a^5=1");
    CHECK(c5.order() == 5);
    CHECK(are_isomorphic(c5, cyclic_group(5)));
    CHECK(enumerate(builtin_presentation_text(parse_spec("B1(2,3)"))).order() == 81);
    CHECK(enumerate(" | ").order() == 1);
    CHECK(enumerate("a,b | a, b").order() == 1);
    CHECK(enumerate("a,b | a^2, b^3, (ab)^3").order() == 12);
    CHECK(enumerate("a,b | a^2, b^3, (ab)^4").order() == 24);
    CHECK(enumerate("a,b | a^2, b^3, (ab)^5").order() == 60);
  }

  TEST_CASE("capped enumeration") {
    const auto e = coset_enumerate(parse_presentation("a,b | a^2, b^2"), 500);
    CHECK_FALSE(e.complete());
    CHECK_FALSE(e.group.has_value());
    const auto big = coset_enumerate(parse_presentation("a | a^5000"), 100000, 4096);
    CHECK(big.complete());
    CHECK(big.order == 5000);
    CHECK_FALSE(big.group.has_value());
  }

  TEST_CASE("coset table is a permutation action") {
    const auto e = coset_enumerate(parse_presentation("x,y | x^4 = y^4 = 1, x^2 = y^2, y^-1 x y = x^-1"));
    REQUIRE(e.complete());
    CHECK(e.order == 8);
    const auto& rows = e.table.rows;
    REQUIRE(rows.size() == 8);
    for (std::size_t col = 0; col < rows[0].size(); ++col) {
      std::vector<bool> hit(rows.size(), false);
      for (const auto& row : rows) {
        REQUIRE(row[col] >= 0);
        hit[static_cast<std::size_t>(row[col])] = true;
      }
      CHECK(std::find(hit.begin(), hit.end(), false) == hit.end());
    }
  }

  TEST_CASE("literal quaternion exponent doubles the order") {
    // a^(2^(n-1)) = b^2 = z with z^2 = 1 presents a group of order 2^(n+1).
    for (Int n = 3; n <= 6; ++n) {
      const Int half = Int{1} << (n - 1);
      const std::string literal =
          "a,b,z | a^" + std::to_string(half) + " = b^2 = z, z^2 = 1, b^-1 a b = a^-1";
      CHECK(enumerate(literal).order() == std::size_t{1} << (n + 1));
      const Group q = enumerate(builtin_presentation_text(family::quaternion(Int{1} << n)));
      CHECK(q.order() == std::size_t{1} << n);
      CHECK(are_isomorphic(q, oracle::quaternion(std::size_t{1} << n)));
    }
  }
}

TEST_SUITE("fp-presentation builtin") {
  TEST_CASE("builtin text examples") {
    CHECK(builtin_presentation_text(parse_spec("G(1,3)")) == "a,b | a^2=1, b^3=1, a^-1 b a = b^-1");
    CHECK(builtin_presentation_text(parse_spec("A(2)")) == "a,b,c | a^9=1, b^2=1, bc=cb, b^a=c, c^a=bc");
    CHECK(builtin_presentation(parse_spec("Q(16)")).generators.size() == 3);
    CHECK_THROWS_AS(builtin_presentation(parse_spec("Sym(4)")), ValidationError);
    CHECK_THROWS_AS(builtin_presentation(parse_spec("SL(2,3)")), ValidationError);
    CHECK_FALSE(has_builtin_presentation(parse_spec("Q(8)xC(2)")));
  }
}

TEST_SUITE("fp-presentation isomorphism") {
  TEST_CASE("isomorphism examples") {
    const Group c4 = cyclic_group(4);
    CHECK(are_isomorphic(c4, c4));
    CHECK_FALSE(are_isomorphic(c4, spec("C(2)xC(2)")));
    const Group built = spec("C3sQ8");
    CHECK(are_isomorphic(built, enumerate(builtin_presentation_text(family::c3_q8()))));
    CHECK_FALSE(are_isomorphic(spec("Q(8)"), spec("D(8)")));
    CHECK_FALSE(are_isomorphic(spec("SL(2,3)"), spec("Sym(4)")));
    CHECK_FALSE(are_isomorphic(spec("C3sQ8"), spec("Q(8)xC(3)")));
    CHECK(are_isomorphic(spec("D(6)"), spec("Sym(3)")));
    CHECK_THROWS_AS(are_isomorphic(cyclic_group(700), cyclic_group(700)), SizeLimitError);
  }

  TEST_CASE("found isomorphisms are bijective homomorphisms") {
    for (const char* pair : {"Q(16)", "D(12)", "A(1)", "M(3)", "G(2,5)"}) {
      const Group g = spec(pair);
      const Group h = enumerate(builtin_presentation_text(parse_spec(pair)));
      const auto f = find_isomorphism(g, h);
      REQUIRE(f.has_value());
      CHECK(oracle::is_bijection(f->images, h.order()));
      CHECK(oracle::is_homomorphism(g, h, f->images));
    }
  }

  TEST_CASE("reflexive and symmetric on the corpus") {
    const auto corpus = construction_corpus(200);
    std::vector<Group> groups;
    for (const auto& s : corpus) groups.push_back(build(s));
    for (std::size_t i = 0; i < groups.size(); ++i) {
      CHECK(are_isomorphic(groups[i], groups[i]));
      for (std::size_t j = i + 1; j < groups.size(); ++j) {
        if (groups[i].order() != groups[j].order()) continue;
        CAPTURE(groups[i].label());
        CAPTURE(groups[j].label());
        CHECK(are_isomorphic(groups[i], groups[j]) == are_isomorphic(groups[j], groups[i]));
      }
    }
  }

  TEST_CASE("class sizes sum to the order") {
    for (const char* text : {"Sym(4)", "C3sQ8", "Q(8)xC(2)"}) {
      const Group g = spec(text);
      const auto sizes = class_sizes(g);
      std::size_t total = 0;
      for (auto v : sizes) total += v;
      CHECK(total == g.order());
    }
  }
}

TEST_SUITE("fp-presentation round trip") {
  TEST_CASE("every presented family instance of order <= 300") {
    std::size_t checked = 0;
    for (const auto& s : presented_instances(300)) {
      CAPTURE(to_string(s));
      const Group direct = build(s);
      const Group presented = enumerate(builtin_presentation_text(s));
      CHECK(presented.order() == direct.order());
      CHECK(are_isomorphic(direct, presented));
      ++checked;
    }
    CHECK(checked > 500);
  }
}
