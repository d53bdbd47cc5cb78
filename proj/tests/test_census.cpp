#include <doctest.h>

#include <json.hpp>

#include "nps/catalog.hpp"
#include "nps/census.hpp"
#include "nps/families.hpp"
#include "nps/lattice.hpp"

using namespace nps;

namespace {

const char* const kCorpus = R"json([
  {"name": "Sym(3)", "degree": 3, "generators": [[1, 0, 2], [1, 2, 0]]},
  {"name": "C7:C6", "degree": 7, "generators": [[1, 2, 3, 4, 5, 6, 0], [0, 3, 6, 2, 5, 1, 4]]},
  {"name": "bad-perm", "degree": 3, "generators": [[0, 0, 1]]},
  {"name": "bad-degree", "degree": 3, "generators": [[0, 1]]},
  {"name": "no-generators-field", "degree": 2},
  {"name": "trivial", "degree": 1, "generators": []},
  7
])json";

const VerifyRecord* find(const std::vector<VerifyRecord>& records, const std::string& group) {
  for (const auto& r : records)
    if (r.group == group) return &r;
  return nullptr;
}

}  // namespace

TEST_SUITE("census corpus") {
  TEST_CASE("corpus rows") {
    const auto corpus = parse_corpus(kCorpus);
    REQUIRE(corpus.size() == 7);
    const auto rows = run_census(corpus, {});
    REQUIRE(rows.size() == 7);
    CHECK(rows[0].name == "Sym(3)");
    REQUIRE(rows[0].counts);
    CHECK(rows[0].counts->nps == 3);
    REQUIRE(rows[1].counts);
    CHECK(rows[1].counts->order == 42);
    CHECK(rows[1].counts->nps == 21);
    for (std::size_t i : {2, 3, 4, 6}) {
      CAPTURE(i);
      CHECK_FALSE(rows[i].counts.has_value());
      CHECK_FALSE(rows[i].error.empty());
    }
    REQUIRE(rows[5].counts);
    CHECK(rows[5].counts->order == 1);
    CHECK(rows[6].name == "#6");
  }

  TEST_CASE("empty corpus") {
    const auto rows = run_census(parse_corpus("[]"), {});
    CHECK(rows.empty());
    CHECK(census_csv(rows) == "name,order,exponent,s,ps,nps,status\n");
  }

  TEST_CASE("file-level errors") {
    CHECK_THROWS_AS(parse_corpus("{\"name\": 1}"), ParseError);
    CHECK_THROWS_AS(parse_corpus("[1, 2"), ParseError);
    CHECK_THROWS_AS(load_corpus("/nonexistent/corpus.json"), ParseError);
  }

  TEST_CASE("cap is reported per row") {
    RunOptions options;
    options.cap = 20;
    const auto rows = run_census(parse_corpus(kCorpus), options);
    CHECK(rows[0].counts.has_value());
    CHECK_FALSE(rows[1].counts.has_value());
    CHECK(rows[1].error.find("cap") != std::string::npos);
  }

  TEST_CASE("export round trip") {
    for (const char* text : {"Q(8)", "Sym(4)", "C3sQ8", "M(3)"}) {
      const Group g = build(parse_spec(text));
      const auto entries = parse_corpus(corpus_json({to_corpus_entry(g, g.label())}));
      REQUIRE(entries.size() == 1);
      CHECK(entries[0].name == g.label());
      const Group back = build_entry(entries[0], kDefaultOrderCap);
      CHECK(counts(back) == counts(g));
    }
  }
}

TEST_SUITE("census reports") {
  TEST_CASE("output does not depend on jobs") {
    RunOptions one, four;
    one.max_n = four.max_n = 2;
    four.jobs = 4;
    const auto a = verify_formulas(one), b = verify_formulas(four);
    CHECK(records_csv(a) == records_csv(b));
    CHECK(records_json(a) == records_json(b));
    const auto corpus = parse_corpus(kCorpus);
    CHECK(census_csv(run_census(corpus, one)) == census_csv(run_census(corpus, four)));
    CHECK(theorem_csv(verify_theorems(3, 7, one)) == theorem_csv(verify_theorems(3, 7, four)));
  }

  TEST_CASE("csv layout") {
    const auto rows = run_census(parse_corpus(kCorpus), {});
    const auto csv = census_csv(rows);
    CHECK(csv.rfind("name,order,exponent,s,ps,nps,status\n", 0) == 0);
    CHECK(csv.find("Sym(3),6,6,6,3,3,ok\n") != std::string::npos);
    CHECK(csv.find("# nps=3: 1\n") != std::string::npos);
    CHECK(csv.find("# nps=21: 1\n") != std::string::npos);
    CHECK(csv.find("bad-perm,,,,,,error: ") != std::string::npos);
  }

  TEST_CASE("json layout") {
    const auto j = nlohmann::json::parse(census_json(run_census(parse_corpus(kCorpus), {})));
    REQUIRE(j.contains("rows"));
    CHECK(j["rows"].size() == 7);
    CHECK(j["rows"][1]["nps"] == 21);
    const auto r = nlohmann::json::parse(records_json(run_checks(rank_two_checks(64), {})));
    REQUIRE(r.contains("records"));
    CHECK(r["summary"]["fail"] == 0);
  }

  TEST_CASE("judge") {
    ExpectedNps e;
    e.value = 5;
    CHECK(judge(e, 5) == Status::pass);
    CHECK(judge(e, 6) == Status::fail);
    e.kind = ExpectedKind::lower_bound;
    CHECK(judge(e, 6) == Status::lower_bound_ok);
    CHECK(judge(e, 4) == Status::fail);
    e.kind = ExpectedKind::from_formula_under_review;
    std::string note;
    CHECK(judge(e, 4, &note) == Status::under_review);
    CHECK(note == "formula disagrees: printed 5, enumeration 4");
    CHECK(judge(e, 5, &note) == Status::under_review);
    CHECK(note == "formula agrees with enumeration");
  }
}

TEST_SUITE("census verification") {
  TEST_CASE("formula sweep") {
    const auto records = verify_formulas({});
    const auto s = summarize(records);
    CHECK(s.ok());
    CHECK(s.pass >= 150);
    for (const auto& r : records)
      if (r.status == Status::fail) FAIL_CHECK(r.group << ": " << r.note);
    const std::pair<const char*, std::uint64_t> samples[] = {
        {"D(8)", 7},  {"D(16)", 15}, {"D(32)", 31}, {"D(64)", 63},
        {"G(1,9)", 12}, {"G(2,9)", 12}, {"G(3,9)", 12}, {"B1(2,3)", 38},
    };
    for (auto [group, nps] : samples) {
      CAPTURE(group);
      const auto* r = find(records, group);
      REQUIRE(r);
      CHECK(r->computed == nps);
      CHECK(r->status == Status::pass);
    }
  }

  TEST_CASE("rank-two rows are under review") {
    const auto records = run_checks(rank_two_checks(kDefaultLatticeCap), {});
    CHECK(records.size() >= 20);
    for (const auto& r : records) CHECK(r.status == Status::under_review);
    const auto* c2c4 = find(records, "C(2)xC(4)");
    REQUIRE(c2c4);
    CHECK(c2c4->computed == 5);
    CHECK(c2c4->note == "formula disagrees: printed 10, enumeration 5");
    CHECK(summarize(records).ok());
  }

  TEST_CASE("theorem buckets") {
    const auto report = verify_theorems(0, 4, {});
    CHECK(report.ok());
    for (const auto& r : report.soundness) CHECK(r.computed == static_cast<std::uint64_t>(r.expected->value));
    CHECK(report.isomorphic_pairs.empty());
    CHECK(report.pairs_checked >= 2);
    CHECK(verify_theorems(1, 2, {}).soundness.empty());
  }

  TEST_CASE("completeness against a corpus") {
    auto corpus = parse_corpus(kCorpus);
    corpus.resize(2);
    const auto report = verify_theorems(0, kMaxClassifiedK, {}, &corpus);
    REQUIRE(report.completeness.size() == 1);
    CHECK(report.completeness[0].name == "Sym(3)");
    CHECK(report.completeness[0].nps == 3);
    CHECK(report.completeness[0].match == "G(1,3)");
  }
}
