#include "nps/census.hpp"

#include <atomic>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "nps/catalog.hpp"
#include "nps/error.hpp"
#include "nps/isomorphism.hpp"
#include "nps/presentation.hpp"

namespace nps {

using json = nlohmann::ordered_json;

namespace {

// Applies fn to 0..n-1 on up to `jobs` threads; results keep input order.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, unsigned jobs, Fn fn) {
  std::vector<T> out(n);
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) out[i] = fn(i);
  };
  std::vector<std::thread> pool;
  const unsigned count = std::min<unsigned>(jobs, static_cast<unsigned>(n));
  for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_string(Status status) {
  switch (status) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::lower_bound_ok: return "lower_bound_ok";
    case Status::under_review: return "under_review";
  }
  return "?";
}

Status judge(const ExpectedNps& expected, std::uint64_t computed, std::string* note) {
  const auto value = static_cast<std::uint64_t>(expected.value);
  switch (expected.kind) {
    case ExpectedKind::exact:
      return computed == value && expected.is_integer() ? Status::pass : Status::fail;
    case ExpectedKind::lower_bound:
      return computed >= value ? Status::lower_bound_ok : Status::fail;
    case ExpectedKind::from_formula_under_review:
      if (note) {
        const bool agrees = expected.is_integer() && value == computed;
        *note = agrees ? "formula agrees with enumeration"
                       : "formula disagrees: printed " + expected.value_text() + ", enumeration " +
                             std::to_string(computed);
      }
      return Status::under_review;
  }
  return Status::fail;
}

Check check_for(const FamilySpec& spec) {
  Check c;
  c.label = to_string(spec);
  c.order = predicted_order(spec);
  c.build = [spec](std::size_t cap) { return build(spec, cap); };
  c.expected = expected_nps(spec);
  return c;
}

Check check_for_presentation(std::string label, std::string text, Int order, Int nps,
                             std::string citation) {
  Check c;
  c.label = std::move(label);
  c.order = order;
  c.build = [text = std::move(text), label = c.label](std::size_t cap) {
    auto e = coset_enumerate(parse_presentation(text), kDefaultMaxCosets, cap);
    if (!e.complete()) throw SizeLimitError("coset enumeration capped for " + label);
    return e.group->relabeled(label);
  };
  c.expected = ExpectedNps{ExpectedKind::exact, nps, 1, std::move(citation)};
  return c;
}

std::vector<VerifyRecord> run_checks(const std::vector<Check>& checks, const RunOptions& options) {
  return parallel_map<VerifyRecord>(checks.size(), options.jobs, [&](std::size_t i) {
    const Check& c = checks[i];
    VerifyRecord r;
    r.group = c.label;
    r.order = static_cast<std::uint64_t>(c.order);
    r.expected = c.expected;
    if (c.expected) r.citation = c.expected->source;
    try {
      const Group g = c.build(options.cap);
      r.order = g.order();
      const CountSummary s = counts(g, options.cap);
      r.computed = s.nps;
      if (c.expected)
        r.status = judge(*c.expected, s.nps, &r.note);
      else
        r.note = "no catalog entry";
    } catch (const Error& e) {
      r.status = Status::fail;
      r.note = e.what();
    }
    return r;
  });
}

// ---------------------------------------------------------------------------
// Formula sweep

namespace {

void add(std::vector<Check>& out, std::set<std::string>& seen, const FamilySpec& spec, std::size_t cap) {
  if (validate(spec) || predicted_order(spec) > static_cast<Int>(cap)) return;
  Check c = check_for(spec);
  if (!seen.insert(c.label).second) return;
  out.push_back(std::move(c));
}

FamilySpec power_product(FamilySpec core, Int factor, Int copies) {
  std::vector<FamilySpec> f{std::move(core)};
  for (Int i = 0; i < copies; ++i) f.push_back(family::cyclic(factor));
  return family::product(std::move(f));
}

}  // namespace

std::vector<Check> rank_two_checks(std::size_t cap) {
  std::vector<Check> out;
  for (Int p : {2, 3, 5})
    for (Int n1 = 1; n1 <= 6; ++n1)
      for (Int n2 = n1; n2 <= 6; ++n2) {
        auto spec = family::product({family::cyclic(ipow(p, n1)), family::cyclic(ipow(p, n2))});
        if (predicted_order(spec) > static_cast<Int>(cap)) continue;
        out.push_back(check_for(spec));
      }
  return out;
}

std::vector<Check> formula_checks(const RunOptions& options) {
  const std::size_t cap = options.cap;
  const Int max_n = std::max<Int>(options.max_n, 1);
  std::vector<Check> out;
  std::set<std::string> seen;
  auto push = [&](const FamilySpec& s) { add(out, seen, s, cap); };

  for (Int n : {1, 12, 30}) push(family::cyclic(n));

  // 2-power families, n from the smallest admissible value
  for (Int i = 0; i < max_n; ++i) {
    push(family::dihedral(ipow(2, 3 + i)));
    push(family::quaternion(ipow(2, 3 + i)));
    push(family::semidihedral(ipow(2, 4 + i)));
    push(family::quasidihedral(4 + i, 2));
  }
  for (Int p : {3, 5, 7})
    for (Int i = 0; i < max_n; ++i) push(family::quasidihedral(3 + i, p));
  for (Int p : {3, 5, 7}) push(family::extraspecial(p));

  for (Int q : {3, 5, 7}) {
    push(family::dihedral(2 * q));
    push(family::dihedral(4 * q));
  }
  for (Int half : {9, 25, 27}) push(family::dihedral(2 * half));
  push(family::dihedral(4));

  for (Int p : {3, 5, 7, 11, 13})
    for (Int m = 1; m <= 2; ++m)
      for (Int n = 1; n <= max_n; ++n) push(family::gshort(n, p, m));

  for (Int p : {7, 13})
    for (Int n = 1; n <= max_n; ++n) push(family::f(n, p));
  push(family::f(1, 7, 4));
  for (Int n = 1; n <= max_n; ++n) push(family::a(n));

  // G^(r)_{p,n;q,m} with p != q
  push(family::general(2, 2, 2, 5, 1));
  push(family::general(3, 5, 1, 11, 1));
  push(family::general(-1, 2, 1, 3, 2));
  push(family::general(2, 3, 1, 7, 1));
  for (Int p : {2, 3, 5})
    for (Int q : {3, 5, 7, 11, 13}) {
      if (p == q) continue;
      for (Int n = 1; n <= 2; ++n)
        for (Int m = 1; m <= 2; ++m) {
          const Int qm = ipow(q, m);
          std::set<Int> orders_seen;
          for (Int r = 1; r < qm; ++r) {
            auto ord = multiplicative_order(r, qm);
            if (!ord || !log_prime_power(*ord, p) || *ord > ipow(p, n)) continue;
            if (orders_seen.insert(*ord).second) push(family::general(r, p, n, q, m));
          }
        }
    }

  // p = q: the rank-two count, nonabelian and abelian
  for (auto [p, n, m] : {std::tuple<Int, Int, Int>{3, 1, 1}, {3, 2, 1}, {5, 1, 1}})
    push(family::general(1 + ipow(p, m), p, n, p, m));
  for (auto [p, n, m] : {std::tuple<Int, Int, Int>{3, 1, 2}, {3, 2, 2}, {5, 1, 2}, {3, 2, 3}})
    push(family::general(1 + ipow(p, m - 1), p, n, p, m));

  for (Int p : {2, 3, 5, 7})
    for (Int n = 1; n <= max_n; ++n) {
      push(family::b1(n, p));
      push(family::b2(n, p));
    }

  for (Int p : {3, 5, 7})
    for (Int n = 1; n <= max_n; ++n) push(family::x(n, p));

  for (Int copies = 1; copies <= 3; ++copies) push(power_product(family::quaternion(8), 2, copies));
  for (Int m = 1; m <= 2; ++m)
    for (Int copies = 1; copies <= 2; ++copies) push(power_product(family::gshort(m, 3), 3, copies));
  for (Int p : {3, 5, 7})
    for (Int copies = 1; copies <= 2; ++copies) push(power_product(family::dihedral(2 * p), 2, copies));

  push(family::sym(3));
  push(family::sym(4));
  push(family::alt(4));
  push(family::sl23());
  push(family::c3_q8());
  out.push_back(check_for_presentation("C7x|C6", "a,b | a^6=1, b^7=1, a^-1 b a = b^3", 42, 21,
                                       "nps(C7 x| C6) = 21"));

  push(family::product({family::dihedral(8), family::cyclic(3)}));
  push(family::product({family::quaternion(8), family::cyclic(15)}));
  push(family::product({family::extraspecial(3), family::cyclic(4)}));

  for (auto& c : rank_two_checks(cap))
    if (seen.insert(c.label).second) out.push_back(std::move(c));
  return out;
}

std::vector<VerifyRecord> verify_formulas(const RunOptions& options) {
  return run_checks(formula_checks(options), options);
}

Summary summarize(const std::vector<VerifyRecord>& records) {
  Summary s;
  for (const auto& r : records) {
    switch (r.status) {
      case Status::pass: ++s.pass; break;
      case Status::fail: ++s.fail; break;
      case Status::lower_bound_ok: ++s.lower_bound_ok; break;
      case Status::under_review: ++s.under_review; break;
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Corpus files

std::vector<CorpusEntry> parse_corpus(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("corpus is not valid JSON: ") + e.what(), e.byte);
  }
  if (!doc.is_array()) throw ParseError("corpus must be a JSON array", 0);
  std::vector<CorpusEntry> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const json& item = doc[i];
    CorpusEntry e;
    e.name = "#" + std::to_string(i);
    try {
      if (!item.is_object()) throw ValidationError("entry is not an object");
      if (item.contains("name") && item["name"].is_string()) e.name = item["name"].get<std::string>();
      e.degree = item.at("degree").get<std::size_t>();
      e.generators = item.at("generators").get<std::vector<Permutation>>();
    } catch (const std::exception& ex) {
      e.error = ex.what();
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CorpusEntry> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open corpus " + path, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_corpus(buf.str());
}

CorpusEntry to_corpus_entry(const Group& g, const std::string& name) {
  CorpusEntry e;
  e.name = name;
  e.degree = g.order();
  e.generators = regular_generators(g);
  return e;
}

std::string corpus_json(const std::vector<CorpusEntry>& entries) {
  std::ostringstream out;
  out << "[\n";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    out << "  {\"name\": " << json(e.name).dump() << ", \"degree\": " << e.degree
        << ", \"generators\": " << json(e.generators).dump() << "}" << (i + 1 < entries.size() ? "," : "")
        << "\n";
  }
  out << "]\n";
  return out.str();
}

Group build_entry(const CorpusEntry& entry, std::size_t cap) {
  if (!entry.error.empty()) throw ValidationError(entry.error);
  if (entry.degree == 0) throw ValidationError("degree must be positive");
  for (const auto& p : entry.generators) {
    if (p.size() != entry.degree)
      throw ValidationError("generator has " + std::to_string(p.size()) + " points, degree is " +
                            std::to_string(entry.degree));
    std::vector<bool> hit(entry.degree, false);
    for (auto v : p) {
      if (v >= entry.degree || hit[v]) throw ValidationError("generator is not a permutation");
      hit[v] = true;
    }
  }
  return group_from_generators(entry.degree, entry.generators, cap).relabeled(entry.name);
}

std::vector<CensusRow> run_census(const std::vector<CorpusEntry>& corpus, const RunOptions& options) {
  return parallel_map<CensusRow>(corpus.size(), options.jobs, [&](std::size_t i) {
    CensusRow row;
    row.name = corpus[i].name;
    try {
      row.counts = counts(build_entry(corpus[i], options.cap), options.cap);
    } catch (const Error& e) {
      row.error = e.what();
    }
    return row;
  });
}

// ---------------------------------------------------------------------------
// Classification lists

bool TheoremReport::ok() const {
  if (!isomorphic_pairs.empty()) return false;
  for (const auto& r : soundness)
    if (r.status != Status::pass) return false;
  return true;
}

TheoremReport verify_theorems(int k_min, int k_max, const RunOptions& options,
                              const std::vector<CorpusEntry>* corpus) {
  TheoremReport report;
  std::vector<Check> checks;
  for (int k = k_min; k <= k_max; ++k) {
    for (const auto& t : theorem_catalog(k)) {
      for (const auto& spec : t.instances(options.max_n, options.cap)) {
        Check c = check_for(spec);
        c.expected = ExpectedNps{ExpectedKind::exact, k, 1, "nps(" + t.text + ") = " + std::to_string(k)};
        checks.push_back(std::move(c));
      }
    }
  }
  report.soundness = run_checks(checks, options);

  // Pairwise distinctness at minimal parameters.
  for (int k = k_min; k <= k_max; ++k) {
    std::vector<Group> members;
    for (const auto& t : theorem_catalog(k)) {
      FamilySpec s = t.minimal();
      if (predicted_order(s) <= static_cast<Int>(options.cap)) members.push_back(build(s, options.cap));
    }
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        ++report.pairs_checked;
        if (are_isomorphic(members[i], members[j], options.cap))
          report.isomorphic_pairs.push_back("k=" + std::to_string(k) + ": " + members[i].label() + " ~ " +
                                            members[j].label());
      }
  }

  if (corpus) {
    auto rows = parallel_map<std::optional<CompletenessRow>>(
        corpus->size(), options.jobs, [&](std::size_t i) -> std::optional<CompletenessRow> {
          const auto& entry = (*corpus)[i];
          Group g;
          CountSummary s;
          try {
            g = build_entry(entry, options.cap);
            s = counts(g, options.cap);
          } catch (const Error&) {
            return std::nullopt;
          }
          if (s.nps > static_cast<std::size_t>(kMaxClassifiedK)) return std::nullopt;
          CompletenessRow row{entry.name, g.order(), s.nps, {}};
          for (const auto& t : theorem_catalog(static_cast<int>(s.nps))) {
            for (const auto& spec : t.instances_of_order(static_cast<Int>(g.order()))) {
              if (are_isomorphic(g, build(spec, options.cap), options.cap)) {
                row.match = to_string(spec);
                return row;
              }
            }
          }
          return row;
        });
    for (auto& r : rows)
      if (r) report.completeness.push_back(std::move(*r));
  }
  return report;
}

std::vector<FamilySpec> construction_corpus(std::size_t cap) {
  static const char* const kSpecs[] = {
      "C(1)", "C(2)", "C(6)", "C(8)", "C(12)", "C(30)",
      "C(2)xC(2)", "C(3)xC(3)", "C(2)xC(4)", "C(4)xC(4)", "C(2)xC(2)xC(2)", "C(3)xC(9)",
      "C(2)xC(6)", "C(5)xC(5)", "C(2)xC(2)xC(3)", "C(2)xC(8)", "C(3)xC(3)xC(3)",
      "D(6)", "D(8)", "D(10)", "D(12)", "D(16)", "D(18)", "D(20)", "D(24)",
      "Q(8)", "Q(16)", "Q(32)", "S(16)", "S(32)",
      "M(4,2)", "M(5,2)", "M(3,3)", "M(4,3)", "M(3,5)", "M(3)", "M(5)",
      "G(1,3)", "G(2,3)", "G(3,3)", "G(1,5)", "G(2,5)", "G(1,7)", "G(1,9)", "G(2,9)", "G(1,11)",
      "G(1,13)", "G(r=2;p=2,n=2;q=5,m=1)", "G(r=3;p=5,n=1;q=11,m=1)", "G(r=2;p=3,n=1;q=7,m=1)",
      "G(r=-1;p=2,n=1;q=3,m=2)", "G(r=4;p=3,n=1;q=3,m=2)",
      "F(1,7)", "F(2,7)", "F(1,13)",
      "B1(2,2)", "B1(1,3)", "B1(2,3)", "B2(2,2)", "B2(3,2)", "B2(2,3)",
      "A(1)", "A(2)", "A(3)", "Sym(3)", "Sym(4)", "Alt(4)", "Alt(5)", "SL(2,3)", "C3sQ8",
      "X(1,5)", "X(2,3)", "Q(8)xC(2)", "Q(8)xC(3)", "D(8)xC(3)", "Sym(3)xC(3)", "D(10)xC(2)",
      "G(1,3)xC(5)", "Q(8)xC(2)xC(2)", "D(8)xC(2)", "Sym(3)xSym(3)", "Q(8)xC(5)", "D(8)xC(9)",
  };
  std::vector<FamilySpec> out;
  for (const char* text : kSpecs) {
    FamilySpec s = parse_spec(text);
    if (predicted_order(s) <= static_cast<Int>(cap)) out.push_back(std::move(s));
  }
  return out;
}

std::vector<FamilySpec> presented_instances(Int max_order) {
  std::vector<FamilySpec> out;
  auto keep = [&](const FamilySpec& s) {
    if (!validate(s) && predicted_order(s) <= max_order) out.push_back(s);
  };
  std::vector<Int> primes;
  for (Int p = 2; p <= max_order; ++p)
    if (is_prime(p)) primes.push_back(p);
  // Smallest exponent e with base^e > max_order.
  auto top = [max_order](Int base) {
    Int e = 0;
    for (Int v = 1; v <= max_order; v *= base) ++e;
    return e;
  };

  for (Int n = 1; n <= max_order; ++n) keep(family::cyclic(n));
  for (Int n = 2; n <= max_order; n += 2) keep(family::dihedral(n));
  for (Int v = 8; v <= max_order; v *= 2) {
    keep(family::quaternion(v));
    keep(family::semidihedral(v));
  }
  keep(family::c3_q8());
  for (Int n = 1; n < top(3); ++n) keep(family::a(n));
  for (Int p : primes) {
    keep(family::extraspecial(p));
    for (Int n = 1; n < top(p); ++n) {
      keep(family::quasidihedral(n, p));
      keep(family::b1(n, p));
      keep(family::b2(n, p));
      keep(family::f(n, p));
      for (Int m = 1; m < top(p); ++m) keep(family::gshort(n, p, m));
    }
  }
  for (Int p : primes)
    for (Int q : primes)
      for (Int n = 1; n < top(p); ++n)
        for (Int m = 1; m < top(q); ++m) {
          const Int order = ipow(p, n) * ipow(q, m);
          if (order > max_order) continue;
          const Int qm = ipow(q, m);
          for (Int r = 1; r < qm; ++r) keep(family::general(r, p, n, q, m));
        }
  return out;
}

// ---------------------------------------------------------------------------
// Reports

namespace {

json record_json(const VerifyRecord& r) {
  json j;
  j["group"] = r.group;
  j["order"] = r.order;
  j["kind"] = r.expected ? to_string(r.expected->kind) : "";
  j["expected"] = r.expected ? r.expected->value_text() : "";
  if (r.computed)
    j["computed"] = *r.computed;
  else
    j["computed"] = nullptr;
  j["status"] = to_string(r.status);
  j["citation"] = r.citation;
  j["note"] = r.note;
  return j;
}

json summary_json(const Summary& s) {
  return json{{"pass", s.pass}, {"fail", s.fail}, {"lower_bound_ok", s.lower_bound_ok},
              {"under_review", s.under_review}};
}

void summary_lines(std::ostringstream& out, const Summary& s) {
  out << "# summary pass=" << s.pass << " fail=" << s.fail << " lower_bound_ok=" << s.lower_bound_ok
      << " under_review=" << s.under_review << "\n";
}

void record_rows(std::ostringstream& out, const std::vector<VerifyRecord>& records) {
  out << "group,order,kind,expected,computed,status,citation,note\n";
  for (const auto& r : records) {
    out << csv_field(r.group) << ',' << r.order << ','
        << (r.expected ? to_string(r.expected->kind) : "") << ','
        << (r.expected ? r.expected->value_text() : "") << ','
        << (r.computed ? std::to_string(*r.computed) : "") << ',' << to_string(r.status) << ','
        << csv_field(r.citation) << ',' << csv_field(r.note) << '\n';
  }
}

std::map<std::size_t, std::size_t> histogram(const std::vector<CensusRow>& rows) {
  std::map<std::size_t, std::size_t> h;
  for (const auto& r : rows)
    if (r.counts) ++h[r.counts->nps];
  return h;
}

}  // namespace

std::string records_csv(const std::vector<VerifyRecord>& records) {
  std::ostringstream out;
  record_rows(out, records);
  summary_lines(out, summarize(records));
  return out.str();
}

std::string records_json(const std::vector<VerifyRecord>& records) {
  json rows = json::array();
  for (const auto& r : records) rows.push_back(record_json(r));
  json doc{{"records", rows}, {"summary", summary_json(summarize(records))}};
  return doc.dump(2) + "\n";
}

std::string census_csv(const std::vector<CensusRow>& rows) {
  std::ostringstream out;
  out << "name,order,exponent,s,ps,nps,status\n";
  for (const auto& r : rows) {
    out << csv_field(r.name) << ',';
    if (r.counts)
      out << r.counts->order << ',' << r.counts->exponent << ',' << r.counts->s << ',' << r.counts->ps << ','
          << r.counts->nps << ",ok\n";
    else
      out << ",,,,," << csv_field("error: " + r.error) << '\n';
  }
  for (auto [k, count] : histogram(rows)) out << "# nps=" << k << ": " << count << "\n";
  return out.str();
}

std::string census_json(const std::vector<CensusRow>& rows) {
  json items = json::array();
  for (const auto& r : rows) {
    json j;
    j["name"] = r.name;
    if (r.counts) {
      j["order"] = r.counts->order;
      j["exponent"] = r.counts->exponent;
      j["s"] = r.counts->s;
      j["ps"] = r.counts->ps;
      j["nps"] = r.counts->nps;
    } else {
      j["error"] = r.error;
    }
    items.push_back(std::move(j));
  }
  json hist = json::object();
  for (auto [k, count] : histogram(rows)) hist[std::to_string(k)] = count;
  json doc{{"rows", items}, {"histogram", hist}};
  return doc.dump(2) + "\n";
}

std::string theorem_csv(const TheoremReport& report) {
  std::ostringstream out;
  record_rows(out, report.soundness);
  summary_lines(out, summarize(report.soundness));
  out << "# distinctness pairs_checked=" << report.pairs_checked
      << " isomorphic_pairs=" << report.isomorphic_pairs.size() << "\n";
  for (const auto& p : report.isomorphic_pairs) out << "# isomorphic " << p << "\n";
  if (!report.completeness.empty()) {
    std::size_t unmatched = 0;
    out << "# completeness: name,order,nps,match\n";
    for (const auto& r : report.completeness) {
      out << "# " << r.name << ',' << r.order << ',' << r.nps << ',' << (r.match.empty() ? "UNMATCHED" : r.match)
          << "\n";
      if (r.match.empty()) ++unmatched;
    }
    out << "# completeness matched=" << report.completeness.size() - unmatched << " unmatched=" << unmatched
        << "\n";
  }
  return out.str();
}

std::string theorem_json(const TheoremReport& report) {
  json rows = json::array();
  for (const auto& r : report.soundness) rows.push_back(record_json(r));
  json comp = json::array();
  for (const auto& r : report.completeness)
    comp.push_back(json{{"name", r.name}, {"order", r.order}, {"nps", r.nps},
                        {"match", r.match.empty() ? json(nullptr) : json(r.match)}});
  json doc{{"soundness", rows},
           {"summary", summary_json(summarize(report.soundness))},
           {"distinctness", json{{"pairs_checked", report.pairs_checked},
                                 {"isomorphic_pairs", report.isomorphic_pairs}}},
           {"completeness", comp}};
  return doc.dump(2) + "\n";
}

}  // namespace nps
