#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nps/families.hpp"
#include "nps/lattice.hpp"

namespace nps {

enum class Status { pass, fail, lower_bound_ok, under_review };

std::string to_string(Status status);

struct VerifyRecord {
  std::string group;
  std::uint64_t order = 0;
  std::optional<ExpectedNps> expected;
  std::optional<std::uint64_t> computed;
  Status status = Status::fail;
  std::string citation;
  std::string note;
};

/// pass iff exact and equal; lower_bound_ok iff computed >= bound;
/// under_review always for formulas under review (the note says whether
/// the formula agrees with the computed count).
Status judge(const ExpectedNps& expected, std::uint64_t computed, std::string* note = nullptr);

struct RunOptions {
  Int max_n = 4;
  std::size_t cap = kDefaultLatticeCap;
  unsigned jobs = 1;
};

/// One group to compute, with the value it is checked against.
struct Check {
  std::string label;
  Int order = 0;
  std::function<Group(std::size_t cap)> build;
  std::optional<ExpectedNps> expected;
};

Check check_for(const FamilySpec& spec);
/// A group given by a presentation, checked against an exact value.
Check check_for_presentation(std::string label, std::string text, Int order, Int nps,
                             std::string citation);

/// Runs checks (in parallel across groups when jobs > 1); output order
/// matches input order. Build or cap errors become fail rows with a note.
std::vector<VerifyRecord> run_checks(const std::vector<Check>& checks, const RunOptions& options);

/// The formula sweep: every catalog family over its default parameter
/// range, the lower-bound patterns, and the rank-two abelian rows.
std::vector<Check> formula_checks(const RunOptions& options);
/// Rows for C_(p^n1) x C_(p^n2), p <= 5, 1 <= n1 <= n2 <= 6, order <= cap.
std::vector<Check> rank_two_checks(std::size_t cap);
std::vector<VerifyRecord> verify_formulas(const RunOptions& options);

struct Summary {
  std::size_t pass = 0, fail = 0, lower_bound_ok = 0, under_review = 0;
  bool ok() const { return fail == 0; }
};
Summary summarize(const std::vector<VerifyRecord>& records);

// ---------------------------------------------------------------------------
// Corpus files

struct CorpusEntry {
  std::string name;
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  /// Non-empty when the entry is malformed.
  std::string error;
};

/// Parses a JSON array of {name, degree, generators}. Throws ParseError
/// when the document is not a JSON array; malformed entries are kept with
/// `error` set.
std::vector<CorpusEntry> parse_corpus(std::string_view json_text);
std::vector<CorpusEntry> load_corpus(const std::string& path);

/// Corpus entry for a group, with the regular representation as generators.
CorpusEntry to_corpus_entry(const Group& g, const std::string& name);
std::string corpus_json(const std::vector<CorpusEntry>& entries);

/// Throws ValidationError for a malformed entry, SizeLimitError past cap.
Group build_entry(const CorpusEntry& entry, std::size_t cap);

struct CensusRow {
  std::string name;
  std::optional<CountSummary> counts;
  std::string error;
};

std::vector<CensusRow> run_census(const std::vector<CorpusEntry>& corpus, const RunOptions& options);

// ---------------------------------------------------------------------------
// Classification lists

struct CompletenessRow {
  std::string name;
  std::uint64_t order = 0;
  std::uint64_t nps = 0;
  /// Matching list entry, empty when unmatched.
  std::string match;
};

struct TheoremReport {
  /// One row per instantiated list member.
  std::vector<VerifyRecord> soundness;
  std::size_t pairs_checked = 0;
  /// "k=K: A ~ B" for every isomorphic pair of distinct list members.
  std::vector<std::string> isomorphic_pairs;
  std::vector<CompletenessRow> completeness;

  bool ok() const;
};

TheoremReport verify_theorems(int k_min, int k_max, const RunOptions& options,
                              const std::vector<CorpusEntry>* corpus = nullptr);

/// The fixed construction corpus used by the property suites (>= 60 groups,
/// every order <= cap).
std::vector<FamilySpec> construction_corpus(std::size_t cap = kDefaultLatticeCap);

/// Every valid instance of order <= max_order of a family that has a builtin
/// presentation (all admissible twists r for the general family).
std::vector<FamilySpec> presented_instances(Int max_order);

// ---------------------------------------------------------------------------
// Reports. CSV is the default; every format is deterministic.

std::string records_csv(const std::vector<VerifyRecord>& records);
std::string records_json(const std::vector<VerifyRecord>& records);
std::string census_csv(const std::vector<CensusRow>& rows);
std::string census_json(const std::vector<CensusRow>& rows);
std::string theorem_csv(const TheoremReport& report);
std::string theorem_json(const TheoremReport& report);

}  // namespace nps
