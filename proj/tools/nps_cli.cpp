// nps: power and nonpower subgroup counts of finite groups.

#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "nps/catalog.hpp"
#include "nps/census.hpp"
#include "nps/error.hpp"
#include "nps/families.hpp"
#include "nps/isomorphism.hpp"
#include "nps/lattice.hpp"
#include "nps/presentation.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;

const char* const kSpecHelp = R"(Group specs:
  spec := term ('x' term)*        direct product, e.g. Q(8)xC(2)
  C(n)  D(order)  Q(order)  S(order)     cyclic, dihedral, quaternion, semidihedral
  M(n,p)                                 <a,b | a^p, b^(p^(n-1)), a^-1 b a = b^(1+p^(n-2))>
  M(p)                                   extraspecial of order p^3, exponent p
  G(n,q) or G(n,p,m)                     G_{n,p^m}: C_(p^m) x| C_(2^n) by inversion
  G(r=R;p=P,n=N;q=Q,m=M)                 <a,b | a^(P^N), b^(Q^M), a^-1 b a = b^R>
  F(n,p[;r=R])                           C_p x| C_(3^n), r of order 3 mod p
  B1(n,p)  B2(n,p)  A(n)  X(n,p)         X(n,p) = D(2p) x C(3)^n
  Sym(n)  Alt(n)  SL(2,3)  C3sQ8
)";

using nps::Group;

struct Common {
  std::size_t cap = 0;
  std::string format = "csv";
  unsigned jobs = 1;
  nps::Int max_n = 4;

  nps::RunOptions options() const { return {max_n, cap, jobs}; }
};

void add_common(CLI::App* cmd, Common& c, bool sweep) {
  cmd->add_option("--max-order", c.cap, "lattice order cap (default 600, or NPS_MAX_ORDER)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", c.format, "report format")->check(CLI::IsMember({"csv", "json"}));
  if (sweep) {
    cmd->add_option("--jobs", c.jobs, "groups computed in parallel")->check(CLI::PositiveNumber);
    cmd->add_option("--max-n", c.max_n, "family parameter sweep bound")->check(CLI::PositiveNumber);
  }
}

void print_counts(const std::string& label, const nps::CountSummary& s, const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json j{{"group", label},  {"order", s.order}, {"exponent", s.exponent},
                             {"s", s.s},        {"ps", s.ps},       {"nps", s.nps}};
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << "group,order,exponent,s,ps,nps\n"
            << label << ',' << s.order << ',' << s.exponent << ',' << s.s << ',' << s.ps << ',' << s.nps << "\n";
}

int cmd_nps(const std::string& target, const Common& c) {
  if (std::filesystem::is_regular_file(target)) {
    const auto rows = nps::run_census(nps::load_corpus(target), c.options());
    std::cout << (c.format == "json" ? nps::census_json(rows) : nps::census_csv(rows));
    for (const auto& r : rows)
      if (!r.error.empty()) return kExitInput;
    return 0;
  }
  const auto spec = nps::parse_spec(target);
  const Group g = nps::build(spec, std::max<std::size_t>(c.cap, nps::kDefaultOrderCap));
  print_counts(g.label(), nps::counts(g, c.cap), c.format);
  return 0;
}

int cmd_verify_formulas(const Common& c, bool rank_two_only) {
  const auto records = rank_two_only ? nps::run_checks(nps::rank_two_checks(c.cap), c.options())
                                     : nps::verify_formulas(c.options());
  std::cout << (c.format == "json" ? nps::records_json(records) : nps::records_csv(records));
  return nps::summarize(records).ok() ? 0 : kExitFailure;
}

int cmd_verify_theorems(const Common& c, int k_min, int k_max, const std::string& corpus_path) {
  if (k_min < 0 || k_max > nps::kMaxClassifiedK || k_min > k_max)
    throw nps::ValidationError("k range must lie within 0..13");
  std::vector<nps::CorpusEntry> corpus;
  if (!corpus_path.empty()) corpus = nps::load_corpus(corpus_path);
  const auto report = nps::verify_theorems(k_min, k_max, c.options(), corpus_path.empty() ? nullptr : &corpus);
  std::cout << (c.format == "json" ? nps::theorem_json(report) : nps::theorem_csv(report));
  return report.ok() ? 0 : kExitFailure;
}

int cmd_census(const Common& c, const std::string& corpus_path) {
  const auto rows = nps::run_census(nps::load_corpus(corpus_path), c.options());
  std::cout << (c.format == "json" ? nps::census_json(rows) : nps::census_csv(rows));
  return 0;
}

int cmd_present(const Common& c, const std::string& text, std::size_t max_cosets, const std::string& iso_spec) {
  const auto e = nps::coset_enumerate(nps::parse_presentation(text), max_cosets,
                                      std::max<std::size_t>(c.cap, nps::kDefaultOrderCap));
  if (!e.complete()) {
    std::cerr << "error: coset enumeration capped at " << max_cosets << " cosets\n";
    return kExitInput;
  }
  const Group& g = *e.group;
  print_counts(text, nps::counts(g, c.cap), c.format);
  if (iso_spec.empty()) return 0;
  const Group h = nps::build(nps::parse_spec(iso_spec), c.cap);
  const bool iso = nps::are_isomorphic(g, h, c.cap);
  std::cout << "# isomorphic to " << h.label() << ": " << (iso ? "yes" : "no") << "\n";
  return iso ? 0 : kExitFailure;
}

int cmd_export(const std::vector<std::string>& specs) {
  std::vector<nps::CorpusEntry> entries;
  for (const auto& text : specs) {
    const Group g = nps::build(nps::parse_spec(text));
    entries.push_back(nps::to_corpus_entry(g, g.label()));
  }
  std::cout << nps::corpus_json(entries);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Power and nonpower subgroup counts of finite groups.", "nps"};
  app.footer(kSpecHelp);
  app.require_subcommand(1);

  Common common;
  std::string target, corpus_path, text, iso_spec;
  std::size_t max_cosets = nps::kDefaultMaxCosets;
  int k_min = 0, k_max = nps::kMaxClassifiedK;
  bool rank_two_only = false;
  std::vector<std::string> specs;

  auto* nps_cmd = app.add_subcommand("nps", "counts for one group spec, or every entry of a corpus file");
  nps_cmd->add_option("group", target, "group spec or corpus file")->required();
  add_common(nps_cmd, common, true);

  auto* vf = app.add_subcommand("verify-formulas", "compare catalogued counts with enumeration");
  add_common(vf, common, true);
  vf->add_flag("--rank-two", rank_two_only, "only the C_(p^a) x C_(p^b) formula rows");

  auto* vt = app.add_subcommand("verify-theorems", "check the classification lists for k nonpower subgroups");
  add_common(vt, common, true);
  vt->add_option("--k-min", k_min, "smallest k")->check(CLI::Range(0, nps::kMaxClassifiedK));
  vt->add_option("--k-max", k_max, "largest k")->check(CLI::Range(0, nps::kMaxClassifiedK));
  vt->add_option("--corpus", corpus_path, "corpus to match against the lists")->check(CLI::ExistingFile);

  auto* census = app.add_subcommand("census", "counts for every group of a corpus file");
  add_common(census, common, true);
  census->add_option("--corpus,corpus", corpus_path, "JSON corpus file")->required();

  auto* present = app.add_subcommand("present", "enumerate a presentation such as \"a,b | a^4, b^2, (ab)^2\"");
  add_common(present, common, false);
  present->add_option("presentation", text, "presentation text")->required();
  present->add_option("--max-cosets", max_cosets, "coset table limit")->check(CLI::PositiveNumber);
  present->add_option("--iso-check", iso_spec, "group spec to test for isomorphism");

  auto* exp = app.add_subcommand("export", "write group specs as a corpus file (regular representation)");
  exp->add_option("specs", specs, "group specs")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (common.cap == 0) common.cap = nps::lattice_cap_from_env();
    if (*nps_cmd) return cmd_nps(target, common);
    if (*vf) return cmd_verify_formulas(common, rank_two_only);
    if (*vt) return cmd_verify_theorems(common, k_min, k_max, corpus_path);
    if (*census) return cmd_census(common, corpus_path);
    if (*present) return cmd_present(common, text, max_cosets, iso_spec);
    if (*exp) return cmd_export(specs);
  } catch (const nps::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
