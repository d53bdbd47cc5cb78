#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nps/group.hpp"
#include "nps/numtheory.hpp"
#include "nps/presentation.hpp"

namespace nps {

/// Named group families.
///
/// Parameter layout of FamilySpec::params per family:
///   Cyclic {n}                   C_n
///   Dihedral {order}             dihedral group of the given (even) order
///   GeneralizedQuaternion {order}
///   Semidihedral {order}
///   Quasidihedral {n, p}         M_{n,p} = G^(1+p^(n-2))_{p,1; p,n-1}
///   Extraspecial {p}             M(p), order p^3 and exponent p
///   General {p, n, q, m}, r      <a,b | a^(p^n), b^(q^m), a^-1 b a = b^r>
///   GShort {n, p, m}             G_{n,p^m} = G^(-1)_{2,n; p,m}
///   F {n, p}, r                  G^(r)_{3,n; p,1} with r of order 3 mod p
///   B1 {n, p}, B2 {n, p}         order p^(n+2)
///   A {n}                        (C2 x C2) x| C_(3^n)
///   Sym {n}, Alt {n}
///   SL23, C3SemidirectQ8         no parameters
///   X {n, p}                     D_2p x C3^n
///   Product                      direct product of `factors`
enum class Family {
  Cyclic,
  Dihedral,
  GeneralizedQuaternion,
  Semidihedral,
  Quasidihedral,
  Extraspecial,
  General,
  GShort,
  F,
  B1,
  B2,
  A,
  Sym,
  Alt,
  SL23,
  C3SemidirectQ8,
  X,
  Product,
};

struct FamilySpec {
  Family family = Family::Cyclic;
  std::vector<Int> params;
  /// Twisting residue for General and F.
  Int r = 0;
  std::vector<FamilySpec> factors;

  Int param(std::size_t i) const { return params.at(i); }
  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

namespace family {

FamilySpec cyclic(Int n);
FamilySpec dihedral(Int order);
FamilySpec quaternion(Int order);
FamilySpec semidihedral(Int order);
FamilySpec quasidihedral(Int n, Int p);
FamilySpec extraspecial(Int p);
FamilySpec general(Int r, Int p, Int n, Int q, Int m);
FamilySpec gshort(Int n, Int p, Int m = 1);
/// r = 0 selects the smallest residue of multiplicative order 3 mod p.
FamilySpec f(Int n, Int p, Int r = 0);
FamilySpec b1(Int n, Int p);
FamilySpec b2(Int n, Int p);
FamilySpec a(Int n);
FamilySpec sym(Int n);
FamilySpec alt(Int n);
FamilySpec sl23();
FamilySpec c3_q8();
FamilySpec x(Int n, Int p);
/// Flattens nested products; a single factor is returned unchanged.
FamilySpec product(std::vector<FamilySpec> factors);

}  // namespace family

/// Parses the spec mini-language:
///
///   spec   := term ('x' term)*
///   term   := Name [ '(' item ((',' | ';') item)* ')' ]
///   item   := integer | key '=' integer
///
/// Names: C(n), D(order), Q(order), S(order), M(n,p), M(p), G(n,p^m),
/// G(n,p,m), G(r=..;p=..,n=..;q=..,m=..), F(n,p[;r=..]), B1(n,p), B2(n,p),
/// A(n), Sym(n), Alt(n), SL(2,3), C3sQ8, X(n,p). Lowercase `x` is reserved
/// for the direct product. Examples: "Q(8)xC(2)", "G(r=-1;p=2,n=2;q=3,m=2)".
FamilySpec parse_spec(std::string_view text);

/// Canonical spec text; parse_spec(to_string(s)) == s.
std::string to_string(const FamilySpec& spec);

/// Checks every parameter constraint; returns a diagnostic naming the
/// violated constraint, or nullopt when the spec is valid. Never throws.
std::optional<std::string> validate(const FamilySpec& spec);

/// Group order implied by a valid spec (saturates at INT64_MAX).
Int predicted_order(const FamilySpec& spec);

/// Constructs the group. Throws ValidationError for an invalid spec and
/// SizeLimitError when the order exceeds `cap`.
Group build(const FamilySpec& spec, std::size_t cap = kDefaultOrderCap);

/// Transcribed defining presentation with parameters substituted.
/// Throws ValidationError ("no presentation") for families without one.
std::string builtin_presentation_text(const FamilySpec& spec);
Presentation builtin_presentation(const FamilySpec& spec);
bool has_builtin_presentation(const FamilySpec& spec);

enum class ExpectedKind { exact, lower_bound, from_formula_under_review };

std::string to_string(ExpectedKind kind);

/// Catalogued nonpower-subgroup count. `value / denominator` is the closed
/// form's value; the denominator is 1 except for formulas under review that
/// evaluate to a non-integer.
struct ExpectedNps {
  ExpectedKind kind = ExpectedKind::exact;
  Int value = 0;
  Int denominator = 1;
  /// Closed form the value comes from.
  std::string source;

  bool is_integer() const { return denominator == 1; }
  std::string value_text() const;
};

/// Catalog value for a valid spec, or nullopt when there is no entry.
std::optional<ExpectedNps> expected_nps(const FamilySpec& spec);

/// The printed closed form for the number of nonpower subgroups of
/// C_(p^n1) x C_(p^n2), n1 <= n2, as a reduced fraction.
ExpectedNps rank_two_abelian_formula(Int p, Int n1, Int n2);

/// Number of subgroups of the elementary abelian group of order p^d.
Int elementary_abelian_subgroup_count(Int p, Int d);

}  // namespace nps
