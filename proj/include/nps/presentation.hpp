#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nps/group.hpp"

namespace nps {

struct Letter {
  std::size_t generator = 0;
  /// +1 for the generator, -1 for its inverse.
  int sign = 1;

  Letter inverse() const { return {generator, -sign}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A freely reduced word over a presentation's generators.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;
  Word power(std::int64_t k) const;
  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;

  static Word generator(std::size_t g, int sign = 1) { return Word({{g, sign}}); }
  static Word conjugate(const Word& x, const Word& by) { return by.inverse() * x * by; }
  /// [x, y] = x^-1 y^-1 x y
  static Word commutator(const Word& x, const Word& y) {
    return x.inverse() * y.inverse() * x * y;
  }

 private:
  std::vector<Letter> letters_;
};

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Parses "gens | relations".
///
/// Generators are a letter followed by optional digits, so "bc" is b*c.
/// Relations are comma separated; `u = v = w` yields the relators u v^-1
/// and v w^-1, and a bare word is a relator. Within words: juxtaposition
/// (or `*`) multiplies, `1` is the identity, `(w)` groups, `[u,v]` is
/// u^-1 v^-1 u v, `x^k` is a power (k may be negative) and `x^y` with y a
/// generator or parenthesised word is the conjugate y^-1 x y. `^` binds
/// tighter than juxtaposition and chains left to right. Whitespace is
/// ignored; optional surrounding angle brackets are accepted.
Presentation parse_presentation(std::string_view text);

std::string format_word(const Word& w, const std::vector<std::string>& names);
/// Canonical text "a,b | r1, r2" that parses back to the same relators.
std::string format_presentation(const Presentation& p);

inline constexpr std::size_t kDefaultMaxCosets = 100000;

struct CosetTable {
  enum class Status { complete, capped };
  /// rows[c][2g] is c.g and rows[c][2g+1] is c.g^-1; -1 means undefined.
  std::vector<std::vector<std::int64_t>> rows;
  Status status = Status::capped;
};

struct Enumeration {
  CosetTable table;
  /// Number of cosets of the trivial subgroup, i.e. the group order.
  std::size_t order = 0;
  /// The group, when the enumeration completed within the order cap.
  std::optional<Group> group;

  bool complete() const { return table.status == CosetTable::Status::complete; }
};

/// Todd-Coxeter (HLT, relator scanning) over the trivial subgroup.
///
/// Cosets are defined at the first undefined table entry of the lowest live
/// coset, so the run is deterministic. A run that needs more than
/// `max_cosets` cosets stops with status capped.
Enumeration coset_enumerate(const Presentation& p, std::size_t max_cosets = kDefaultMaxCosets,
                            std::size_t group_cap = kDefaultOrderCap);

}  // namespace nps
