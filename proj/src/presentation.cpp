#include "nps/presentation.hpp"

#include <cctype>
#include <numeric>
#include <unordered_map>

namespace nps {

Word::Word(std::vector<Letter> letters) {
  for (const Letter& l : letters) {
    if (!letters_.empty() && letters_.back() == l.inverse())
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  Word w;
  w.letters_ = std::move(out);
  return w;
}

Word Word::power(std::int64_t k) const {
  const Word base = k < 0 ? inverse() : *this;
  std::vector<Letter> out;
  for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i)
    out.insert(out.end(), base.letters_.begin(), base.letters_.end());
  return Word(std::move(out));
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> out = a.letters_;
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(out));
}

namespace {

constexpr std::int64_t kMaxExponent = 1'000'000;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Presentation parse() {
    Presentation p;
    bool angled = accept('<');
    // An empty generator list presents the trivial group.
    if (peek() != '|') {
      do {
        std::size_t at = skip();
        std::string name = identifier();
        if (name.empty()) fail("expected generator name", at);
        if (index_.count(name)) fail("duplicate generator '" + name + "'", at);
        index_.emplace(name, p.generators.size());
        p.generators.push_back(std::move(name));
      } while (accept(','));
    }
    if (!accept('|')) fail("expected '|'", skip());
    if (!at_end(angled)) {
      do {
        relation(p.relators);
      } while (accept(','));
    }
    if (angled && !accept('>')) fail("expected '>'", skip());
    if (skip() != text_.size()) fail("unexpected character", skip());
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what, std::size_t at) const { throw ParseError(what, at); }

  std::size_t skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return pos_;
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool at_end(bool angled) {
    char c = peek();
    return c == '\0' || (angled && c == '>');
  }

  std::string identifier() {
    skip();
    std::size_t start = pos_;
    if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::optional<std::int64_t> integer() {
    std::size_t save = skip();
    int sign = 1;
    if (accept('-'))
      sign = -1;
    else
      accept('+');
    skip();
    std::size_t start = pos_;
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > kMaxExponent) fail("exponent too large", start);
      ++pos_;
    }
    if (pos_ == start) {
      pos_ = save;
      return std::nullopt;
    }
    return sign * v;
  }

  void relation(std::vector<Word>& out) {
    std::vector<Word> sides{word()};
    while (accept('=')) sides.push_back(word());
    if (sides.size() == 1) {
      out.push_back(std::move(sides.front()));
      return;
    }
    for (std::size_t i = 0; i + 1 < sides.size(); ++i) out.push_back(sides[i] * sides[i + 1].inverse());
  }

  static bool ends_word(char c) {
    return c == '\0' || c == ',' || c == '=' || c == '|' || c == ')' || c == ']' || c == '}' ||
           c == '>';
  }

  Word word() {
    Word w;
    bool any = false;
    while (true) {
      char c = peek();
      if (c == '*' && any) {
        ++pos_;
        continue;
      }
      if (ends_word(c)) break;
      w = w * factor();
      any = true;
    }
    if (!any) fail("expected word", skip());
    return w;
  }

  Word factor() {
    Word base = atom();
    while (accept('^')) {
      char c = peek();
      if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
        auto k = integer();
        if (!k) fail("expected exponent", skip());
        base = base.power(*k);
      } else if (c == '(' || c == '{') {
        char close = c == '(' ? ')' : '}';
        ++pos_;
        std::size_t save = pos_;
        auto k = integer();
        if (k && accept(close)) {
          base = base.power(*k);
          continue;
        }
        pos_ = save;
        Word by = word();
        if (!accept(close)) fail(std::string("expected '") + close + "'", skip());
        base = Word::conjugate(base, by);
      } else {
        base = Word::conjugate(base, generator_word());
      }
    }
    return base;
  }

  Word generator_word() {
    std::size_t at = skip();
    std::string name = identifier();
    if (name.empty()) fail("expected generator", at);
    auto it = index_.find(name);
    if (it == index_.end()) fail("undeclared generator '" + name + "'", at);
    return Word::generator(it->second);
  }

  Word atom() {
    char c = peek();
    if (c == '1') {
      ++pos_;
      return Word{};
    }
    if (c == '(' || c == '{') {
      char close = c == '(' ? ')' : '}';
      ++pos_;
      Word w = word();
      if (!accept(close)) fail(std::string("expected '") + close + "'", skip());
      return w;
    }
    if (c == '[') {
      ++pos_;
      Word x = word();
      if (!accept(',')) fail("expected ',' in commutator", skip());
      Word y = word();
      // [x, y, z] = [[x, y], z]
      Word result = Word::commutator(x, y);
      while (accept(',')) result = Word::commutator(result, word());
      if (!accept(']')) fail("expected ']'", skip());
      return result;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return generator_word();
    fail("unexpected character", skip());
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace

Presentation parse_presentation(std::string_view text) { return Parser(text).parse(); }

std::string format_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  const auto& ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    const std::int64_t k = static_cast<std::int64_t>(j - i) * ls[i].sign;
    if (!out.empty()) out += ' ';
    out += names.at(ls[i].generator);
    if (k != 1) out += '^' + std::to_string(k);
    i = j;
  }
  return out;
}

std::string format_presentation(const Presentation& p) {
  std::string out;
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (i) out += ',';
    out += p.generators[i];
  }
  out += " |";
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    out += i ? ", " : " ";
    out += format_word(p.relators[i], p.generators);
  }
  return out;
}

namespace {

class CosetEnumerator {
 public:
  CosetEnumerator(const Presentation& p, std::size_t max_cosets)
      : ncols_(2 * p.generators.size()), max_cosets_(max_cosets) {
    for (const Word& w : p.relators) {
      if (w.empty()) continue;
      std::vector<std::size_t> cols;
      for (const Letter& l : w.letters()) cols.push_back(2 * l.generator + (l.sign < 0 ? 1 : 0));
      relators_.push_back(std::move(cols));
    }
  }

  /// Returns false if the coset cap was hit.
  bool run() {
    new_coset();
    for (std::size_t alpha = 0; alpha < table_.size(); ++alpha) {
      if (!live(alpha)) continue;
      for (const auto& r : relators_) {
        if (!scan_and_fill(alpha, r)) return false;
        if (!live(alpha)) break;
      }
      if (!live(alpha)) continue;
      for (std::size_t x = 0; x < ncols_; ++x)
        if (table_[alpha][x] < 0 && !define(alpha, x)) return false;
    }
    return true;
  }

  const std::vector<std::vector<std::int64_t>>& table() const { return table_; }
  bool live(std::size_t c) const { return parent_[c] == c; }

 private:
  static std::size_t inv_col(std::size_t x) { return x ^ 1u; }

  std::size_t new_coset() {
    table_.emplace_back(ncols_, -1);
    parent_.push_back(parent_.size());
    return table_.size() - 1;
  }

  bool define(std::size_t c, std::size_t x) {
    if (table_.size() >= max_cosets_) return false;
    std::size_t d = new_coset();
    table_[c][x] = static_cast<std::int64_t>(d);
    table_[d][inv_col(x)] = static_cast<std::int64_t>(c);
    return true;
  }

  std::size_t rep(std::size_t c) {
    std::size_t r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      std::size_t next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(std::size_t a, std::size_t b) {
    std::size_t ra = rep(a), rb = rep(b);
    if (ra == rb) return;
    std::size_t lo = std::min(ra, rb), hi = std::max(ra, rb);
    parent_[hi] = lo;
    queue_.push_back(hi);
  }

  void coincidence(std::size_t a, std::size_t b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      std::size_t gamma = queue_[i];
      for (std::size_t x = 0; x < ncols_; ++x) {
        std::int64_t entry = table_[gamma][x];
        if (entry < 0) continue;
        auto delta = static_cast<std::size_t>(entry);
        table_[delta][inv_col(x)] = -1;
        std::size_t mu = rep(gamma), nu = rep(delta);
        if (table_[mu][x] >= 0) {
          merge(nu, static_cast<std::size_t>(table_[mu][x]));
        } else if (table_[nu][inv_col(x)] >= 0) {
          merge(mu, static_cast<std::size_t>(table_[nu][inv_col(x)]));
        } else {
          table_[mu][x] = static_cast<std::int64_t>(nu);
          table_[nu][inv_col(x)] = static_cast<std::int64_t>(mu);
        }
      }
    }
  }

  bool scan_and_fill(std::size_t alpha, const std::vector<std::size_t>& w) {
    std::size_t f = alpha, b = alpha;
    std::size_t i = 0, j = w.size();  // unscanned letters are w[i..j)
    while (true) {
      while (i < j && table_[f][w[i]] >= 0) f = static_cast<std::size_t>(table_[f][w[i++]]);
      if (i == j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j > i && table_[b][inv_col(w[j - 1])] >= 0)
        b = static_cast<std::size_t>(table_[b][inv_col(w[--j])]);
      if (j == i) {
        coincidence(f, b);
        return true;
      }
      if (j == i + 1) {
        table_[f][w[i]] = static_cast<std::int64_t>(b);
        table_[b][inv_col(w[i])] = static_cast<std::int64_t>(f);
        return true;
      }
      if (!define(f, w[i])) return false;
    }
  }

  std::size_t ncols_;
  std::size_t max_cosets_;
  std::vector<std::vector<std::size_t>> relators_;
  std::vector<std::vector<std::int64_t>> table_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> queue_;
};

}  // namespace

Enumeration coset_enumerate(const Presentation& p, std::size_t max_cosets, std::size_t group_cap) {
  Enumeration result;
  if (p.generators.empty()) {
    result.table.status = CosetTable::Status::complete;
    result.table.rows = {{}};
    result.order = 1;
    result.group = Group{};
    return result;
  }
  CosetEnumerator e(p, max_cosets);
  if (!e.run()) {
    result.table.status = CosetTable::Status::capped;
    result.table.rows = e.table();
    result.order = 0;
    return result;
  }
  // Compact live cosets; coset 0 stays first.
  const auto& raw = e.table();
  std::vector<std::int64_t> renumber(raw.size(), -1);
  std::size_t live = 0;
  for (std::size_t c = 0; c < raw.size(); ++c)
    if (e.live(c)) renumber[c] = static_cast<std::int64_t>(live++);
  result.table.status = CosetTable::Status::complete;
  result.order = live;
  result.table.rows.reserve(live);
  for (std::size_t c = 0; c < raw.size(); ++c) {
    if (!e.live(c)) continue;
    std::vector<std::int64_t> row(raw[c].size());
    for (std::size_t x = 0; x < row.size(); ++x) row[x] = renumber[static_cast<std::size_t>(raw[c][x])];
    result.table.rows.push_back(std::move(row));
  }
  if (live > group_cap) return result;
  std::vector<Permutation> perms(p.generators.size(), Permutation(live));
  for (std::size_t c = 0; c < live; ++c)
    for (std::size_t g = 0; g < perms.size(); ++g)
      perms[g][c] = static_cast<std::uint32_t>(result.table.rows[c][2 * g]);
  result.group = group_from_generators(live, perms, group_cap);
  return result;
}

}  // namespace nps
