#include "nps/families.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <sstream>
#include <tuple>

namespace nps {

namespace {

constexpr Int kSaturated = std::numeric_limits<Int>::max();

Int mul_sat(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

Int pow_sat(Int base, Int exp) {
  Int r = 1;
  for (Int i = 0; i < exp; ++i) r = mul_sat(r, base);
  return r;
}

Int default_order3_residue(Int p) {
  if (!is_prime(p)) return 0;
  for (Int r = 2; r < p; ++r)
    if (multiplicative_order(r, p) == 3) return r;
  return 0;
}

Int divisor_count(Int n) { return static_cast<Int>(divisors(n).size()); }

std::string join_ints(const std::vector<Int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

namespace family {

namespace {
FamilySpec make(Family f, std::vector<Int> params, Int r = 0) {
  FamilySpec s;
  s.family = f;
  s.params = std::move(params);
  s.r = r;
  return s;
}
}  // namespace

FamilySpec cyclic(Int n) { return make(Family::Cyclic, {n}); }
FamilySpec dihedral(Int order) { return make(Family::Dihedral, {order}); }
FamilySpec quaternion(Int order) { return make(Family::GeneralizedQuaternion, {order}); }
FamilySpec semidihedral(Int order) { return make(Family::Semidihedral, {order}); }
FamilySpec quasidihedral(Int n, Int p) { return make(Family::Quasidihedral, {n, p}); }
FamilySpec extraspecial(Int p) { return make(Family::Extraspecial, {p}); }
FamilySpec general(Int r, Int p, Int n, Int q, Int m) {
  return make(Family::General, {p, n, q, m}, r);
}
FamilySpec gshort(Int n, Int p, Int m) { return make(Family::GShort, {n, p, m}); }
FamilySpec f(Int n, Int p, Int r) {
  return make(Family::F, {n, p}, r == 0 ? default_order3_residue(p) : r);
}
FamilySpec b1(Int n, Int p) { return make(Family::B1, {n, p}); }
FamilySpec b2(Int n, Int p) { return make(Family::B2, {n, p}); }
FamilySpec a(Int n) { return make(Family::A, {n}); }
FamilySpec sym(Int n) { return make(Family::Sym, {n}); }
FamilySpec alt(Int n) { return make(Family::Alt, {n}); }
FamilySpec sl23() { return make(Family::SL23, {}); }
FamilySpec c3_q8() { return make(Family::C3SemidirectQ8, {}); }
FamilySpec x(Int n, Int p) { return make(Family::X, {n, p}); }

FamilySpec product(std::vector<FamilySpec> factors) {
  std::vector<FamilySpec> flat;
  for (auto& f : factors) {
    if (f.family == Family::Product)
      flat.insert(flat.end(), f.factors.begin(), f.factors.end());
    else
      flat.push_back(std::move(f));
  }
  if (flat.size() == 1) return flat.front();
  FamilySpec s = make(Family::Product, {});
  s.factors = std::move(flat);
  return s;
}

}  // namespace family

// ---------------------------------------------------------------------------
// Spec mini-language

namespace {

struct Item {
  std::string key;
  Int value = 0;
  std::size_t position = 0;
};

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  FamilySpec parse() {
    std::vector<FamilySpec> terms{term()};
    while (accept('x')) terms.push_back(term());
    if (skip() != text_.size()) throw ParseError("unexpected character in spec", pos_);
    return family::product(std::move(terms));
  }

 private:
  std::size_t skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", skip());
  }

  Int integer() {
    std::size_t start = skip();
    bool neg = accept('-');
    skip();
    std::size_t digits = pos_;
    Int v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > (kSaturated - 9) / 10) throw ParseError("integer too large", start);
      v = v * 10 + (text_[pos_++] - '0');
    }
    if (pos_ == digits) throw ParseError("expected integer", start);
    return neg ? -v : v;
  }

  std::vector<Item> items() {
    std::vector<Item> out;
    if (accept(')')) return out;
    do {
      Item it;
      it.position = skip();
      if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
          it.key += text_[pos_++];
        expect('=');
      }
      it.value = integer();
      out.push_back(std::move(it));
    } while (accept(',') || accept(';'));
    expect(')');
    return out;
  }

  FamilySpec term() {
    std::size_t at = skip();
    if (pos_ >= text_.size() || !std::isupper(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected family name", at);
    std::string name;
    name += text_[pos_++];
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != 'x')
      name += text_[pos_++];
    std::vector<Item> args;
    if (accept('(')) args = items();
    return make(name, args, at);
  }

  static std::vector<Int> positional(const std::vector<Item>& args, std::size_t count,
                                     const std::string& name, std::size_t at) {
    if (args.size() != count)
      throw ParseError(name + " takes " + std::to_string(count) + " parameter(s)", at);
    std::vector<Int> v;
    for (const auto& a : args) {
      if (!a.key.empty()) throw ParseError("unexpected key '" + a.key + "'", a.position);
      v.push_back(a.value);
    }
    return v;
  }

  FamilySpec make(const std::string& name, const std::vector<Item>& args, std::size_t at) {
    auto one = [&] { return positional(args, 1, name, at)[0]; };
    auto two = [&] { return positional(args, 2, name, at); };
    if (name == "C") return family::cyclic(one());
    if (name == "D") return family::dihedral(one());
    if (name == "Q") return family::quaternion(one());
    if (name == "S") return family::semidihedral(one());
    if (name == "A") return family::a(one());
    if (name == "Sym") return family::sym(one());
    if (name == "Alt") return family::alt(one());
    if (name == "B1") {
      auto v = two();
      return family::b1(v[0], v[1]);
    }
    if (name == "B2") {
      auto v = two();
      return family::b2(v[0], v[1]);
    }
    if (name == "X") {
      auto v = two();
      return family::x(v[0], v[1]);
    }
    if (name == "M") {
      if (args.size() == 1) return family::extraspecial(one());
      auto v = two();
      return family::quasidihedral(v[0], v[1]);
    }
    if (name == "SL23" || name == "SL") {
      if (name == "SL") {
        auto v = two();
        if (v[0] != 2 || v[1] != 3) throw ParseError("only SL(2,3) is supported", at);
      } else if (!args.empty()) {
        throw ParseError("SL23 takes no parameters", at);
      }
      return family::sl23();
    }
    if (name == "C3sQ8") {
      if (!args.empty()) throw ParseError("C3sQ8 takes no parameters", at);
      return family::c3_q8();
    }
    if (name == "F") {
      std::vector<Item> pos;
      Int r = 0;
      for (const auto& a : args) {
        if (a.key == "r")
          r = a.value;
        else
          pos.push_back(a);
      }
      auto v = positional(pos, 2, name, at);
      return family::f(v[0], v[1], r);
    }
    if (name == "G") {
      bool keyed = std::any_of(args.begin(), args.end(), [](const Item& a) { return !a.key.empty(); });
      if (keyed) {
        std::map<std::string, Int> kv;
        for (const auto& a : args) {
          if (a.key.empty()) throw ParseError("mixing keyed and positional parameters", a.position);
          if (!kv.emplace(a.key, a.value).second)
            throw ParseError("duplicate key '" + a.key + "'", a.position);
        }
        for (const char* k : {"r", "p", "n", "q", "m"})
          if (!kv.count(k)) throw ParseError(std::string("G is missing key '") + k + "'", at);
        if (kv.size() != 5) throw ParseError("G has unknown keys", at);
        return family::general(kv["r"], kv["p"], kv["n"], kv["q"], kv["m"]);
      }
      if (args.size() == 3) {
        auto v = positional(args, 3, name, at);
        return family::gshort(v[0], v[1], v[2]);
      }
      auto v = two();
      auto ps = prime_factors(v[1]);
      if (ps.size() != 1) throw ParseError("G(n,q) needs a prime power q", at);
      return family::gshort(v[0], ps[0], valuation(v[1], ps[0]));
    }
    throw ParseError("unknown family '" + name + "'", at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FamilySpec parse_spec(std::string_view text) { return SpecParser(text).parse(); }

std::string to_string(const FamilySpec& s) {
  auto call = [&](const char* name) { return std::string(name) + "(" + join_ints(s.params) + ")"; };
  switch (s.family) {
    case Family::Cyclic: return call("C");
    case Family::Dihedral: return call("D");
    case Family::GeneralizedQuaternion: return call("Q");
    case Family::Semidihedral: return call("S");
    case Family::Quasidihedral: return call("M");
    case Family::Extraspecial: return call("M");
    case Family::General:
      return "G(r=" + std::to_string(s.r) + ";p=" + std::to_string(s.param(0)) +
             ",n=" + std::to_string(s.param(1)) + ";q=" + std::to_string(s.param(2)) +
             ",m=" + std::to_string(s.param(3)) + ")";
    case Family::GShort:
      return "G(" + std::to_string(s.param(0)) + "," +
             std::to_string(pow_sat(s.param(1), s.param(2))) + ")";
    case Family::F: {
      std::string out = "F(" + join_ints(s.params);
      if (s.r != default_order3_residue(s.param(1))) out += ";r=" + std::to_string(s.r);
      return out + ")";
    }
    case Family::B1: return call("B1");
    case Family::B2: return call("B2");
    case Family::A: return call("A");
    case Family::Sym: return call("Sym");
    case Family::Alt: return call("Alt");
    case Family::SL23: return "SL(2,3)";
    case Family::C3SemidirectQ8: return "C3sQ8";
    case Family::X: return call("X");
    case Family::Product: {
      std::string out;
      for (std::size_t i = 0; i < s.factors.size(); ++i) {
        if (i) out += 'x';
        out += to_string(s.factors[i]);
      }
      return out;
    }
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Validation

namespace {

std::optional<int> log2_order(Int order) { return log_prime_power(order, 2); }

std::optional<std::string> check_params(const FamilySpec& s, std::size_t count) {
  if (s.params.size() != count)
    return "expected " + std::to_string(count) + " parameter(s), got " + std::to_string(s.params.size());
  return std::nullopt;
}

}  // namespace

std::optional<std::string> validate(const FamilySpec& s) {
  auto need = [](bool ok, const std::string& msg) -> std::optional<std::string> {
    if (ok) return std::nullopt;
    return msg;
  };
  std::optional<std::string> bad;
  switch (s.family) {
    case Family::Cyclic:
      if ((bad = check_params(s, 1))) return bad;
      return need(s.param(0) >= 1, "C(n) requires n >= 1");
    case Family::Dihedral:
      if ((bad = check_params(s, 1))) return bad;
      return need(s.param(0) >= 2 && s.param(0) % 2 == 0, "D(order) requires an even order >= 2");
    case Family::GeneralizedQuaternion: {
      if ((bad = check_params(s, 1))) return bad;
      auto n = log2_order(s.param(0));
      return need(n && *n >= 3, "Q(2^n) requires an order 2^n with n >= 3");
    }
    case Family::Semidihedral: {
      if ((bad = check_params(s, 1))) return bad;
      auto n = log2_order(s.param(0));
      return need(n && *n >= 4, "S(2^n) requires an order 2^n with n >= 4");
    }
    case Family::Quasidihedral: {
      if ((bad = check_params(s, 2))) return bad;
      Int n = s.param(0), p = s.param(1);
      if (!is_prime(p)) return "M(n,p) requires p prime";
      if (p == 2) return need(n >= 4, "M(n,2) requires n >= 4");
      return need(n >= 3, "M(n,p) requires n >= 3 for odd p");
    }
    case Family::Extraspecial:
      if ((bad = check_params(s, 1))) return bad;
      return need(is_prime(s.param(0)) && s.param(0) > 2, "M(p) requires an odd prime p");
    case Family::General: {
      if ((bad = check_params(s, 4))) return bad;
      Int p = s.param(0), n = s.param(1), q = s.param(2), m = s.param(3);
      if (!is_prime(p)) return "G requires p prime";
      if (!is_prime(q)) return "G requires q prime";
      if (n < 1 || m < 1) return "G requires n >= 1 and m >= 1";
      Int qm = pow_sat(q, m), pn = pow_sat(p, n);
      if (qm == kSaturated || pn == kSaturated) return "G parameters too large";
      return need(powmod(s.r, pn, qm) == mod(1, qm),
                  "G requires r^(p^n) = 1 mod q^m, but " + std::to_string(s.r) + "^" +
                      std::to_string(pn) + " = " + std::to_string(powmod(s.r, pn, qm)) +
                      " mod " + std::to_string(qm));
    }
    case Family::GShort:
      if ((bad = check_params(s, 3))) return bad;
      if (!is_prime(s.param(1))) return "G(n,p^m) requires p prime";
      return need(s.param(0) >= 1 && s.param(2) >= 1, "G(n,p^m) requires n >= 1 and m >= 1");
    case Family::F: {
      if ((bad = check_params(s, 2))) return bad;
      Int n = s.param(0), p = s.param(1);
      if (n < 1) return "F(n,p) requires n >= 1";
      if (!is_prime(p)) return "F(n,p) requires p prime";
      if (p % 3 != 1) return "F(n,p) requires p = 1 mod 3";
      return need(multiplicative_order(s.r, p) == 3,
                  "F(n,p) requires r of multiplicative order 3 mod p");
    }
    case Family::B1:
    case Family::B2:
      if ((bad = check_params(s, 2))) return bad;
      if (!is_prime(s.param(1))) return "B(n,p) requires p prime";
      return need(s.param(0) >= 1, "B(n,p) requires n >= 1");
    case Family::A:
      if ((bad = check_params(s, 1))) return bad;
      return need(s.param(0) >= 1, "A(n) requires n >= 1");
    case Family::Sym:
    case Family::Alt:
      if ((bad = check_params(s, 1))) return bad;
      return need(s.param(0) >= 1 && s.param(0) <= 12, "Sym/Alt(n) requires 1 <= n <= 12");
    case Family::SL23:
    case Family::C3SemidirectQ8:
      return check_params(s, 0);
    case Family::X:
      if ((bad = check_params(s, 2))) return bad;
      if (!is_prime(s.param(1)) || s.param(1) == 2) return "X(n,p) requires an odd prime p";
      return need(s.param(0) >= 1, "X(n,p) requires n >= 1");
    case Family::Product:
      if (s.factors.empty()) return "empty product";
      for (const auto& f : s.factors)
        if (auto d = validate(f)) return to_string(f) + ": " + *d;
      return std::nullopt;
  }
  return "unknown family";
}

Int predicted_order(const FamilySpec& s) {
  switch (s.family) {
    case Family::Cyclic:
    case Family::Dihedral:
    case Family::GeneralizedQuaternion:
    case Family::Semidihedral:
      return s.param(0);
    case Family::Quasidihedral: return pow_sat(s.param(1), s.param(0));
    case Family::Extraspecial: return pow_sat(s.param(0), 3);
    case Family::General:
      return mul_sat(pow_sat(s.param(0), s.param(1)), pow_sat(s.param(2), s.param(3)));
    case Family::GShort: return mul_sat(pow_sat(2, s.param(0)), pow_sat(s.param(1), s.param(2)));
    case Family::F: return mul_sat(pow_sat(3, s.param(0)), s.param(1));
    case Family::B1:
    case Family::B2:
      return pow_sat(s.param(1), s.param(0) + 2);
    case Family::A: return mul_sat(4, pow_sat(3, s.param(0)));
    case Family::Sym:
    case Family::Alt: {
      Int f = 1;
      for (Int i = 2; i <= s.param(0); ++i) f = mul_sat(f, i);
      return s.family == Family::Alt && s.param(0) >= 2 ? f / 2 : f;
    }
    case Family::SL23:
    case Family::C3SemidirectQ8:
      return 24;
    case Family::X: return mul_sat(2 * s.param(1), pow_sat(3, s.param(0)));
    case Family::Product: {
      Int o = 1;
      for (const auto& f : s.factors) o = mul_sat(o, predicted_order(f));
      return o;
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Presentations

std::string to_string(ExpectedKind kind) {
  switch (kind) {
    case ExpectedKind::exact: return "exact";
    case ExpectedKind::lower_bound: return "lower_bound";
    case ExpectedKind::from_formula_under_review: return "from_formula_under_review";
  }
  return "?";
}

namespace {

std::string metacyclic_text(Int top, Int base, Int s) {
  return "a,b | a^" + std::to_string(top) + "=1, b^" + std::to_string(base) +
         "=1, a^-1 b a = b^" + std::to_string(s);
}

}  // namespace

bool has_builtin_presentation(const FamilySpec& s) {
  switch (s.family) {
    case Family::Sym:
    case Family::Alt:
    case Family::SL23:
    case Family::X:
    case Family::Product:
      return false;
    default:
      return true;
  }
}

std::string builtin_presentation_text(const FamilySpec& s) {
  if (auto d = validate(s)) throw ValidationError("invalid spec " + to_string(s) + ": " + *d);
  auto str = [](Int v) { return std::to_string(v); };
  switch (s.family) {
    case Family::Cyclic: return "a | a^" + str(s.param(0));
    case Family::Dihedral: return metacyclic_text(2, s.param(0) / 2, -1);
    case Family::GeneralizedQuaternion:
      return "a,b,z | a^" + str(s.param(0) / 4) + " = b^2 = z, z^2 = 1, b^-1 a b = a^-1";
    case Family::Semidihedral: {
      Int n = *log2_order(s.param(0));
      return metacyclic_text(2, ipow(2, n - 1), -1 + ipow(2, n - 2));
    }
    case Family::Quasidihedral: {
      Int n = s.param(0), p = s.param(1);
      return metacyclic_text(p, ipow(p, n - 1), 1 + ipow(p, n - 2));
    }
    case Family::Extraspecial: {
      const std::string p = str(s.param(0));
      return "x,y,z | x^" + p + " = y^" + p + " = z^" + p + " = 1, [x,z] = [y,z] = 1, [x,y] = z";
    }
    case Family::General:
      return metacyclic_text(ipow(s.param(0), s.param(1)), ipow(s.param(2), s.param(3)), s.r);
    case Family::GShort:
      return metacyclic_text(ipow(2, s.param(0)), ipow(s.param(1), s.param(2)), -1);
    case Family::F: return metacyclic_text(ipow(3, s.param(0)), s.param(1), s.r);
    case Family::B2: {
      Int n = s.param(0), p = s.param(1);
      return metacyclic_text(ipow(p, n), p * p, p + 1);
    }
    case Family::B1: {
      Int n = s.param(0), p = s.param(1);
      return "a,b,c | [a,b] = c, a^" + str(p) + " = b^" + str(ipow(p, n)) + " = c^" + str(p) +
             " = 1, [a,c] = [b,c] = 1";
    }
    case Family::A:
      return "a,b,c | a^" + str(ipow(3, s.param(0))) + "=1, b^2=1, bc=cb, b^a=c, c^a=bc";
    case Family::C3SemidirectQ8:
      return "x,y,b | x^4 = y^4 = b^3 = [y,b] = 1, x^2 = y^2, [x,y] = x^2, b^x = b^-1";
    default:
      throw ValidationError("no presentation for " + to_string(s));
  }
}

Presentation builtin_presentation(const FamilySpec& s) {
  return parse_presentation(builtin_presentation_text(s));
}

// ---------------------------------------------------------------------------
// Construction

namespace {

// C_base x| C_top with a^-1 b a = b^s, a generating C_top and b generating C_base.
Group metacyclic(Int top, Int base, Int s, std::size_t cap) {
  Group n = cyclic_group(static_cast<std::size_t>(base));
  Group k = cyclic_group(static_cast<std::size_t>(top));
  // a^-1 b a = act(a^-1)(b), so a itself acts as b -> b^(s^-1).
  auto s_inv = inverse_mod(s, base);
  if (!s_inv) throw ValidationError("twisting residue is not a unit");
  Permutation act(static_cast<std::size_t>(base));
  for (Int i = 0; i < base; ++i) act[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(mod(i * *s_inv, base));
  std::vector<Permutation> action;
  if (!k.generators().empty()) action.push_back(std::move(act));
  return semidirect_product(n, k, action, cap);
}

Group from_presentation(const FamilySpec& s, std::size_t cap) {
  auto e = coset_enumerate(builtin_presentation(s), kDefaultMaxCosets, cap);
  if (!e.complete()) throw SizeLimitError("coset enumeration capped for " + to_string(s));
  if (static_cast<Int>(e.order) != predicted_order(s))
    throw ValidationError("presentation of " + to_string(s) + " has order " + std::to_string(e.order));
  return std::move(*e.group);
}

Group symmetric(Int n) {
  if (n <= 1) return Group{};
  const auto deg = static_cast<std::size_t>(n);
  Permutation cycle(deg), transposition(deg);
  for (std::size_t i = 0; i < deg; ++i) {
    cycle[i] = static_cast<std::uint32_t>((i + 1) % deg);
    transposition[i] = static_cast<std::uint32_t>(i);
  }
  std::swap(transposition[0], transposition[1]);
  std::vector<Permutation> gens{cycle, transposition};
  return group_from_generators(deg, gens);
}

Group alternating(Int n) {
  if (n <= 2) return Group{};
  const auto deg = static_cast<std::size_t>(n);
  std::vector<Permutation> gens;
  for (std::size_t i = 2; i < deg; ++i) {
    Permutation p(deg);
    for (std::size_t j = 0; j < deg; ++j) p[j] = static_cast<std::uint32_t>(j);
    p[0] = 1;
    p[1] = static_cast<std::uint32_t>(i);
    p[i] = 0;
    gens.push_back(std::move(p));
  }
  return group_from_generators(deg, gens);
}

// The 24 matrices of determinant 1 over the field with 3 elements.
Group special_linear_2_3() {
  using Mat = std::array<int, 4>;  // row-major a b / c d
  std::vector<Mat> mats;
  for (int v = 0; v < 81; ++v) {
    Mat m{v % 3, v / 3 % 3, v / 9 % 3, v / 27 % 3};
    if (mod(m[0] * m[3] - m[1] * m[2], 3) == 1) mats.push_back(m);
  }
  auto index = [&](const Mat& m) {
    return static_cast<Element>(std::find(mats.begin(), mats.end(), m) - mats.begin());
  };
  auto times = [](const Mat& x, const Mat& y) {
    return Mat{static_cast<int>(mod(x[0] * y[0] + x[1] * y[2], 3)),
               static_cast<int>(mod(x[0] * y[1] + x[1] * y[3], 3)),
               static_cast<int>(mod(x[2] * y[0] + x[3] * y[2], 3)),
               static_cast<int>(mod(x[2] * y[1] + x[3] * y[3], 3))};
  };
  const std::size_t n = mats.size();
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = index(times(mats[i], mats[j]));
  const Element gens[] = {index({1, 1, 0, 1}), index({0, 2, 1, 0})};
  return Group::from_table(n, table, index({1, 0, 0, 1}), gens);
}

Group c3_semidirect_q8(std::size_t cap) {
  Group q8 = from_presentation(family::quaternion(8), cap);
  Group c3 = cyclic_group(3);
  const Permutation id{0, 1, 2}, inversion{0, 2, 1};
  // Q8 is generated by a, b, z = b^2 in that order; b inverts C3.
  std::vector<Permutation> action{id, inversion, id};
  return semidirect_product(c3, q8, action, cap);
}

Group extended_klein(Int n, std::size_t cap) {
  Group v = direct_product(cyclic_group(2), cyclic_group(2));
  const Element b = v.generators()[0], c = v.generators()[1];
  // a^-1 b a = c and a^-1 c a = bc, so a acts by b -> bc, c -> b.
  const Element images[] = {v.mul(b, c), b};
  auto phi = extend_homomorphism(v, v, images);
  if (!phi) throw ValidationError("bad A(n) action");
  std::vector<Permutation> action{phi->images};
  return semidirect_product(v, cyclic_group(static_cast<std::size_t>(ipow(3, n))), action, cap);
}

Group build_unlabeled(const FamilySpec& s, std::size_t cap) {
  switch (s.family) {
    case Family::Cyclic: return cyclic_group(static_cast<std::size_t>(s.param(0)));
    case Family::Dihedral: return metacyclic(2, s.param(0) / 2, -1, cap);
    case Family::GeneralizedQuaternion:
    case Family::Extraspecial:
    case Family::B1:
      return from_presentation(s, cap);
    case Family::Semidihedral: {
      Int n = *log2_order(s.param(0));
      return metacyclic(2, ipow(2, n - 1), -1 + ipow(2, n - 2), cap);
    }
    case Family::Quasidihedral: {
      Int n = s.param(0), p = s.param(1);
      return metacyclic(p, ipow(p, n - 1), 1 + ipow(p, n - 2), cap);
    }
    case Family::General:
      return metacyclic(ipow(s.param(0), s.param(1)), ipow(s.param(2), s.param(3)), s.r, cap);
    case Family::GShort: return metacyclic(ipow(2, s.param(0)), ipow(s.param(1), s.param(2)), -1, cap);
    case Family::F: return metacyclic(ipow(3, s.param(0)), s.param(1), s.r, cap);
    case Family::B2: {
      Int n = s.param(0), p = s.param(1);
      return metacyclic(ipow(p, n), p * p, p + 1, cap);
    }
    case Family::A: return extended_klein(s.param(0), cap);
    case Family::Sym: return symmetric(s.param(0));
    case Family::Alt: return alternating(s.param(0));
    case Family::SL23: return special_linear_2_3();
    case Family::C3SemidirectQ8: return c3_semidirect_q8(cap);
    case Family::X: {
      std::vector<FamilySpec> factors{family::dihedral(2 * s.param(1))};
      for (Int i = 0; i < s.param(0); ++i) factors.push_back(family::cyclic(3));
      return build_unlabeled(family::product(std::move(factors)), cap);
    }
    case Family::Product: {
      Group g = build_unlabeled(s.factors.front(), cap);
      for (std::size_t i = 1; i < s.factors.size(); ++i)
        g = direct_product(g, build_unlabeled(s.factors[i], cap), cap);
      return g;
    }
  }
  throw ValidationError("unknown family");
}

}  // namespace

Group build(const FamilySpec& spec, std::size_t cap) {
  if (auto d = validate(spec)) throw ValidationError("invalid spec " + to_string(spec) + ": " + *d);
  const Int order = predicted_order(spec);
  if (order > static_cast<Int>(cap))
    throw SizeLimitError(to_string(spec) + " has order " + std::to_string(order) + " above cap " +
                         std::to_string(cap));
  Group g = build_unlabeled(spec, cap);
  if (static_cast<Int>(g.order()) != order)
    throw ValidationError("construction of " + to_string(spec) + " produced order " +
                          std::to_string(g.order()));
  return g.relabeled(to_string(spec));
}

// ---------------------------------------------------------------------------
// Expected counts

std::string ExpectedNps::value_text() const {
  if (denominator == 1) return std::to_string(value);
  return std::to_string(value) + "/" + std::to_string(denominator);
}

Int elementary_abelian_subgroup_count(Int p, Int d) {
  Int total = 0;
  for (Int k = 0; k <= d; ++k) {
    Int num = 1, den = 1;
    for (Int i = 0; i < k; ++i) {
      num *= ipow(p, d - i) - 1;
      den *= ipow(p, k - i) - 1;
    }
    total += num / den;
  }
  return total;
}

ExpectedNps rank_two_abelian_formula(Int p, Int n1, Int n2) {
  if (n1 > n2) std::swap(n1, n2);
  const Int num = (n2 - n1 + 1) * ipow(p, n1 + 2) - (n2 - n1 - 1) * ipow(p, n1 + 1) -
                  (n2 + 1) * p * p + (n2 - n1 + 1) * p + n2;
  Int den = (p - 1) * (p - 1);
  const Int g = std::gcd(num, den);
  ExpectedNps e;
  e.kind = ExpectedKind::from_formula_under_review;
  e.value = num / g;
  e.denominator = den / g;
  e.source = "printed closed form for nps(C_p^n1 x C_p^n2)";
  return e;
}

namespace {

ExpectedNps exact(Int v, std::string source) {
  return {ExpectedKind::exact, v, 1, std::move(source)};
}

// (n, p, m) if the spec is G_{n,p^m} = G^(-1)_{2,n;p,m} with p odd.
std::optional<std::tuple<Int, Int, Int>> as_gshort(const FamilySpec& s) {
  switch (s.family) {
    case Family::GShort:
      if (s.param(1) > 2) return std::tuple{s.param(0), s.param(1), s.param(2)};
      return std::nullopt;
    case Family::Dihedral: {
      Int half = s.param(0) / 2;
      auto ps = prime_factors(half);
      if (ps.size() == 1 && ps[0] > 2) return std::tuple{Int{1}, ps[0], Int{valuation(half, ps[0])}};
      return std::nullopt;
    }
    case Family::Sym:
      if (s.param(0) == 3) return std::tuple{Int{1}, Int{3}, Int{1}};
      return std::nullopt;
    case Family::General: {
      Int p = s.param(0), q = s.param(2), qm = ipow(q, s.param(3));
      if (p == 2 && q > 2 && mod(s.r, qm) == qm - 1) return std::tuple{s.param(1), q, s.param(3)};
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

std::optional<ExpectedNps> abelian_expected(const std::vector<Int>& orders) {
  std::map<Int, std::vector<Int>> components;
  for (Int o : orders)
    for (Int p : prime_factors(o)) components[p].push_back(valuation(o, p));
  Int rest = 1;
  std::optional<std::tuple<Int, Int, Int>> rank_two;
  for (auto& [p, exps] : components) {
    if (exps.size() == 1) {
      rest *= ipow(p, exps[0]);
    } else if (exps.size() == 2 && !rank_two) {
      rank_two = std::tuple{p, exps[0], exps[1]};
    } else {
      return std::nullopt;
    }
  }
  if (!rank_two) return exact(0, "nps = 0 exactly for cyclic groups");
  auto [p, a, b] = *rank_two;
  ExpectedNps e = rank_two_abelian_formula(p, a, b);
  e.value *= divisor_count(rest);
  if (rest > 1) e.source += ", times d(c) for a coprime cyclic factor C_c";
  const Int g = std::gcd(e.value, e.denominator);
  e.value /= g;
  e.denominator /= g;
  return e;
}

ExpectedNps x_expected(Int n, Int p) {
  if (p > 3)
    return exact((p + 3) * elementary_abelian_subgroup_count(3, n) - 6,
                 "nps(D_2p x C3^n) = (p+3) s(C3^n) - 6");
  if (n == 1) return exact(10, "nps(D_6 x C3) = 10");
  if (n == 2) return exact(48, "nps(D_6 x C3^2) = 48");
  return {ExpectedKind::lower_bound, 49, 1, "nps(D_6 x C3^n) > 48 for n > 2"};
}

std::optional<ExpectedNps> product_expected(const FamilySpec& s) {
  std::vector<FamilySpec> core;
  std::vector<Int> cyclic_orders;
  for (const auto& f : s.factors) {
    if (f.family == Family::Cyclic)
      cyclic_orders.push_back(f.param(0));
    else
      core.push_back(f);
  }
  if (core.empty()) return abelian_expected(cyclic_orders);
  if (core.size() != 1 || cyclic_orders.empty()) return std::nullopt;

  const FamilySpec& c = core.front();
  const auto copies = static_cast<Int>(cyclic_orders.size());
  auto all_equal = [&](Int v) {
    return std::all_of(cyclic_orders.begin(), cyclic_orders.end(), [&](Int o) { return o == v; });
  };
  // Equality holds for a single cyclic factor and fails strictly beyond it.
  auto bound = [&](Int v, const std::string& group, const std::string& form) {
    if (copies == 1) return exact(v, "nps(" + group + ") = " + form);
    return ExpectedNps{ExpectedKind::lower_bound, v + 1, 1,
                       "nps(" + group + "^n) > " + form + " for n > 1"};
  };

  if (all_equal(2) && c.family == Family::GeneralizedQuaternion && c.param(0) == 8)
    return bound(16, "Q8 x C2", "16");
  if (auto gs = as_gshort(c)) {
    auto [m, p, e] = *gs;
    if (m == 1 && e == 1 && all_equal(3)) return x_expected(copies, p);
    if (p == 3 && e == 1 && all_equal(3)) return bound(4 * m + 6, "G_{m,3} x C3", "4m+6");
    if (m == 1 && e == 1 && all_equal(2)) return bound(3 * p + 4, "D_2p x C2", "3p+4");
  }

  Int c_order = 1;
  for (Int o : cyclic_orders) c_order *= o;
  if (std::gcd(predicted_order(c), c_order) != 1) return std::nullopt;
  auto base = expected_nps(c);
  if (!base || base->kind == ExpectedKind::lower_bound) return std::nullopt;
  base->value *= divisor_count(c_order);
  const Int g = std::gcd(base->value, base->denominator);
  base->value /= g;
  base->denominator /= g;
  base->source += "; coprime cyclic factor C_c multiplies by d(c)";
  return base;
}

}  // namespace

std::optional<ExpectedNps> expected_nps(const FamilySpec& s) {
  if (validate(s)) return std::nullopt;
  if (auto gs = as_gshort(s)) {
    auto [n, p, m] = *gs;
    return exact(p * (ipow(p, m) - 1) / (p - 1), "nps(G_{n,p^m}) = p(p^m-1)/(p-1)");
  }
  switch (s.family) {
    case Family::Cyclic: return exact(0, "nps = 0 exactly for cyclic groups");
    case Family::Dihedral: {
      Int order = s.param(0);
      if (auto n = log2_order(order); n && *n >= 3) return exact(order - 1, "nps(D_2^n) = 2^n - 1");
      if (order == 2) return exact(0, "nps = 0 exactly for cyclic groups");
      if (order == 4) return exact(3, "nps(C2 x C2) = 3");
      if (order % 4 == 0 && is_prime(order / 4) && order / 4 > 2)
        return exact(3 * (order / 4) + 4, "nps(D_2p x C2) = 3p+4");
      return std::nullopt;
    }
    case Family::GeneralizedQuaternion:
      return exact(s.param(0) / 2 - 1, "nps(Q_2^n) = 2^(n-1) - 1");
    case Family::Semidihedral: return exact(3 * (s.param(0) / 4) - 1, "nps(S_2^n) = 3*2^(n-2) - 1");
    case Family::Quasidihedral:
      return exact(s.param(1) * (s.param(0) - 1) + 1, "nps(M_{n,p}) = p(n-1) + 1");
    case Family::Extraspecial: {
      Int p = s.param(0);
      return exact(p * p + 2 * p + 2, "nps(M(p)) = p^2 + 2p + 2");
    }
    case Family::General: {
      Int p = s.param(0), n = s.param(1), q = s.param(2), m = s.param(3);
      Int qm = ipow(q, m);
      const bool abelian = mod(s.r, qm) == 1;
      if (p != q) {
        if (abelian) return exact(0, "nps = 0 exactly for cyclic groups");
        Int k = *log_prime_power(*multiplicative_order(s.r, qm), p);
        return exact(k * q * (qm - 1) / (q - 1), "nps(G^(r)_{p,n;q,m}) = k q (q^m-1)/(q-1)");
      }
      if (p == 2 && !abelian) return std::nullopt;
      ExpectedNps e = rank_two_abelian_formula(p, n, m);
      if (!abelian) e.source += " (nonabelian G^(r)_{p,n;p,m} has the same count for odd p)";
      return e;
    }
    case Family::F: return exact(s.param(1), "nps(F_{n,p}) = p");
    case Family::B1: {
      Int n = s.param(0), p = s.param(1);
      if (n >= 2) return exact(p * p * (2 * n - 1) + p * (n + 1) + 2, "nps(B1_{n,p}) = p^2(2n-1) + p(n+1) + 2");
      if (p == 2) return exact(7, "B1_{1,2} = D_8, nps = 7");
      return exact(p * p + 2 * p + 2, "B1_{1,p} = M(p), nps = p^2 + 2p + 2");
    }
    case Family::B2: {
      Int n = s.param(0), p = s.param(1);
      if (n >= 2) return exact(p * p * (n - 1) + p * (n + 1) + 2, "nps(B2_{n,p}) = p^2(n-1) + p(n+1) + 2");
      if (p == 2) return exact(7, "B2_{1,2} = D_8, nps = 7");
      return exact(2 * p + 1, "B2_{1,p} = M_{3,p}, nps = 2p + 1");
    }
    case Family::A: return exact(3 * s.param(0) + 4, "nps(A_n) = 3n + 4");
    case Family::Sym:
      if (s.param(0) <= 2) return exact(0, "nps = 0 exactly for cyclic groups");
      if (s.param(0) == 4) return exact(26, "nps(Sym(4)) = 26");
      return std::nullopt;
    case Family::Alt:
      if (s.param(0) <= 3) return exact(0, "nps = 0 exactly for cyclic groups");
      if (s.param(0) == 4) return exact(7, "nps(Alt(4)) = 7");
      return std::nullopt;
    case Family::SL23: return exact(11, "nps(SL(2,3)) = 11");
    case Family::C3SemidirectQ8: return exact(13, "nps(C3 x| Q8) = 13");
    case Family::X: return x_expected(s.param(0), s.param(1));
    case Family::Product: return product_expected(s);
    case Family::GShort: return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace nps
