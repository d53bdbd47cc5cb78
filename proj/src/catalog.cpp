#include "nps/catalog.hpp"

#include <algorithm>

#include "nps/error.hpp"

namespace nps {

namespace {

constexpr Int kPrimeSearchBound = 100;

using Primes = std::span<const Int>;
using family::cyclic;
using family::product;

FamilySpec prod(std::initializer_list<FamilySpec> factors) { return product(factors); }

BucketTemplate fixed(FamilySpec spec) {
  BucketTemplate t;
  t.text = to_string(spec);
  t.make = [spec](Int, Primes) { return spec; };
  return t;
}

BucketTemplate with_n(std::string text, Int n_min, std::function<FamilySpec(Int)> make) {
  BucketTemplate t;
  t.text = std::move(text);
  t.n_min = n_min;
  t.make = [make = std::move(make)](Int n, Primes) { return make(n); };
  return t;
}

BucketTemplate with_primes(std::string text, std::vector<std::string> names, std::string condition,
                           std::function<bool(Primes)> ok, std::function<FamilySpec(Int, Primes)> make,
                           Int n_min = 0) {
  BucketTemplate t;
  t.text = std::move(text);
  t.n_min = n_min;
  t.primes = std::move(names);
  t.condition = std::move(condition);
  t.primes_ok = std::move(ok);
  t.make = std::move(make);
  return t;
}

FamilySpec c2xc2() { return prod({cyclic(2), cyclic(2)}); }
FamilySpec q8() { return family::quaternion(8); }

std::vector<BucketTemplate> bucket(int k) {
  using family::gshort;
  std::vector<BucketTemplate> out;
  auto gn = [](Int p, Int m = 1) { return [p, m](Int n) { return gshort(n, p, m); }; };
  switch (k) {
    case 0: {
      auto t = with_n("C(n)", 1, [](Int n) { return cyclic(n); });
      t.n_scale = 4;
      out.push_back(std::move(t));
      break;
    }
    case 1:
    case 2:
      break;
    case 3:
      out.push_back(fixed(c2xc2()));
      out.push_back(fixed(q8()));
      out.push_back(with_n("G(n,3)", 1, gn(3)));
      break;
    case 4:
      out.push_back(fixed(prod({cyclic(3), cyclic(3)})));
      break;
    case 5:
      out.push_back(fixed(prod({cyclic(2), cyclic(4)})));
      out.push_back(with_n("G(n,5)", 1, gn(5)));
      break;
    case 6:
      out.push_back(fixed(prod({cyclic(5), cyclic(5)})));
      out.push_back(with_primes("C(2)xC(2)xC(p)", {"p"}, "p > 2",
                                [](Primes p) { return p[0] > 2; },
                                [](Int, Primes p) { return prod({c2xc2(), cyclic(p[0])}); }));
      out.push_back(with_primes("Q(8)xC(p)", {"p"}, "p > 2", [](Primes p) { return p[0] > 2; },
                                [](Int, Primes p) { return prod({q8(), cyclic(p[0])}); }));
      out.push_back(with_primes("G(n,3)xC(q)", {"q"}, "q > 3", [](Primes p) { return p[0] > 3; },
                                [](Int n, Primes p) { return prod({gshort(n, 3), cyclic(p[0])}); }, 1));
      break;
    case 7:
      out.push_back(fixed(family::dihedral(8)));
      out.push_back(fixed(family::alt(4)));
      out.push_back(fixed(prod({cyclic(2), cyclic(8)})));
      out.push_back(fixed(family::quaternion(16)));
      out.push_back(fixed(family::quasidihedral(4, 2)));
      out.push_back(fixed(prod({cyclic(3), cyclic(9)})));
      out.push_back(fixed(family::quasidihedral(3, 3)));
      out.push_back(with_n("G(n,7)", 1, gn(7)));
      out.push_back(with_n("F(n,7)", 1, [](Int n) { return family::f(n, 7); }));
      break;
    case 8:
      out.push_back(fixed(prod({cyclic(7), cyclic(7)})));
      out.push_back(with_primes("C(3)xC(3)xC(p)", {"p"}, "p != 3", [](Primes p) { return p[0] != 3; },
                                [](Int, Primes p) { return prod({cyclic(3), cyclic(3), cyclic(p[0])}); }));
      break;
    case 9:
      out.push_back(fixed(prod({cyclic(2), cyclic(16)})));
      out.push_back(fixed(family::quasidihedral(5, 2)));
      out.push_back(with_primes("C(2)xC(2)xC(p^2)", {"p"}, "p > 2", [](Primes p) { return p[0] > 2; },
                                [](Int, Primes p) { return prod({c2xc2(), cyclic(p[0] * p[0])}); }));
      out.push_back(with_primes("Q(8)xC(p^2)", {"p"}, "p > 2", [](Primes p) { return p[0] > 2; },
                                [](Int, Primes p) { return prod({q8(), cyclic(p[0] * p[0])}); }));
      out.push_back(with_primes("G(n,3)xC(q^2)", {"q"}, "q > 3", [](Primes p) { return p[0] > 3; },
                                [](Int n, Primes p) {
                                  return prod({gshort(n, 3), cyclic(p[0] * p[0])});
                                },
                                1));
      break;
    case 10:
      out.push_back(fixed(prod({cyclic(3), cyclic(27)})));
      out.push_back(with_primes("C(2)xC(4)xC(p)", {"p"}, "p != 2", [](Primes p) { return p[0] != 2; },
                                [](Int, Primes p) { return prod({cyclic(2), cyclic(4), cyclic(p[0])}); }));
      out.push_back(fixed(family::quasidihedral(4, 3)));
      out.push_back(fixed(prod({family::sym(3), cyclic(3)})));
      out.push_back(fixed(family::a(2)));
      out.push_back(with_n("G(r=2;p=2,n;q=5,m=1)", 2, [](Int n) { return family::general(2, 2, n, 5, 1); }));
      out.push_back(with_primes("G(n,5)xC(q)", {"q"}, "q != 2, 5",
                                [](Primes p) { return p[0] != 2 && p[0] != 5; },
                                [](Int n, Primes p) { return prod({gshort(n, 5), cyclic(p[0])}); }, 1));
      break;
    case 11:
      out.push_back(fixed(prod({cyclic(2), cyclic(32)})));
      out.push_back(fixed(prod({cyclic(5), cyclic(25)})));
      out.push_back(fixed(family::semidihedral(16)));
      out.push_back(fixed(family::quasidihedral(6, 2)));
      out.push_back(fixed(family::quasidihedral(3, 5)));
      out.push_back(fixed(family::sl23()));
      out.push_back(with_n("G(n,11)", 1, gn(11)));
      out.push_back(with_n("G(r=3;p=5,n;q=11,m=1)", 1, [](Int n) { return family::general(3, 5, n, 11, 1); }));
      break;
    case 12: {
      auto qr_ok = [](Primes p) { return 3 < p[0] && p[0] < p[1]; };
      out.push_back(fixed(prod({cyclic(4), cyclic(4)})));
      out.push_back(fixed(prod({cyclic(11), cyclic(11)})));
      out.push_back(with_primes("Q(8)xC(qr)", {"q", "r"}, "3 < q < r", qr_ok,
                                [](Int, Primes p) { return prod({q8(), cyclic(p[0] * p[1])}); }));
      out.push_back(with_primes("C(2)xC(2)xC(qr)", {"q", "r"}, "3 < q < r", qr_ok,
                                [](Int, Primes p) { return prod({c2xc2(), cyclic(p[0] * p[1])}); }));
      out.push_back(with_primes("C(3)xC(3)xC(s^2)", {"s"}, "s != 3", [](Primes p) { return p[0] != 3; },
                                [](Int, Primes p) {
                                  return prod({cyclic(3), cyclic(3), cyclic(p[0] * p[0])});
                                }));
      out.push_back(with_primes("C(5)xC(5)xC(p)", {"p"}, "p != 5", [](Primes p) { return p[0] != 5; },
                                [](Int, Primes p) { return prod({cyclic(5), cyclic(5), cyclic(p[0])}); }));
      out.push_back(fixed(family::b2(2, 2)));
      out.push_back(with_n("G(n,9)", 1, gn(3, 2)));
      out.push_back(with_primes("G(n,3)xC(qr)", {"q", "r"}, "3 < q < r", qr_ok,
                                [](Int n, Primes p) {
                                  return prod({gshort(n, 3), cyclic(p[0] * p[1])});
                                },
                                1));
      break;
    }
    case 13:
      out.push_back(fixed(prod({cyclic(2), cyclic(64)})));
      out.push_back(fixed(prod({cyclic(3), cyclic(81)})));
      out.push_back(fixed(family::quasidihedral(7, 2)));
      out.push_back(fixed(family::quasidihedral(5, 3)));
      out.push_back(fixed(family::dihedral(12)));
      out.push_back(fixed(family::c3_q8()));
      out.push_back(fixed(family::a(3)));
      out.push_back(with_n("G(n,13)", 1, gn(13)));
      out.push_back(with_n("F(n,13)", 1, [](Int n) { return family::f(n, 13); }));
      break;
    default:
      throw ValidationError("classification covers 0 <= k <= 13, got " + std::to_string(k));
  }
  return out;
}

// Calls visit on every tuple of `slots` values drawn from `pool`, in
// lexicographic order, until it returns true.
bool for_each_tuple(const std::vector<Int>& pool, std::size_t slots,
                    const std::function<bool(const std::vector<Int>&)>& visit) {
  std::vector<Int> tuple;
  std::function<bool()> rec = [&]() -> bool {
    if (tuple.size() == slots) return visit(tuple);
    for (Int p : pool) {
      tuple.push_back(p);
      if (rec()) return true;
      tuple.pop_back();
    }
    return false;
  };
  return rec();
}

std::vector<Int> primes_below(Int bound) {
  std::vector<Int> out;
  for (Int p = 2; p < bound; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

}  // namespace

std::optional<std::vector<Int>> BucketTemplate::minimal_primes() const {
  if (primes.empty()) return std::vector<Int>{};
  std::optional<std::vector<Int>> found;
  for_each_tuple(primes_below(kPrimeSearchBound), primes.size(), [&](const std::vector<Int>& t) {
    if (!primes_ok(t)) return false;
    found = t;
    return true;
  });
  return found;
}

FamilySpec BucketTemplate::minimal() const {
  auto ps = minimal_primes();
  if (!ps) throw ValidationError("no admissible primes for " + text);
  return make(n_min, *ps);
}

std::vector<FamilySpec> BucketTemplate::instances(Int max_n, std::size_t cap) const {
  auto ps = minimal_primes();
  if (!ps) return {};
  std::vector<FamilySpec> out;
  if (!has_n()) {
    FamilySpec s = make(0, *ps);
    if (predicted_order(s) <= static_cast<Int>(cap)) out.push_back(std::move(s));
    return out;
  }
  const Int last = std::max(n_min, n_scale * max_n);
  for (Int n = n_min; n <= last; ++n) {
    FamilySpec s = make(n, *ps);
    if (predicted_order(s) > static_cast<Int>(cap)) break;
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<FamilySpec> BucketTemplate::instances_of_order(Int order) const {
  std::vector<FamilySpec> out;
  auto consider = [&](Int n, std::span<const Int> ps) {
    FamilySpec s = make(n, ps);
    if (validate(s)) return false;
    Int o = predicted_order(s);
    if (o == order && std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
    return o > order;
  };
  auto sweep_n = [&](std::span<const Int> ps) {
    if (!has_n()) {
      consider(0, ps);
      return;
    }
    for (Int n = n_min; n <= order; ++n)
      if (consider(n, ps)) break;
  };
  if (primes.empty()) {
    sweep_n({});
  } else {
    for_each_tuple(prime_factors(order), primes.size(), [&](const std::vector<Int>& t) {
      if (primes_ok(t)) sweep_n(t);
      return false;
    });
  }
  return out;
}

std::vector<BucketTemplate> theorem_catalog(int k) { return bucket(k); }

}  // namespace nps
