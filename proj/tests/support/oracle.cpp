#include "oracle.hpp"

#include <functional>
#include <numeric>

namespace oracle {

Members closure(const Group& g, const std::vector<Element>& gens) {
  const std::size_t n = g.order();
  Members in(n, false);
  std::vector<Element> list{Group::identity};
  in[Group::identity] = true;
  for (Element x : gens)
    if (!in[x]) {
      in[x] = true;
      list.push_back(x);
    }
  // In a finite group closure under products is closure under inverses.
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (Element z : {g.mul(list[i], list[j]), g.mul(list[j], list[i])})
        if (!in[z]) {
          in[z] = true;
          list.push_back(z);
        }
  return in;
}

std::uint64_t order_of(const Group& g, Element x) {
  std::uint64_t k = 1;
  for (Element y = x; y != Group::identity; y = g.mul(y, x)) ++k;
  return k;
}

std::uint64_t exponent(const Group& g) {
  std::uint64_t e = 1;
  for (std::size_t x = 0; x < g.order(); ++x) e = std::lcm(e, order_of(g, static_cast<Element>(x)));
  return e;
}

Element power(const Group& g, Element x, std::uint64_t m) {
  Element y = Group::identity;
  for (std::uint64_t i = 0; i < m; ++i) y = g.mul(y, x);
  return y;
}

std::set<Members> subgroups_by_subsets(const Group& g) {
  const std::size_t n = g.order();
  std::set<Members> out;
  const std::uint64_t subsets = std::uint64_t{1} << (n - 1);
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    Members in(n, false);
    in[0] = true;
    for (std::size_t i = 1; i < n; ++i) in[i] = (mask >> (i - 1)) & 1;
    bool closed = true;
    for (std::size_t x = 0; x < n && closed; ++x) {
      if (!in[x]) continue;
      for (std::size_t y = 0; y < n; ++y)
        if (in[y] && !in[g.mul(static_cast<Element>(x), static_cast<Element>(y))]) {
          closed = false;
          break;
        }
    }
    if (closed) out.insert(in);
  }
  return out;
}

std::set<Members> subgroups_by_triples(const Group& g) {
  const auto n = static_cast<Element>(g.order());
  std::set<Members> two;
  for (Element x = 0; x < n; ++x)
    for (Element y = x; y < n; ++y) two.insert(closure(g, {x, y}));
  std::set<Members> out = two;
  for (const auto& h : two) {
    std::vector<Element> base;
    for (Element x = 0; x < n; ++x)
      if (h[x]) base.push_back(x);
    for (Element z = 0; z < n; ++z) {
      if (h[z]) continue;
      auto gens = base;
      gens.push_back(z);
      out.insert(closure(g, gens));
    }
  }
  return out;
}

Members power_subgroup(const Group& g, std::uint64_t m) {
  std::vector<Element> gens;
  for (std::size_t x = 0; x < g.order(); ++x) gens.push_back(power(g, static_cast<Element>(x), m));
  return closure(g, gens);
}

Counts counts(const Group& g, const std::set<Members>& subgroups) {
  std::set<Members> powers;
  const std::uint64_t e = oracle::exponent(g);
  for (std::uint64_t m = 1; m <= e; ++m) powers.insert(power_subgroup(g, m));
  Counts c;
  c.s = subgroups.size();
  c.ps = powers.size();
  c.nps = c.s - c.ps;
  return c;
}

namespace {

Group from_rule(std::size_t n, const std::function<Element(Element, Element)>& rule,
                std::vector<Element> gens) {
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      table[x * n + y] = rule(static_cast<Element>(x), static_cast<Element>(y));
  return Group::from_table(n, table, 0, gens);
}

std::int64_t md(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

}  // namespace

Group quaternion(std::uint64_t order) {
  // a^i b^j with a of order 2h, b^2 = a^h, b a = a^-1 b.
  const auto two_h = static_cast<std::int64_t>(order / 2), h = two_h / 2;
  auto idx = [two_h](std::int64_t i, std::int64_t j) { return static_cast<Element>(j * two_h + md(i, two_h)); };
  return from_rule(
      order,
      [=](Element x, Element y) {
        std::int64_t i1 = x % two_h, j1 = x / two_h, i2 = y % two_h, j2 = y / two_h;
        // a^i1 b^j1 a^i2 b^j2 = a^(i1 + (-1)^j1 i2) b^(j1 + j2)
        std::int64_t i = i1 + (j1 ? -i2 : i2);
        std::int64_t j = j1 + j2;
        if (j == 2) {
          j = 0;
          i += h;
        }
        return idx(i, j);
      },
      {idx(1, 0), idx(0, 1)});
}

Group dihedral(std::uint64_t order) { return metacyclic(order / 2, 2, -1); }

Group cyclic(std::uint64_t n) {
  return from_rule(n, [n](Element x, Element y) { return static_cast<Element>((x + y) % n); }, {n > 1 ? 1u : 0u});
}

Group metacyclic(std::uint64_t q, std::uint64_t p, std::int64_t s) {
  // Normal form b^i a^j, with a^j b^i a^-j = b^(i t^j) for t = s^-1 mod q.
  const auto Q = static_cast<std::int64_t>(q), P = static_cast<std::int64_t>(p);
  std::int64_t t = 1;
  for (std::int64_t c = 1; c < Q; ++c)
    if (md(c * s, Q) == 1 % Q) {
      t = c;
      break;
    }
  auto idx = [Q](std::int64_t i, std::int64_t j) { return static_cast<Element>(j * Q + i); };
  return from_rule(
      q * p,
      [=](Element x, Element y) {
        std::int64_t i1 = x % Q, j1 = x / Q, i2 = y % Q, j2 = y / Q;
        std::int64_t twist = 1;
        for (std::int64_t k = 0; k < j1; ++k) twist = md(twist * t, Q);
        return idx(md(i1 + i2 * twist, Q), (j1 + j2) % P);
      },
      {idx(Q > 1 ? 1 : 0, 0), idx(0, P > 1 ? 1 : 0)});
}

bool is_homomorphism(const Group& g, const Group& h, const std::vector<Element>& images) {
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = 0; y < g.order(); ++y)
      if (images[g.mul(static_cast<Element>(x), static_cast<Element>(y))] != h.mul(images[x], images[y]))
        return false;
  return true;
}

bool is_bijection(const std::vector<Element>& images, std::size_t n) {
  std::vector<bool> hit(n, false);
  for (Element y : images) {
    if (y >= n || hit[y]) return false;
    hit[y] = true;
  }
  return images.size() == n;
}

}  // namespace oracle
