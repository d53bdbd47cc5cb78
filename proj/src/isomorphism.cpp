#include "nps/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

namespace nps {

namespace {

constexpr Element kUnset = static_cast<Element>(-1);

// Conjugacy class size of every element.
std::vector<std::size_t> element_class_sizes(const Group& g) {
  std::vector<std::size_t> size_of(g.order(), 0);
  std::vector<bool> done(g.order(), false);
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    std::vector<Element> orbit{static_cast<Element>(x)};
    done[x] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (Element s : g.generators()) {
        Element y = g.conjugate(orbit[i], s);
        if (done[y]) continue;
        done[y] = true;
        orbit.push_back(y);
      }
    }
    for (Element y : orbit) size_of[y] = orbit.size();
  }
  return size_of;
}

std::vector<std::size_t> order_histogram(const Group& g) {
  std::vector<std::size_t> hist(g.order() + 1, 0);
  for (std::size_t x = 0; x < g.order(); ++x) ++hist[g.order_of(static_cast<Element>(x))];
  return hist;
}

class Search {
 public:
  Search(const Group& g, const Group& h) : g_(g), h_(h) {
    gens_ = small_generating_set(g);
    const auto gclass = element_class_sizes(g), hclass = element_class_sizes(h);
    for (Element s : gens_) {
      std::vector<Element> cands;
      for (std::size_t y = 0; y < h.order(); ++y) {
        const auto e = static_cast<Element>(y);
        if (h.order_of(e) == g.order_of(s) && hclass[y] == gclass[s]) cands.push_back(e);
      }
      candidates_.push_back(std::move(cands));
    }
    images_.resize(gens_.size());
  }

  std::optional<Morphism> run() {
    if (gens_.empty()) return Morphism{{Group::identity}};
    if (!descend(0)) return std::nullopt;
    return std::move(result_);
  }

 private:
  // Extends the map on <gens_[0..n)>; false on a relation violation or
  // a collision of images.
  bool extend_prefix(std::size_t n, Morphism& f) const {
    f.images.assign(g_.order(), kUnset);
    std::vector<bool> used(h_.order(), false);
    f.images[Group::identity] = Group::identity;
    used[Group::identity] = true;
    std::vector<Element> queue{Group::identity};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      Element x = queue[i];
      for (std::size_t j = 0; j < n; ++j) {
        Element y = g_.mul(x, gens_[j]);
        Element img = h_.mul(f.images[x], images_[j]);
        if (f.images[y] == kUnset) {
          if (used[img]) return false;
          used[img] = true;
          f.images[y] = img;
          queue.push_back(y);
        } else if (f.images[y] != img) {
          return false;
        }
      }
    }
    return true;
  }

  bool descend(std::size_t i) {
    for (Element y : candidates_[i]) {
      images_[i] = y;
      Morphism f;
      if (!extend_prefix(i + 1, f)) continue;
      if (i + 1 == gens_.size()) {
        result_ = std::move(f);
        return true;
      }
      if (descend(i + 1)) return true;
    }
    return false;
  }

  const Group& g_;
  const Group& h_;
  std::vector<Element> gens_;
  std::vector<std::vector<Element>> candidates_;
  std::vector<Element> images_;
  Morphism result_;
};

}  // namespace

std::vector<std::size_t> class_sizes(const Group& g) {
  const auto per_element = element_class_sizes(g);
  std::map<std::size_t, std::size_t> count;
  for (std::size_t s : per_element) ++count[s];
  std::vector<std::size_t> out;
  for (auto [size, elements] : count)
    for (std::size_t c = 0; c < elements / size; ++c) out.push_back(size);
  return out;
}

std::vector<Element> small_generating_set(const Group& g) {
  std::vector<Element> by_order;
  for (std::size_t x = 1; x < g.order(); ++x) by_order.push_back(static_cast<Element>(x));
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](Element a, Element b) { return g.order_of(a) > g.order_of(b); });
  std::vector<Element> gens;
  Subgroup span = trivial_subgroup(g);
  for (Element x : by_order) {
    if (span.size() == g.order()) break;
    if (span.contains(x)) continue;
    span = join(g, span, gens, x);
    gens.push_back(x);
  }
  return gens;
}

std::optional<Morphism> find_isomorphism(const Group& g, const Group& h, std::size_t cap) {
  if (g.order() > cap || h.order() > cap)
    throw SizeLimitError("isomorphism test above order cap " + std::to_string(cap));
  if (g.order() != h.order()) return std::nullopt;
  if (exponent(g) != exponent(h)) return std::nullopt;
  if (order_histogram(g) != order_histogram(h)) return std::nullopt;
  if (center(g).size() != center(h).size()) return std::nullopt;
  if (derived_subgroup(g).size() != derived_subgroup(h).size()) return std::nullopt;
  if (class_sizes(g) != class_sizes(h)) return std::nullopt;
  const auto cg = counts(g, cap), ch = counts(h, cap);
  if (cg.s != ch.s || cg.nps != ch.nps) return std::nullopt;
  return Search(g, h).run();
}

bool are_isomorphic(const Group& g, const Group& h, std::size_t cap) {
  return find_isomorphism(g, h, cap).has_value();
}

}  // namespace nps
