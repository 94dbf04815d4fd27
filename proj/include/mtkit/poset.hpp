#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "mtkit/bits.hpp"
#include "mtkit/error.hpp"

namespace mtkit {

/// A partial order on element ids 0..size-1, stored as up/down rows.
class FinitePoset {
 public:
  FinitePoset() = default;

  /// `up[i]` holds every j with i <= j. Throws NotAPoset if the relation is
  /// not reflexive, antisymmetric and transitive.
  explicit FinitePoset(std::vector<ElementSet> up) : up_(std::move(up)) {
    if (up_.size() > kMaxLatticeElements) {
      throw CapacityExceeded("poset has " + std::to_string(up_.size()) +
                             " elements; the limit is 64");
    }
    const auto n = up_.size();
    down_.assign(n, 0);
    for (Element i = 0; i < n; ++i) {
      if (!is_subset(up_[i], full_mask(n))) {
        throw NotAPoset("relation row " + std::to_string(i) + " out of range", {i});
      }
      for_each_bit(up_[i], [&](Element j) { down_[j] |= bit(i); });
    }
    for (Element i = 0; i < n; ++i) {
      if (!has(up_[i], i)) throw NotAPoset("not reflexive at " + std::to_string(i), {i});
      for_each_bit(up_[i], [&](Element j) {
        if (j != i && has(up_[j], i)) {
          throw NotAPoset("not antisymmetric: " + std::to_string(i) + " and " +
                              std::to_string(j),
                          {i, j});
        }
        if (!is_subset(up_[j], up_[i])) {
          const auto k = static_cast<Element>(std::countr_zero(up_[j] & ~up_[i]));
          throw NotAPoset("not transitive: " + std::to_string(i) + " <= " + std::to_string(j) +
                              " <= " + std::to_string(k),
                          {i, j, k});
        }
      });
    }
  }

  /// Builds the reflexive-transitive closure of `pairs` (i <= j) and then
  /// validates antisymmetry.
  static FinitePoset from_pairs(std::size_t size,
                                const std::vector<std::pair<Element, Element>>& pairs) {
    if (size > kMaxLatticeElements) {
      throw CapacityExceeded("poset has " + std::to_string(size) + " elements; the limit is 64");
    }
    std::vector<ElementSet> up(size);
    for (Element i = 0; i < size; ++i) up[i] = bit(i);
    for (auto [i, j] : pairs) {
      if (i >= size || j >= size) throw NotAPoset("pair out of range", {i, j});
      up[i] |= bit(j);
    }
    // Warshall over bit rows.
    for (Element k = 0; k < size; ++k) {
      for (Element i = 0; i < size; ++i) {
        if (has(up[i], k)) up[i] |= up[k];
      }
    }
    return FinitePoset(std::move(up));
  }

  template <class Leq>
  static FinitePoset from_relation(std::size_t size, Leq&& leq) {
    std::vector<ElementSet> up(size, 0);
    for (Element i = 0; i < size; ++i) {
      for (Element j = 0; j < size; ++j) {
        if (leq(i, j)) up[i] |= bit(j);
      }
    }
    return FinitePoset(std::move(up));
  }

  std::size_t size() const { return up_.size(); }
  ElementSet all() const { return full_mask(size()); }
  bool leq(Element a, Element b) const { return has(up_[a], b); }
  bool lt(Element a, Element b) const { return a != b && leq(a, b); }
  ElementSet up(Element a) const { return up_[a]; }
  ElementSet down(Element a) const { return down_[a]; }

  /// Elements below every member of `s` (all elements when `s` is empty).
  ElementSet lower_bounds(ElementSet s) const {
    ElementSet r = all();
    for_each_bit(s, [&](Element i) { r &= down_[i]; });
    return r;
  }
  ElementSet upper_bounds(ElementSet s) const {
    ElementSet r = all();
    for_each_bit(s, [&](Element i) { r &= up_[i]; });
    return r;
  }

  bool is_downset(ElementSet s) const {
    bool ok = true;
    for_each_bit(s, [&](Element i) { ok = ok && is_subset(down_[i], s); });
    return ok;
  }
  bool is_upset(ElementSet s) const {
    bool ok = true;
    for_each_bit(s, [&](Element i) { ok = ok && is_subset(up_[i], s); });
    return ok;
  }

  ElementSet minimal(ElementSet s) const {
    ElementSet r = 0;
    for_each_bit(s, [&](Element i) {
      if ((down_[i] & s) == bit(i)) r |= bit(i);
    });
    return r;
  }
  ElementSet maximal(ElementSet s) const {
    ElementSet r = 0;
    for_each_bit(s, [&](Element i) {
      if ((up_[i] & s) == bit(i)) r |= bit(i);
    });
    return r;
  }

  /// Covering pairs (a, b): a < b with nothing strictly between.
  std::vector<std::pair<Element, Element>> covers() const {
    std::vector<std::pair<Element, Element>> out;
    for (Element a = 0; a < size(); ++a) {
      const ElementSet above = up_[a] & ~bit(a);
      for_each_bit(minimal(above), [&](Element b) { out.emplace_back(a, b); });
    }
    return out;
  }

  /// The order restricted to `subset`, re-indexed in increasing id order.
  FinitePoset restrict_to(ElementSet subset) const {
    const auto ids = to_vector(subset);
    return from_relation(ids.size(), [&](Element i, Element j) { return leq(ids[i], ids[j]); });
  }

  friend bool operator==(const FinitePoset& a, const FinitePoset& b) { return a.up_ == b.up_; }

 private:
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
};

/// Every downward-closed subset, in increasing numeric order (which is a
/// linear extension of inclusion).
inline std::vector<ElementSet> downsets(const FinitePoset& p) {
  // Elements are decided bottom-up along a linear extension; excluding one
  // forbids everything above it.
  std::vector<Element> order(p.size());
  for (Element i = 0; i < p.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) {
    return count(p.down(a)) < count(p.down(b));
  });
  std::vector<ElementSet> out;
  auto rec = [&](auto&& self, std::size_t k, ElementSet chosen, ElementSet forbidden) -> void {
    if (k == order.size()) {
      out.push_back(chosen);
      return;
    }
    const Element x = order[k];
    self(self, k + 1, chosen, forbidden | p.up(x));
    if (!has(forbidden, x)) self(self, k + 1, chosen | bit(x), forbidden);
  };
  rec(rec, 0, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mtkit
