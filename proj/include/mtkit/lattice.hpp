#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mtkit/bits.hpp"
#include "mtkit/error.hpp"
#include "mtkit/poset.hpp"

namespace mtkit {

class FiniteLattice;
FiniteLattice validate_lattice(const FinitePoset& p);

/// A finite lattice: its order plus precomputed binary meet/join tables.
/// Only obtainable through validate_lattice, so the tables always agree with
/// the order.
class FiniteLattice {
 public:
  std::size_t size() const { return order_.size(); }
  const FinitePoset& order() const { return order_; }
  ElementSet all() const { return order_.all(); }
  bool leq(Element a, Element b) const { return order_.leq(a, b); }

  Element meet(Element a, Element b) const { return meet_[a * size() + b]; }
  Element join(Element a, Element b) const { return join_[a * size() + b]; }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }

  /// Join of an arbitrary subset (bottom for the empty set).
  Element join_of(ElementSet s) const {
    Element r = bottom_;
    for_each_bit(s, [&](Element i) { r = join(r, i); });
    return r;
  }
  /// Meet of an arbitrary subset (top for the empty set).
  Element meet_of(ElementSet s) const {
    Element r = top_;
    for_each_bit(s, [&](Element i) { r = meet(r, i); });
    return r;
  }

  friend bool operator==(const FiniteLattice& a, const FiniteLattice& b) {
    return a.order_ == b.order_;
  }

 private:
  friend FiniteLattice validate_lattice(const FinitePoset& p);
  FiniteLattice() = default;

  FinitePoset order_;
  std::vector<std::uint8_t> meet_;
  std::vector<std::uint8_t> join_;
  Element bottom_ = 0;
  Element top_ = 0;
};

/// Computes meet and join tables for `p`, throwing NotALattice with the first
/// pair (in lexicographic order) that lacks a meet or a join.
inline FiniteLattice validate_lattice(const FinitePoset& p) {
  const auto n = p.size();
  if (n == 0) throw NotALattice(std::nullopt);
  FiniteLattice L;
  L.order_ = p;
  L.meet_.assign(n * n, 0);
  L.join_.assign(n * n, 0);
  auto greatest = [&](ElementSet s) -> std::optional<Element> {
    std::optional<Element> g;
    for_each_bit(s, [&](Element i) {
      if (!g && is_subset(s, p.down(i))) g = i;
    });
    return g;
  };
  auto least = [&](ElementSet s) -> std::optional<Element> {
    std::optional<Element> l;
    for_each_bit(s, [&](Element i) {
      if (!l && is_subset(s, p.up(i))) l = i;
    });
    return l;
  };
  for (Element a = 0; a < n; ++a) {
    for (Element b = a; b < n; ++b) {
      const auto m = greatest(p.down(a) & p.down(b));
      const auto j = least(p.up(a) & p.up(b));
      if (!m || !j) throw NotALattice(std::make_pair(a, b));
      L.meet_[a * n + b] = L.meet_[b * n + a] = static_cast<std::uint8_t>(*m);
      L.join_[a * n + b] = L.join_[b * n + a] = static_cast<std::uint8_t>(*j);
    }
  }
  const auto bot = greatest(p.lower_bounds(p.all()));
  const auto top = least(p.upper_bounds(p.all()));
  if (!bot || !top) throw NotALattice(std::make_pair(Element{0}, Element{0}));
  L.bottom_ = *bot;
  L.top_ = *top;
  return L;
}

/// Lattice of a family of sets ordered by inclusion. The family must be
/// closed enough to form a lattice; ids follow the order of `family`.
inline FiniteLattice inclusion_lattice(std::span<const std::uint64_t> family) {
  return validate_lattice(FinitePoset::from_relation(
      family.size(), [&](Element i, Element j) { return is_subset(family[i], family[j]); }));
}

/// Joins of every subset of `items`, indexed by the subset's bit pattern
/// over positions in `items`. Requires items.size() <= kExhaustiveSubsetLimit.
inline std::vector<Element> subset_joins(const FiniteLattice& L, std::span<const Element> items) {
  const std::size_t k = items.size();
  std::vector<Element> out(std::size_t{1} << k);
  out[0] = L.bottom();
  for (std::size_t s = 1; s < out.size(); ++s) {
    const auto low = static_cast<std::size_t>(std::countr_zero(s));
    out[s] = L.join(out[s & (s - 1)], items[low]);
  }
  return out;
}

inline std::vector<Element> subset_meets(const FiniteLattice& L, std::span<const Element> items) {
  const std::size_t k = items.size();
  std::vector<Element> out(std::size_t{1} << k);
  out[0] = L.top();
  for (std::size_t s = 1; s < out.size(); ++s) {
    const auto low = static_cast<std::size_t>(std::countr_zero(s));
    out[s] = L.meet(out[s & (s - 1)], items[low]);
  }
  return out;
}

struct FrameFlags {
  bool is_frame = false;
  bool is_coframe = false;
  friend bool operator==(const FrameFlags&, const FrameFlags&) = default;
};

/// a ∧ ⋁S = ⋁{a ∧ s} for every a and every subset S, by enumeration.
inline bool is_frame_by_subsets(const FiniteLattice& L) {
  const auto items = to_vector(L.all());
  const auto joins = subset_joins(L, items);
  std::vector<Element> rhs(joins.size());
  for (Element a = 0; a < L.size(); ++a) {
    rhs[0] = L.bottom();
    for (std::size_t s = 1; s < rhs.size(); ++s) {
      const auto low = static_cast<std::size_t>(std::countr_zero(s));
      rhs[s] = L.join(rhs[s & (s - 1)], L.meet(a, items[low]));
      if (L.meet(a, joins[s]) != rhs[s]) return false;
    }
  }
  return true;
}

inline bool is_coframe_by_subsets(const FiniteLattice& L) {
  const auto items = to_vector(L.all());
  const auto meets = subset_meets(L, items);
  std::vector<Element> rhs(meets.size());
  for (Element a = 0; a < L.size(); ++a) {
    rhs[0] = L.top();
    for (std::size_t s = 1; s < rhs.size(); ++s) {
      const auto low = static_cast<std::size_t>(std::countr_zero(s));
      rhs[s] = L.meet(rhs[s & (s - 1)], L.join(a, items[low]));
      if (L.join(a, meets[s]) != rhs[s]) return false;
    }
  }
  return true;
}

/// First triple violating a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c), if any.
inline std::optional<std::vector<Element>> distributivity_failure(const FiniteLattice& L) {
  for (Element a = 0; a < L.size(); ++a) {
    for (Element b = 0; b < L.size(); ++b) {
      for (Element c = 0; c < L.size(); ++c) {
        if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c))) {
          return std::vector<Element>{a, b, c};
        }
      }
    }
  }
  return std::nullopt;
}

inline std::optional<std::vector<Element>> codistributivity_failure(const FiniteLattice& L) {
  for (Element a = 0; a < L.size(); ++a) {
    for (Element b = 0; b < L.size(); ++b) {
      for (Element c = 0; c < L.size(); ++c) {
        if (L.join(a, L.meet(b, c)) != L.meet(L.join(a, b), L.join(a, c))) {
          return std::vector<Element>{a, b, c};
        }
      }
    }
  }
  return std::nullopt;
}

inline FrameFlags frame_coframe_flags(const FiniteLattice& L) {
  if (L.size() <= kExhaustiveSubsetLimit) {
    return {is_frame_by_subsets(L), is_coframe_by_subsets(L)};
  }
  return {!distributivity_failure(L).has_value(), !codistributivity_failure(L).has_value()};
}

inline bool is_distributive(const FiniteLattice& L) { return !distributivity_failure(L); }

struct Irreducibles {
  ElementSet join_irreducibles = 0;
  ElementSet meet_primes = 0;
  ElementSet atoms = 0;
  ElementSet coatoms = 0;
};

inline Irreducibles irreducibles(const FiniteLattice& L) {
  Irreducibles r;
  const auto n = L.size();
  for (Element c = 0; c < n; ++c) {
    if (c != L.bottom()) {
      bool ji = true;
      for (Element a = 0; a < n && ji; ++a) {
        for (Element b = 0; b < n && ji; ++b) {
          if (L.join(a, b) == c && a != c && b != c) ji = false;
        }
      }
      if (ji) r.join_irreducibles |= bit(c);
    }
    if (c != L.top()) {
      bool mp = true;
      for (Element a = 0; a < n && mp; ++a) {
        for (Element b = 0; b < n && mp; ++b) {
          if (L.leq(L.meet(a, b), c) && !L.leq(a, c) && !L.leq(b, c)) mp = false;
        }
      }
      if (mp) r.meet_primes |= bit(c);
    }
  }
  const auto& P = L.order();
  r.atoms = P.minimal(L.all() & ~bit(L.bottom()));
  r.coatoms = P.maximal(L.all() & ~bit(L.top()));
  return r;
}

struct DensityFlags {
  bool join_dense = false;
  bool meet_dense = false;
  friend bool operator==(const DensityFlags&, const DensityFlags&) = default;
};

inline DensityFlags density_flags(const FiniteLattice& L, ElementSet s) {
  DensityFlags f{true, true};
  for (Element a = 0; a < L.size(); ++a) {
    if (L.join_of(s & L.order().down(a)) != a) f.join_dense = false;
    if (L.meet_of(s & L.order().up(a)) != a) f.meet_dense = false;
  }
  return f;
}

/// True iff a ∧ ⋁S = ⋁{a ∧ s | s ∈ S} for every a.
inline bool is_exact_join(const FiniteLattice& L, ElementSet s) {
  const Element j = L.join_of(s);
  for (Element a = 0; a < L.size(); ++a) {
    Element rhs = L.bottom();
    for_each_bit(s, [&](Element x) { rhs = L.join(rhs, L.meet(a, x)); });
    if (L.meet(a, j) != rhs) return false;
  }
  return true;
}

/// Completely join-prime elements by enumerating every subset S.
inline ElementSet completely_join_primes_by_subsets(const FiniteLattice& L) {
  const auto items = to_vector(L.all());
  const auto joins = subset_joins(L, items);
  ElementSet out = 0;
  for (Element p = 0; p < L.size(); ++p) {
    if (p == L.bottom()) continue;
    const ElementSet up = L.order().up(p);
    bool prime = true;
    for (std::size_t s = 0; s < joins.size() && prime; ++s) {
      // items are 0..n-1 so the subset pattern is the element set itself.
      if (L.leq(p, joins[s]) && (static_cast<ElementSet>(s) & up) == 0) prime = false;
    }
    if (prime) out |= bit(p);
  }
  return out;
}

/// Completely join-prime elements via the largest candidate family:
/// p is completely join-prime iff p is not below the join of everything not above it.
inline ElementSet completely_join_primes_by_reduction(const FiniteLattice& L) {
  ElementSet out = 0;
  for (Element p = 0; p < L.size(); ++p) {
    if (p == L.bottom()) continue;
    if (!L.leq(p, L.join_of(L.all() & ~L.order().up(p)))) out |= bit(p);
  }
  return out;
}

inline ElementSet completely_join_primes(const FiniteLattice& L) {
  return L.size() <= kExhaustiveSubsetLimit ? completely_join_primes_by_subsets(L)
                                            : completely_join_primes_by_reduction(L);
}

/// Finds a bijection of element ids that is an order isomorphism.
inline std::optional<std::vector<Element>> order_isomorphism(const FinitePoset& a,
                                                             const FinitePoset& b) {
  const auto n = a.size();
  if (n != b.size()) return std::nullopt;
  auto signature = [](const FinitePoset& p, Element x) {
    return std::pair{count(p.up(x)), count(p.down(x))};
  };
  std::vector<Element> map(n, 0);
  ElementSet used = 0;
  auto rec = [&](auto&& self, Element i) -> bool {
    if (i == n) return true;
    for (Element j = 0; j < n; ++j) {
      if (has(used, j) || signature(a, i) != signature(b, j)) continue;
      bool ok = true;
      for (Element k = 0; k < i && ok; ++k) {
        ok = a.leq(k, i) == b.leq(map[k], j) && a.leq(i, k) == b.leq(j, map[k]);
      }
      if (!ok) continue;
      map[i] = j;
      used |= bit(j);
      if (self(self, i + 1)) return true;
      used &= ~bit(j);
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return map;
}

}  // namespace mtkit
