#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "mtkit/bits.hpp"
#include "mtkit/error.hpp"
#include "mtkit/lattice.hpp"
#include "mtkit/mt_algebra.hpp"

namespace mtkit {

/// A validated finite frame, optionally remembering the open sets of the
/// MT-algebra it came from (element i is opens[i]).
class FrameView {
 public:
  explicit FrameView(FiniteLattice lattice, std::optional<std::vector<AtomSet>> opens = {})
      : lattice_(std::move(lattice)), opens_(std::move(opens)) {
    const bool frame = lattice_.size() <= kExhaustiveSubsetLimit ? is_frame_by_subsets(lattice_)
                                                                 : is_distributive(lattice_);
    if (!frame) throw NotDistributive("lattice is not a frame");
  }

  const FiniteLattice& lattice() const { return lattice_; }
  const std::optional<std::vector<AtomSet>>& opens() const { return opens_; }
  std::size_t size() const { return lattice_.size(); }

 private:
  FiniteLattice lattice_;
  std::optional<std::vector<AtomSet>> opens_;
};

/// O(M) ordered by inclusion.
inline FrameView open_frame(const MTAlgebra& M) {
  if (M.opens().size() > kMaxLatticeElements) {
    throw CapacityExceeded("frame of opens exceeds 64 elements");
  }
  return FrameView(inclusion_lattice(M.opens()), M.opens());
}

/// s → a = ⋁{b | s ∧ b <= a}.
inline Element heyting(const FiniteLattice& L, Element s, Element a) {
  ElementSet bs = 0;
  for (Element b = 0; b < L.size(); ++b) {
    if (L.leq(L.meet(s, b), a)) bs |= bit(b);
  }
  return L.join_of(bs);
}

/// u* = ⋁{v | u ∧ v = 0}.
inline Element pseudocomplement(const FiniteLattice& L, Element u) {
  return heyting(L, u, L.bottom());
}

/// s* computed in M as □¬s.
inline AtomSet pseudocomplement_via_interior(const MTAlgebra& M, AtomSet s) {
  if (!M.is_open(s)) throw NotOpen("element " + std::to_string(s) + " is not open");
  return M.interior(M.neg(s));
}

/// Least (a, b) with a ≰ b admitting no c with a ∨ c = 1 and b ∨ c ≠ 1.
inline std::optional<std::pair<Element, Element>> subfit_failure(const FiniteLattice& L) {
  for (Element a = 0; a < L.size(); ++a) {
    for (Element b = 0; b < L.size(); ++b) {
      if (L.leq(a, b)) continue;
      bool found = false;
      for (Element c = 0; c < L.size() && !found; ++c) {
        found = L.join(a, c) == L.top() && L.join(b, c) != L.top();
      }
      if (!found) return std::pair{a, b};
    }
  }
  return std::nullopt;
}

inline bool is_subfit(const FiniteLattice& L) { return !subfit_failure(L); }

/// Least a ≠ 1 that is not the join of its u <= a with u* ≰ a.
inline std::optional<Element> hausdorff_failure(const FiniteLattice& L) {
  for (Element a = 0; a < L.size(); ++a) {
    if (a == L.top()) continue;
    ElementSet us = 0;
    for (Element u = 0; u < L.size(); ++u) {
      if (L.leq(u, a) && !L.leq(pseudocomplement(L, u), a)) us |= bit(u);
    }
    if (L.join_of(us) != a) return a;
  }
  return std::nullopt;
}

inline bool is_hausdorff_frame(const FiniteLattice& L) { return !hausdorff_failure(L); }

struct Filter {
  ElementSet members = 0;
  friend bool operator==(const Filter&, const Filter&) = default;
  friend auto operator<=>(const Filter&, const Filter&) = default;
};

/// Nonempty, upward closed and closed under binary meets.
inline bool is_filter(const FiniteLattice& L, ElementSet s) {
  if (s == 0 || !L.order().is_upset(s)) return false;
  bool closed = true;
  for_each_bit(s, [&](Element a) {
    for_each_bit(s, [&](Element b) { closed = closed && has(s, L.meet(a, b)); });
  });
  return closed;
}

inline std::vector<ElementSet> upsets(const FinitePoset& p) {
  const auto dual = FinitePoset::from_relation(p.size(), [&](Element i, Element j) {
    return p.leq(j, i);
  });
  return downsets(dual);
}

/// Principal filter ↑a.
inline Filter principal_filter(const FiniteLattice& L, Element a) { return {L.order().up(a)}; }

inline bool is_principal(const FiniteLattice& L, const Filter& f) {
  return f.members == L.order().up(L.meet_of(f.members));
}

/// Every filter, found among the upsets and sorted by member mask. Each one is
/// checked to be principal before it is returned.
inline std::vector<Filter> filters(const FiniteLattice& L) {
  std::vector<Filter> out;
  for (auto u : upsets(L.order())) {
    if (is_filter(L, u)) out.push_back({u});
  }
  for (const auto& f : out) {
    if (!is_principal(L, f)) throw std::logic_error("non-principal filter in a finite lattice");
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Completely prime filters {a | a ≰ m}, one for each meet-prime m.
inline std::vector<Filter> completely_prime_filters(const FiniteLattice& L) {
  std::vector<Filter> out;
  for_each_bit(irreducibles(L).meet_primes, [&](Element m) {
    out.push_back({L.all() & ~L.order().down(m)});
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// A filter F is completely prime iff ⋁S ∈ F forces S ∩ F ≠ ∅; here tested
/// against the largest S missing F.
inline bool is_completely_prime(const FiniteLattice& L, const Filter& f) {
  return is_filter(L, f.members) && !has(f.members, L.join_of(L.all() & ~f.members));
}

/// For all a ≰ b some completely prime filter contains a and misses b.
inline bool is_spatial_frame(const FiniteLattice& L) {
  const auto cps = completely_prime_filters(L);
  for (Element a = 0; a < L.size(); ++a) {
    for (Element b = 0; b < L.size(); ++b) {
      if (L.leq(a, b)) continue;
      bool separated = false;
      for (const auto& p : cps) separated = separated || (has(p.members, a) && !has(p.members, b));
      if (!separated) return false;
    }
  }
  return true;
}

/// D(L) = {a | a* = 0}.
inline Filter dense_elements(const FiniteLattice& L) {
  ElementSet d = 0;
  for (Element a = 0; a < L.size(); ++a) {
    if (pseudocomplement(L, a) == L.bottom()) d |= bit(a);
  }
  if (!is_filter(L, d)) throw std::logic_error("dense elements do not form a filter");
  return {d};
}

/// Heyting implication tabulated for repeated strong-exactness checks.
class HeytingTable {
 public:
  explicit HeytingTable(const FiniteLattice& L) : n_(L.size()), table_(n_ * n_) {
    for (Element s = 0; s < n_; ++s) {
      for (Element a = 0; a < n_; ++a) table_[s * n_ + a] = heyting(L, s, a);
    }
  }
  Element operator()(Element s, Element a) const { return table_[s * n_ + a]; }

 private:
  std::size_t n_;
  std::vector<Element> table_;
};

/// If s → a = a for every s in S then (⋀S) → a = a, for every a.
inline bool is_strongly_exact_meet(const FiniteLattice& L, const HeytingTable& imp, ElementSet s) {
  const Element m = L.meet_of(s);
  for (Element a = 0; a < L.size(); ++a) {
    bool fixed = true;
    for_each_bit(s, [&](Element x) { fixed = fixed && imp(x, a) == a; });
    if (fixed && imp(m, a) != a) return false;
  }
  return true;
}

inline bool is_strongly_exact_meet(const FiniteLattice& L, ElementSet s) {
  return is_strongly_exact_meet(L, HeytingTable(L), s);
}

/// A filter containing ⋀S for every subset S of its members whose meet is
/// strongly exact. Subsets are enumerated when the filter has at most
/// kExhaustiveSubsetLimit members; larger filters are principal and contain
/// the meet of all their members.
inline bool is_strongly_exact_filter(const FiniteLattice& L, const HeytingTable& imp,
                                     const Filter& f) {
  if (!is_filter(L, f.members)) return false;
  const auto items = to_vector(f.members);
  if (items.size() > kExhaustiveSubsetLimit) return has(f.members, L.meet_of(f.members));
  const auto meets = subset_meets(L, items);
  for (std::size_t s = 0; s < meets.size(); ++s) {
    if (has(f.members, meets[s])) continue;
    ElementSet subset = 0;
    for_each_bit(s, [&](Element i) { subset |= bit(items[i]); });
    if (is_strongly_exact_meet(L, imp, subset)) return false;
  }
  return true;
}

inline bool is_strongly_exact_filter(const FiniteLattice& L, const Filter& f) {
  return is_strongly_exact_filter(L, HeytingTable(L), f);
}

/// Strongly exact filters, sorted by decreasing size so that the list runs
/// upward in the reverse-inclusion order (ties broken by member mask).
inline std::vector<Filter> strongly_exact_filters(const FiniteLattice& L) {
  const HeytingTable imp(L);
  std::vector<Filter> out;
  for (const auto& f : filters(L)) {
    if (is_strongly_exact_filter(L, imp, f)) out.push_back(f);
  }
  std::stable_sort(out.begin(), out.end(), [](const Filter& a, const Filter& b) {
    return count(a.members) > count(b.members);
  });
  return out;
}

inline bool is_directed(const FiniteLattice& L, ElementSet s) {
  if (s == 0) return false;
  bool ok = true;
  for_each_bit(s, [&](Element x) {
    for_each_bit(s, [&](Element y) {
      ok = ok && (L.order().up(x) & L.order().up(y) & s) != 0;
    });
  });
  return ok;
}

/// Every directed S with ⋁S in F meets F. Directed subsets of the
/// complement are enumerated when it has at most kExhaustiveSubsetLimit
/// elements; otherwise a directed set contains its own join.
inline bool is_scott_open(const FiniteLattice& L, const Filter& f) {
  if (!is_filter(L, f.members)) return false;
  const auto outside = to_vector(L.all() & ~f.members);
  if (outside.size() > kExhaustiveSubsetLimit) return true;
  const auto joins = subset_joins(L, outside);
  for (std::size_t s = 1; s < joins.size(); ++s) {
    if (!has(f.members, joins[s])) continue;
    ElementSet subset = 0;
    for_each_bit(s, [&](Element i) { subset |= bit(outside[i]); });
    if (is_directed(L, subset)) return false;
  }
  return true;
}

inline std::vector<Filter> scott_open_filters(const FiniteLattice& L) {
  std::vector<Filter> out;
  for (const auto& f : filters(L)) {
    if (is_scott_open(L, f)) out.push_back(f);
  }
  return out;
}

}  // namespace mtkit
