#pragma once

// Slow, definition-level reference implementations. None of these call the
// library routine they are used to check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "mtkit/mtkit.hpp"

namespace oracle {

using mtkit::AtomSet;
using mtkit::Element;
using mtkit::ElementSet;

/// Every labeled partial order on n points, as up-rows, found by trying all
/// 2^(n^2) relations. Sorted.
inline std::vector<std::vector<ElementSet>> posets_by_relations(std::size_t n) {
  const std::size_t cells = n * n;
  std::vector<std::vector<ElementSet>> out;
  for (std::uint64_t rel = 0; rel < (std::uint64_t{1} << cells); ++rel) {
    auto r = [&](std::size_t i, std::size_t j) { return ((rel >> (i * n + j)) & 1U) != 0; };
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = r(i, i);
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = 0; j < n && ok; ++j) {
        if (i != j && r(i, j) && r(j, i)) ok = false;
        for (std::size_t k = 0; k < n && ok; ++k) {
          if (r(i, j) && r(j, k) && !r(i, k)) ok = false;
        }
      }
    }
    if (!ok) continue;
    std::vector<ElementSet> up(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (r(i, j)) up[i] |= ElementSet{1} << j;
      }
    }
    out.push_back(up);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// A finite space given by its open sets, examined point by point.
struct PointSpace {
  std::size_t n;
  std::vector<AtomSet> opens;

  bool in(std::size_t x, AtomSet s) const { return ((s >> x) & 1U) != 0; }
  bool is_open(AtomSet s) const { return std::find(opens.begin(), opens.end(), s) != opens.end(); }
  AtomSet full() const { return n == 0 ? 0 : (AtomSet{1} << n) - 1; }
  bool is_closed(AtomSet s) const { return is_open(full() & ~s); }
  AtomSet closure_of_point(std::size_t x) const {
    AtomSet c = full();
    for (auto u : opens) {
      if (!in(x, u)) c &= full() & ~u;
    }
    return c;
  }

  /// Distinct points are topologically distinguishable.
  bool t0() const {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        bool split = false;
        for (auto u : opens) split = split || in(x, u) != in(y, u);
        if (!split) return false;
      }
    }
    return true;
  }
  /// T_D: the derived set cl{x} \ {x} of every point is closed.
  bool t_half() const {
    for (std::size_t x = 0; x < n; ++x) {
      if (!is_closed(closure_of_point(x) & ~(AtomSet{1} << x))) return false;
    }
    return true;
  }
  /// Every point is closed.
  bool t1() const {
    for (std::size_t x = 0; x < n; ++x) {
      if (closure_of_point(x) != (AtomSet{1} << x)) return false;
    }
    return true;
  }
  /// Distinct points have disjoint open neighbourhoods.
  bool t2() const {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        bool sep = false;
        for (auto u : opens) {
          for (auto v : opens) sep = sep || (in(x, u) && in(y, v) && (u & v) == 0);
        }
        if (!sep) return false;
      }
    }
    return true;
  }
  /// T1 and regular: a point and a closed set missing it have disjoint
  /// open neighbourhoods.
  bool t3() const {
    if (!t1()) return false;
    for (std::size_t x = 0; x < n; ++x) {
      for (auto u : opens) {
        const AtomSet c = full() & ~u;
        if (in(x, c)) continue;
        bool sep = false;
        for (auto a : opens) {
          for (auto b : opens) sep = sep || (in(x, a) && (c & ~b) == 0 && (a & b) == 0);
        }
        if (!sep) return false;
      }
    }
    return true;
  }
  /// T1 and normal: disjoint closed sets have disjoint open neighbourhoods.
  bool t4() const {
    if (!t1()) return false;
    for (auto u : opens) {
      for (auto v : opens) {
        const AtomSet c = full() & ~u, d = full() & ~v;
        if ((c & d) != 0) continue;
        bool sep = false;
        for (auto a : opens) {
          for (auto b : opens) sep = sep || ((c & ~a) == 0 && (d & ~b) == 0 && (a & b) == 0);
        }
        if (!sep) return false;
      }
    }
    return true;
  }
};

/// a ≺ b on opens by the definition ◇a <= □b, from the point space.
inline bool prec_opens(const mtkit::MTAlgebra& M, AtomSet u, AtomSet v) {
  AtomSet cl = M.top();
  for (auto w : M.opens()) {
    if ((u & w) == 0) cl &= M.top() & ~w;
  }
  AtomSet in = 0;
  for (auto w : M.opens()) {
    if ((w & ~v) == 0) in |= w;
  }
  return (cl & ~in) == 0;
}

/// Open pairs (u, v) joined by a ≺-path of exactly `steps` links, as a
/// matrix over open indices: the dyadic family of depth d is such a path
/// with 2^d links.
inline std::vector<std::vector<char>> prec_paths(const mtkit::MTAlgebra& M, std::size_t steps) {
  const auto& O = M.opens();
  const std::size_t k = O.size();
  std::vector<std::vector<char>> one(k, std::vector<char>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) one[i][j] = prec_opens(M, O[i], O[j]);
  }
  auto reach = one;
  for (std::size_t s = 1; s < steps; ++s) {
    std::vector<std::vector<char>> next(k, std::vector<char>(k, 0));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t m = 0; m < k; ++m) {
        if (!reach[i][m]) continue;
        for (std::size_t j = 0; j < k; ++j) next[i][j] = next[i][j] || one[m][j];
      }
    }
    reach = std::move(next);
  }
  return reach;
}

/// a ≺≺ b via a path of 2|O(M)| links between opens u >= a and v <= b.
inline bool precprec_by_paths(const mtkit::MTAlgebra& M,
                              const std::vector<std::vector<char>>& paths, AtomSet a, AtomSet b) {
  const auto& O = M.opens();
  for (std::size_t i = 0; i < O.size(); ++i) {
    if ((a & ~O[i]) != 0) continue;
    for (std::size_t j = 0; j < O.size(); ++j) {
      if ((O[j] & ~b) == 0 && paths[i][j]) return true;
    }
  }
  return false;
}

/// Join-irreducible elements of L from the definition: nonzero c with
/// c = a ∨ b forcing c = a or c = b.
inline ElementSet join_irreducibles(const mtkit::FiniteLattice& L) {
  ElementSet out = 0;
  for (Element c = 0; c < L.size(); ++c) {
    if (c == L.bottom()) continue;
    bool irreducible = true;
    for (Element a = 0; a < L.size(); ++a) {
      for (Element b = 0; b < L.size(); ++b) {
        if (L.join(a, b) == c && a != c && b != c) irreducible = false;
      }
    }
    if (irreducible) out |= ElementSet{1} << c;
  }
  return out;
}

/// Order isomorphism between two small posets by trying every permutation.
inline bool isomorphic_by_permutations(const mtkit::FinitePoset& p, const mtkit::FinitePoset& q) {
  if (p.size() != q.size()) return false;
  std::vector<Element> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (Element i = 0; i < p.size() && ok; ++i) {
      for (Element j = 0; j < p.size() && ok; ++j) ok = p.leq(i, j) == q.leq(perm[i], perm[j]);
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// A filter F is completely prime when every S with ⋁S in F meets F; only
/// subsets of the complement can fail.
inline bool completely_prime_by_subsets(const mtkit::FiniteLattice& L, ElementSet f) {
  std::vector<Element> outside;
  for (Element a = 0; a < L.size(); ++a) {
    if (((f >> a) & 1U) == 0) outside.push_back(a);
  }
  std::vector<Element> joins(std::size_t{1} << outside.size(), L.bottom());
  for (std::size_t s = 0; s < joins.size(); ++s) {
    if (s != 0) {
      const auto low = static_cast<std::size_t>(__builtin_ctzll(s));
      joins[s] = L.join(joins[s & (s - 1)], outside[low]);
    }
    if ((f >> joins[s]) & 1U) return false;
  }
  return true;
}

/// All subsets, as masks, that are filters by the three axioms.
inline std::vector<ElementSet> filters_by_subsets(const mtkit::FiniteLattice& L) {
  std::vector<ElementSet> out;
  for (ElementSet s = 1; s < (ElementSet{1} << L.size()); ++s) {
    bool ok = true;
    for (Element a = 0; a < L.size() && ok; ++a) {
      if (((s >> a) & 1U) == 0) continue;
      for (Element b = 0; b < L.size() && ok; ++b) {
        if (L.leq(a, b) && ((s >> b) & 1U) == 0) ok = false;
        if (((s >> b) & 1U) && ((s >> L.meet(a, b)) & 1U) == 0) ok = false;
      }
    }
    if (ok) out.push_back(s);
  }
  return out;
}

}  // namespace oracle
