#pragma once

#include <vector>

#include "mtkit/bits.hpp"
#include "mtkit/mt_algebra.hpp"
#include "mtkit/separation.hpp"

namespace mtkit {

/// Open covers are enumerated as subfamilies of O(M) up to this many opens.
inline constexpr std::size_t kCoverEnumerationLimit = 16;

/// Membership table of compact elements: every open cover of k has a finite
/// subcover. Covers are enumerated and a subcover is extracted by dropping
/// redundant members; above kCoverEnumerationLimit opens every cover is a
/// finite family and is its own subcover.
inline std::vector<char> compact_table(const MTAlgebra& M) {
  const auto n = M.element_count();
  std::vector<char> compact(n, 1);
  const auto& opens = M.opens();
  const std::size_t k = opens.size();
  if (k > kCoverEnumerationLimit) return compact;
  std::vector<AtomSet> joins(std::size_t{1} << k, 0);
  for (std::size_t s = 1; s < joins.size(); ++s) {
    joins[s] = joins[s & (s - 1)] | opens[static_cast<std::size_t>(std::countr_zero(s))];
  }
  for (AtomSet a = 0; a < n; ++a) {
    for (std::size_t cover = 0; cover < joins.size() && compact[a]; ++cover) {
      if (!is_subset(a, joins[cover])) continue;
      std::size_t sub = cover;
      for_each_bit(cover, [&](Element i) {
        if (is_subset(a, joins[sub & ~bit(i)])) sub &= ~bit(i);
      });
      if (!is_subset(a, joins[sub])) compact[a] = 0;
    }
  }
  return compact;
}

/// Compactness through the finite intersection property for closed
/// elements: every family of closed elements whose finite subfamilies all
/// meet k has a meet that meets k.
inline bool is_compact_fip(const MTAlgebra& M, AtomSet k) {
  const auto& closeds = M.closeds();
  if (closeds.size() > kCoverEnumerationLimit) return true;
  const std::size_t families = std::size_t{1} << closeds.size();
  std::vector<AtomSet> meets(families, M.top());
  std::vector<char> fip(families, 0);
  for (std::size_t s = 0; s < families; ++s) {
    if (s != 0) {
      meets[s] = meets[s & (s - 1)] & closeds[static_cast<std::size_t>(std::countr_zero(s))];
    }
    // Finite intersection property of every proper subfamily.
    bool sub_fip = true;
    for_each_bit(s, [&](Element i) { sub_fip = sub_fip && fip[s & ~bit(i)]; });
    const bool meets_k = (k & meets[s]) != 0;
    fip[s] = sub_fip && meets_k;
  }
  for (std::size_t s = 0; s < families; ++s) {
    if (fip[s] && (k & meets[s]) == 0) return false;
  }
  return true;
}

/// a ◁ b: some compact element sits between a and b.
inline bool way_below(const std::vector<char>& compact, AtomSet a, AtomSet b) {
  if (!is_subset(a, b)) return false;
  const AtomSet free = b & ~a;
  for (AtomSet s = free;; s = (s - 1) & free) {
    if (compact[a | s]) return true;
    if (s == 0) return false;
  }
}

struct CompactnessProfile {
  std::vector<AtomSet> compact_elements;
  bool compact = false;
  bool locally_compact = false;
  bool n_locally_compact = false;
};

inline CompactnessProfile compactness_profile(const MTAlgebra& M) {
  const auto table = compact_table(M);
  CompactnessProfile p;
  for (AtomSet a = 0; a < M.element_count(); ++a) {
    if (table[a]) p.compact_elements.push_back(a);
  }
  p.compact = table[M.top()] != 0;
  p.locally_compact = true;
  for (auto u : M.opens()) {
    AtomSet j = 0;
    for (auto v : M.opens()) {
      if (is_subset(v, u) && way_below(table, v, u)) j |= v;
    }
    if (j != u) p.locally_compact = false;
  }
  p.n_locally_compact = true;
  for (AtomSet a = 1; a < M.element_count() && p.n_locally_compact; ++a) {
    bool found = false;
    for (auto k : p.compact_elements) {
      if ((a & M.interior(k)) != 0) {
        found = true;
        break;
      }
    }
    if (!found) p.n_locally_compact = false;
  }
  return p;
}

/// 1 = ⋁{u open | u ◁ 1}, evaluated from the compact elements directly.
inline bool top_approximated_by_compact_opens(const MTAlgebra& M) {
  const auto table = compact_table(M);
  AtomSet j = 0;
  for (auto u : M.opens()) {
    if (way_below(table, u, M.top())) j |= u;
  }
  return j == M.top();
}

/// x <= a iff x is not below ¬a, for every open a.
inline bool atom_char(const MTAlgebra& M, AtomSet x) {
  for (auto a : M.opens()) {
    if (is_subset(x, a) == is_subset(x, M.neg(a))) return false;
  }
  return true;
}

struct StructureProfile {
  std::vector<AtomSet> atoms;
  bool spatial = false;
  bool sober = false;
  std::vector<AtomSet> min_nonzero_closed;
};

/// Closed elements that are not the join of two strictly smaller closed ones.
inline std::vector<AtomSet> join_irreducible_closeds(const MTAlgebra& M) {
  std::vector<AtomSet> out;
  const auto& cs = M.closeds();
  for (auto c : cs) {
    if (c == 0) continue;
    bool reducible = false;
    for (auto a : cs) {
      for (auto b : cs) {
        if ((a | b) == c && a != c && b != c) reducible = true;
      }
    }
    if (!reducible) out.push_back(c);
  }
  return out;
}

inline StructureProfile structure_profile(const MTAlgebra& M) {
  StructureProfile p;
  p.atoms = atoms(M);
  std::vector<char> is_atom(M.element_count(), 0);
  for (auto x : p.atoms) is_atom[x] = 1;
  p.spatial = !join_density_failure(M, is_atom);

  const auto tables = element_tables(M);
  p.sober = !t0_refutation(M, tables);
  for (auto c : join_irreducible_closeds(M)) {
    bool point_closure = false;
    for (auto x : p.atoms) point_closure = point_closure || M.closure(x) == c;
    if (!point_closure) p.sober = false;
  }

  for (auto c : M.closeds()) {
    if (c == 0) continue;
    bool minimal = true;
    for (auto d : M.closeds()) {
      if (d != 0 && d != c && is_subset(d, c)) minimal = false;
    }
    if (minimal) p.min_nonzero_closed.push_back(c);
  }
  return p;
}

/// Atoms that are closed elements.
inline std::vector<AtomSet> closed_atoms(const MTAlgebra& M) {
  std::vector<AtomSet> out;
  for (auto x : atoms(M)) {
    if (M.is_closed(x)) out.push_back(x);
  }
  return out;
}

/// The MT-algebra of elements below `a`, with opens u ∧ a; atoms are
/// re-indexed in increasing order.
inline MTAlgebra relativize(const MTAlgebra& M, AtomSet a) {
  if (a == 0) throw ZeroRelativization();
  const auto kept = to_vector(a);
  auto compress = [&](AtomSet s) {
    AtomSet r = 0;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      if (has(s, kept[i])) r |= bit(i);
    }
    return r;
  };
  std::vector<AtomSet> opens;
  for (auto u : M.opens()) opens.push_back(compress(u & a));
  return build_mt(kept.size(), std::move(opens));
}

}  // namespace mtkit
