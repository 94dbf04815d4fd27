#pragma once

#include <algorithm>
#include <optional>
#include <tuple>
#include <vector>

#include "mtkit/bits.hpp"
#include "mtkit/mt_algebra.hpp"

namespace mtkit {

/// Image of an element under an atom map.
inline AtomSet map_atoms(const std::vector<Element>& map, AtomSet a) {
  AtomSet r = 0;
  for_each_bit(a, [&](Element i) { r |= bit(map[i]); });
  return r;
}

/// True iff `map` is a bijection of atoms carrying opens(M) onto opens(N).
inline bool is_mt_isomorphism(const MTAlgebra& M, const MTAlgebra& N,
                              const std::vector<Element>& map) {
  if (M.atom_count() != N.atom_count() || map.size() != M.atom_count()) return false;
  if (to_mask(map) != N.top()) return false;
  if (M.opens().size() != N.opens().size()) return false;
  for (auto u : M.opens()) {
    if (!N.is_open(map_atoms(map, u))) return false;
  }
  return true;
}

/// Lexicographically least atom bijection carrying opens(M) onto opens(N).
/// Atoms are matched by neighbourhood fingerprints and the search backtracks
/// on the specialization order, which determines a finite topology.
inline std::optional<std::vector<Element>> mt_isomorphic(const MTAlgebra& M, const MTAlgebra& N) {
  const auto n = M.atom_count();
  if (n != N.atom_count() || M.opens().size() != N.opens().size()) return std::nullopt;
  auto neighbourhoods = [](const MTAlgebra& A) {
    std::vector<AtomSet> nb(A.atom_count(), A.top());
    for (auto u : A.opens()) {
      for_each_bit(u, [&](Element i) { nb[i] &= u; });
    }
    return nb;
  };
  const auto nm = neighbourhoods(M), nn = neighbourhoods(N);
  auto fingerprint = [](const MTAlgebra& A, const std::vector<AtomSet>& nb, Element x) {
    int containing = 0;
    for (auto u : A.opens()) containing += has(u, x) ? 1 : 0;
    int above = 0;
    for (auto y : nb) above += has(y, x) ? 1 : 0;
    return std::tuple{containing, count(nb[x]), above};
  };
  std::vector<Element> map(n, 0);
  AtomSet used = 0;
  auto rec = [&](auto&& self, Element i) -> bool {
    if (i == n) return is_mt_isomorphism(M, N, map);
    for (Element j = 0; j < n; ++j) {
      if (has(used, j) || fingerprint(M, nm, i) != fingerprint(N, nn, j)) continue;
      bool ok = true;
      for (Element p = 0; p < i && ok; ++p) {
        ok = has(nm[i], p) == has(nn[j], map[p]) && has(nm[p], i) == has(nn[map[p]], j);
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
