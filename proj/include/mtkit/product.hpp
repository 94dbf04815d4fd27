#pragma once

#include <stdexcept>
#include <vector>

#include "mtkit/bits.hpp"
#include "mtkit/lattice.hpp"
#include "mtkit/mt_algebra.hpp"

namespace mtkit {

/// Distributive and complemented.
inline bool is_boolean(const FiniteLattice& L) {
  if (!is_distributive(L)) return false;
  for (Element a = 0; a < L.size(); ++a) {
    bool complemented = false;
    for (Element b = 0; b < L.size() && !complemented; ++b) {
      complemented = L.meet(a, b) == L.bottom() && L.join(a, b) == L.top();
    }
    if (!complemented) return false;
  }
  return true;
}

/// The MT-algebra on B0 × B0 with interior □(a, b) = (a ∧ b, b).
///
/// Atoms of B0 × B0 are (x, 0) and (0, x) for atoms x of B0; with k atoms in
/// B0, atom i < k stands for (x_i, 0) and atom k + i for (0, x_i). The opens
/// are the pairs (a, b) with a <= b.
inline MTAlgebra product_mt(const FiniteLattice& B0) {
  if (!is_boolean(B0)) throw NotBoolean("product construction needs a boolean algebra");
  const auto atom_ids = to_vector(irreducibles(B0).atoms);
  const std::size_t k = atom_ids.size();
  auto atoms_below = [&](Element a) {
    AtomSet m = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (B0.leq(atom_ids[i], a)) m |= bit(i);
    }
    return m;
  };
  auto pair_mask = [&](Element a, Element b) { return atoms_below(a) | (atoms_below(b) << k); };

  std::vector<AtomSet> opens;
  for (Element a = 0; a < B0.size(); ++a) {
    for (Element b = 0; b < B0.size(); ++b) {
      if (B0.leq(a, b)) opens.push_back(pair_mask(a, b));
    }
  }
  auto M = build_mt(2 * k, std::move(opens));
  for (Element a = 0; a < B0.size(); ++a) {
    for (Element b = 0; b < B0.size(); ++b) {
      if (M.interior(pair_mask(a, b)) != pair_mask(B0.meet(a, b), b)) {
        throw std::logic_error("product interior disagrees with (a ∧ b, b)");
      }
    }
  }
  return M;
}

}  // namespace mtkit
