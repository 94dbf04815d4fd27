#pragma once

#include <vector>

#include "mtkit/mtkit.hpp"

namespace fixtures {

using namespace mtkit;

inline FinitePoset chain_poset(std::size_t n) {
  return FinitePoset::from_relation(n, [](Element a, Element b) { return a <= b; });
}

inline FinitePoset antichain(std::size_t n) {
  return FinitePoset::from_relation(n, [](Element a, Element b) { return a == b; });
}

inline FiniteLattice chain(std::size_t n) { return validate_lattice(chain_poset(n)); }

/// Bottom 0, middles 1..3, top 4.
inline FiniteLattice m3() {
  return validate_lattice(
      FinitePoset::from_pairs(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}));
}

/// Bottom 0, a = 1 < b = 2 on one side, c = 3 on the other, top 4.
inline FiniteLattice n5() {
  return validate_lattice(FinitePoset::from_pairs(5, {{0, 1}, {1, 2}, {0, 3}, {2, 4}, {3, 4}}));
}

/// The discrete 2-point MT-algebra.
inline MTAlgebra discrete2() { return discrete_mt(2); }

/// Every topology on at most `n` points.
inline std::vector<MTAlgebra> topologies_upto(std::size_t n) {
  std::vector<MTAlgebra> out;
  for (std::size_t k = 0; k <= n; ++k) {
    for (auto& M : enumerate_topologies(k).algebras) out.push_back(std::move(M));
  }
  return out;
}

/// Downset frames of every poset on at most `n` points.
inline std::vector<FiniteLattice> frames_upto(std::size_t n) {
  std::vector<FiniteLattice> out;
  for (std::size_t k = 0; k <= n; ++k) {
    for (auto& L : frames_from_posets(k).frames) out.push_back(std::move(L));
  }
  return out;
}

/// Product MT-algebras over boolean algebras of 1, 2 and 4 elements.
inline std::vector<MTAlgebra> small_products() {
  return {product_mt(powerset_lattice(0)), product_mt(powerset_lattice(1)),
          product_mt(powerset_lattice(2))};
}

}  // namespace fixtures
