#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "mtkit/embedding.hpp"
#include "mtkit/lattice.hpp"

namespace mtkit {

/// Lattice of downsets of `p` ordered by inclusion. Element i corresponds to
/// downsets(p)[i].
inline FiniteLattice downset_lattice(const FinitePoset& p) {
  const auto family = downsets(p);
  if (family.size() > kMaxLatticeElements) {
    throw CapacityExceeded("downset lattice has " + std::to_string(family.size()) +
                           " elements; the limit is 64");
  }
  return inclusion_lattice(family);
}

struct Completion {
  FiniteLattice lattice;
  LatticeEmbedding embedding;
  /// Lower halves of the cuts, aligned with lattice element ids.
  std::vector<ElementSet> cuts;
};

/// Dedekind-MacNeille completion: cuts (A, B) with A the lower bounds of B
/// and B the upper bounds of A, represented by A.
inline Completion macneille_completion(const FinitePoset& p) {
  // Closed lower halves are exactly the intersections of principal downsets.
  std::vector<ElementSet> cuts{p.all()};
  for (Element x = 0; x < p.size(); ++x) {
    const auto current = cuts;
    for (auto c : current) {
      const ElementSet m = c & p.down(x);
      if (std::find(cuts.begin(), cuts.end(), m) == cuts.end()) {
        cuts.push_back(m);
        if (cuts.size() > kMaxLatticeElements) {
          throw CapacityExceeded("MacNeille completion exceeds 64 elements");
        }
      }
    }
  }
  std::sort(cuts.begin(), cuts.end());
  auto lattice = inclusion_lattice(cuts);
  std::vector<Element> map(p.size());
  for (Element x = 0; x < p.size(); ++x) {
    map[x] = static_cast<Element>(std::find(cuts.begin(), cuts.end(), p.down(x)) - cuts.begin());
  }
  LatticeEmbedding e(p, lattice, std::move(map));
  return {std::move(lattice), std::move(e), std::move(cuts)};
}

/// Powerset lattice on `k` points; element ids are the subset masks.
inline FiniteLattice powerset_lattice(std::size_t k) {
  if (k > 6) throw CapacityExceeded("powerset of " + std::to_string(k) + " points exceeds 64 elements");
  const std::size_t n = std::size_t{1} << k;
  return validate_lattice(FinitePoset::from_relation(
      n, [](Element a, Element b) { return is_subset(a, b); }));
}

struct BooleanEnvelope {
  FiniteLattice lattice;       // powerset of the join-irreducibles
  LatticeEmbedding embedding;  // a -> { j in J(L) | j <= a }
  std::vector<Element> join_irreducibles;  // point i of the powerset
};

/// Boolean envelope of a finite distributive lattice through Birkhoff
/// duality: the powerset of its join-irreducibles.
inline BooleanEnvelope boolean_envelope(const FiniteLattice& L) {
  if (auto w = distributivity_failure(L)) {
    throw NotDistributive("distributivity fails at (" + std::to_string((*w)[0]) + ", " +
                          std::to_string((*w)[1]) + ", " + std::to_string((*w)[2]) + ")");
  }
  const auto J = to_vector(irreducibles(L).join_irreducibles);
  auto B = powerset_lattice(J.size());
  std::vector<Element> map(L.size());
  for (Element a = 0; a < L.size(); ++a) {
    Element m = 0;
    for (std::size_t i = 0; i < J.size(); ++i) {
      if (L.leq(J[i], a)) m |= static_cast<Element>(bit(i));
    }
    map[a] = m;
  }
  LatticeEmbedding e(L.order(), B, std::move(map));
  return {std::move(B), std::move(e), J};
}

}  // namespace mtkit
