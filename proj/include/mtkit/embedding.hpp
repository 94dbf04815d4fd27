#pragma once

#include <utility>
#include <vector>

#include "mtkit/error.hpp"
#include "mtkit/lattice.hpp"

namespace mtkit {

/// An order embedding of a finite poset into a finite lattice:
/// map(a) <= map(b) iff a <= b.
class LatticeEmbedding {
 public:
  LatticeEmbedding(FinitePoset source, FiniteLattice target, std::vector<Element> map)
      : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
    if (map_.size() != source_.size()) throw NotAnEmbedding("map size differs from source size");
    for (auto x : map_) {
      if (x >= target_.size()) throw NotAnEmbedding("map leaves the target");
    }
    for (Element a = 0; a < source_.size(); ++a) {
      for (Element b = 0; b < source_.size(); ++b) {
        if (source_.leq(a, b) != target_.leq(map_[a], map_[b])) {
          throw NotAnEmbedding("map is not an order embedding at (" + std::to_string(a) + ", " +
                               std::to_string(b) + ")");
        }
      }
    }
  }

  const FinitePoset& source() const { return source_; }
  const FiniteLattice& target() const { return target_; }
  const std::vector<Element>& map() const { return map_; }
  Element operator()(Element a) const { return map_[a]; }

  ElementSet image() const { return to_mask(map_); }

 private:
  FinitePoset source_;
  FiniteLattice target_;
  std::vector<Element> map_;
};

/// Right adjoint g of a join-preserving embedding e: e(a) <= b iff a <= g(b).
inline std::vector<Element> right_adjoint(const LatticeEmbedding& e) {
  const auto src = validate_lattice(e.source());
  const auto& tgt = e.target();
  if (e(src.bottom()) != tgt.bottom()) throw NotJoinPreserving("bottom is not preserved");
  for (Element a = 0; a < src.size(); ++a) {
    for (Element b = 0; b < src.size(); ++b) {
      if (e(src.join(a, b)) != tgt.join(e(a), e(b))) {
        throw NotJoinPreserving("join of " + std::to_string(a) + " and " + std::to_string(b) +
                                " is not preserved");
      }
    }
  }
  std::vector<Element> g(tgt.size());
  for (Element b = 0; b < tgt.size(); ++b) {
    ElementSet below = 0;
    for (Element a = 0; a < src.size(); ++a) {
      if (tgt.leq(e(a), b)) below |= bit(a);
    }
    g[b] = src.join_of(below);
  }
  return g;
}

}  // namespace mtkit
