#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mtkit/bits.hpp"
#include "mtkit/error.hpp"

namespace mtkit {

/// Largest atom count accepted by build_mt; interior and closure are
/// tabulated over all 2^n elements.
inline constexpr std::size_t kMaxAtoms = 20;

class MTAlgebra;
MTAlgebra build_mt(std::size_t atom_count, std::vector<AtomSet> opens);

/// A finite MT-algebra: the powerset of `atom_count` atoms with the interior
/// operator of a topology given by its open sets.
class MTAlgebra {
 public:
  std::size_t atom_count() const { return atom_count_; }
  std::size_t element_count() const { return std::size_t{1} << atom_count_; }
  AtomSet top() const { return full_mask(atom_count_); }

  AtomSet interior(AtomSet a) const { return interior_[a]; }
  AtomSet closure(AtomSet a) const { return closure_[a]; }
  AtomSet neg(AtomSet a) const { return top() & ~a; }

  bool is_open(AtomSet a) const { return interior_[a] == a; }
  bool is_closed(AtomSet a) const { return closure_[a] == a; }

  /// Open elements in increasing numeric order.
  const std::vector<AtomSet>& opens() const { return opens_; }
  /// Closed elements in increasing numeric order.
  const std::vector<AtomSet>& closeds() const { return closeds_; }

  std::optional<std::size_t> open_index(AtomSet a) const {
    auto it = std::lower_bound(opens_.begin(), opens_.end(), a);
    if (it == opens_.end() || *it != a) return std::nullopt;
    return static_cast<std::size_t>(it - opens_.begin());
  }

  friend bool operator==(const MTAlgebra& a, const MTAlgebra& b) {
    return a.atom_count_ == b.atom_count_ && a.opens_ == b.opens_;
  }

 private:
  friend MTAlgebra build_mt(std::size_t atom_count, std::vector<AtomSet> opens);
  MTAlgebra() = default;

  std::size_t atom_count_ = 0;
  std::vector<AtomSet> opens_;
  std::vector<AtomSet> closeds_;
  std::vector<AtomSet> interior_;
  std::vector<AtomSet> closure_;
};

/// First violation of the interior axioms, described in words, or nullopt.
inline std::optional<std::string> kuratowski_violation(const MTAlgebra& M) {
  const auto n = M.element_count();
  if (M.interior(M.top()) != M.top()) return "interior of top is not top";
  for (AtomSet a = 0; a < n; ++a) {
    const AtomSet ia = M.interior(a);
    if (!is_subset(ia, a)) return "interior of " + std::to_string(a) + " is not below it";
    if (M.interior(ia) != ia) return "interior of " + std::to_string(a) + " is not idempotent";
    if (M.closure(a) != M.neg(M.interior(M.neg(a)))) {
      return "closure of " + std::to_string(a) + " is not the dual of interior";
    }
    for (AtomSet b = a; b < n; ++b) {
      if (M.interior(a & b) != (ia & M.interior(b))) {
        return "interior does not preserve the meet of " + std::to_string(a) + " and " +
               std::to_string(b);
      }
    }
  }
  return std::nullopt;
}

/// Validates `opens` as a topology on `atom_count` points and tabulates the
/// interior (largest open below) and closure (its de Morgan dual).
inline MTAlgebra build_mt(std::size_t atom_count, std::vector<AtomSet> opens) {
  if (atom_count > kMaxAtoms) {
    throw CapacityExceeded(std::to_string(atom_count) + " atoms exceeds the limit of " +
                           std::to_string(kMaxAtoms));
  }
  const AtomSet top = full_mask(atom_count);
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  for (auto u : opens) {
    if (!is_subset(u, top)) throw NotATopology("open set mentions a missing atom", {u});
  }
  if (opens.empty() || opens.front() != 0) throw NotATopology("empty set is not open", {0});
  if (opens.back() != top) throw NotATopology("full set is not open", {top});
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = i + 1; j < opens.size(); ++j) {
      const AtomSet u = opens[i], v = opens[j];
      if (!std::binary_search(opens.begin(), opens.end(), u | v)) {
        throw NotATopology("union of open sets is not open", {u, v});
      }
      if (!std::binary_search(opens.begin(), opens.end(), u & v)) {
        throw NotATopology("intersection of open sets is not open", {u, v});
      }
    }
  }
  MTAlgebra M;
  M.atom_count_ = atom_count;
  M.opens_ = std::move(opens);
  const std::size_t n = std::size_t{1} << atom_count;
  M.interior_.assign(n, 0);
  for (AtomSet a = 0; a < n; ++a) {
    for (auto u : M.opens_) {
      if (is_subset(u, a)) M.interior_[a] |= u;
    }
  }
  M.closure_.assign(n, 0);
  for (AtomSet a = 0; a < n; ++a) M.closure_[a] = top & ~M.interior_[top & ~a];
  for (auto u : M.opens_) M.closeds_.push_back(top & ~u);
  std::sort(M.closeds_.begin(), M.closeds_.end());
  if (atom_count <= 10) {
    if (auto v = kuratowski_violation(M)) throw std::logic_error("interior table: " + *v);
  }
  return M;
}

/// Meets of all families of open elements, in increasing numeric order.
inline std::vector<AtomSet> saturated_elements(const MTAlgebra& M) {
  std::vector<AtomSet> sat{M.top()};
  for (auto u : M.opens()) {
    const auto current = sat;
    for (auto s : current) {
      const AtomSet m = s & u;
      if (std::find(sat.begin(), sat.end(), m) == sat.end()) sat.push_back(m);
    }
  }
  std::sort(sat.begin(), sat.end());
  return sat;
}

/// Meet of all open elements above `a`.
inline AtomSet saturation(const MTAlgebra& M, AtomSet a) {
  AtomSet s = M.top();
  for (auto u : M.opens()) {
    if (is_subset(a, u)) s &= u;
  }
  return s;
}

/// Singleton atoms of the carrier.
inline std::vector<AtomSet> atoms(const MTAlgebra& M) {
  std::vector<AtomSet> out;
  for (std::size_t i = 0; i < M.atom_count(); ++i) out.push_back(bit(i));
  return out;
}

/// Sierpiński space: atoms x = 0, y = 1 with {y} open.
inline MTAlgebra sierpinski() { return build_mt(2, {0b00, 0b10, 0b11}); }

inline MTAlgebra discrete_mt(std::size_t n) {
  std::vector<AtomSet> opens;
  for (AtomSet a = 0; a < (AtomSet{1} << n); ++a) opens.push_back(a);
  return build_mt(n, std::move(opens));
}

inline MTAlgebra indiscrete_mt(std::size_t n) { return build_mt(n, {0, full_mask(n)}); }

}  // namespace mtkit
