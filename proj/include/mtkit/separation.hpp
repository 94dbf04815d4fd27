#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mtkit/bits.hpp"
#include "mtkit/mt_algebra.hpp"

namespace mtkit {

/// A failing instance of an axiom: the rule name and the elements that
/// witness the failure, in the order the rule quantifies them.
struct Refutation {
  std::string rule;
  std::vector<AtomSet> args;

  friend bool operator==(const Refutation&, const Refutation&) = default;
};

struct ElementClass {
  bool t0 = false;
  bool t_half = false;
  bool t1 = false;
  bool t2 = false;
  friend bool operator==(const ElementClass&, const ElementClass&) = default;
};

/// a ≺ b iff ◇a <= □b.
inline bool prec(const MTAlgebra& M, AtomSet a, AtomSet b) {
  return is_subset(M.closure(a), M.interior(b));
}

/// Meet of the closures of all opens above `a`.
inline AtomSet t2_hull(const MTAlgebra& M, AtomSet a) {
  AtomSet r = M.top();
  for (auto u : M.opens()) {
    if (is_subset(a, u)) r &= M.closure(u);
  }
  return r;
}

inline ElementClass element_class(const MTAlgebra& M, AtomSet a) {
  ElementClass ec;
  const auto sat = saturated_elements(M);
  for (auto s : sat) {
    for (auto c : M.closeds()) {
      if ((s & c) == a) ec.t0 = true;
    }
  }
  for (auto u : M.opens()) {
    for (auto c : M.closeds()) {
      if ((u & c) == a) ec.t_half = true;
    }
  }
  ec.t1 = M.is_closed(a);
  ec.t2 = t2_hull(M, a) == a;
  return ec;
}

/// Membership tables (indexed by element) of the T0, T1/2, T1 and T2 elements.
struct ElementTables {
  std::vector<char> t0, t_half, t1, t2;
};

inline ElementTables element_tables(const MTAlgebra& M) {
  const auto n = M.element_count();
  ElementTables t{std::vector<char>(n, 0), std::vector<char>(n, 0), std::vector<char>(n, 0),
                  std::vector<char>(n, 0)};
  for (auto s : saturated_elements(M)) {
    for (auto c : M.closeds()) t.t0[s & c] = 1;
  }
  for (auto u : M.opens()) {
    for (auto c : M.closeds()) t.t_half[u & c] = 1;
  }
  for (AtomSet a = 0; a < n; ++a) {
    t.t1[a] = M.is_closed(a);
    t.t2[a] = t2_hull(M, a) == a;
  }
  return t;
}

/// Least element that is not the join of the members below it.
inline std::optional<AtomSet> join_density_failure(const MTAlgebra& M,
                                                   const std::vector<char>& member) {
  const auto n = M.element_count();
  std::vector<AtomSet> below(n, 0);
  for (AtomSet a = 0; a < n; ++a) {
    if (member[a]) below[a] = a;
  }
  // below[a] = join of members under a, by superset-sum over submasks.
  for (std::size_t i = 0; i < M.atom_count(); ++i) {
    for (AtomSet a = 0; a < n; ++a) {
      if (has(a, i)) below[a] |= below[a & ~bit(i)];
    }
  }
  for (AtomSet a = 0; a < n; ++a) {
    if (below[a] != a) return a;
  }
  return std::nullopt;
}

/// The greatest interpolative subrelation of ≺ on open elements, with the
/// derived relation a ≺≺ b on arbitrary elements.
class PrecPrec {
 public:
  explicit PrecPrec(const MTAlgebra& M) : opens_(M.opens()), k_(opens_.size()), rel_(k_ * k_, 0) {
    for (std::size_t i = 0; i < k_; ++i) {
      for (std::size_t j = 0; j < k_; ++j) rel_[i * k_ + j] = prec(M, opens_[i], opens_[j]);
    }
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t i = 0; i < k_; ++i) {
        for (std::size_t j = 0; j < k_; ++j) {
          if (rel_[i * k_ + j] && !interpolant(i, j)) {
            rel_[i * k_ + j] = 0;
            changed = true;
          }
        }
      }
    }
  }

  /// Relation between the i-th and j-th open.
  bool related(std::size_t i, std::size_t j) const { return rel_[i * k_ + j] != 0; }
  const std::vector<AtomSet>& opens() const { return opens_; }

  /// Least open index w with i R w R j.
  std::optional<std::size_t> interpolant(std::size_t i, std::size_t j) const {
    for (std::size_t w = 0; w < k_; ++w) {
      if (rel_[i * k_ + w] && rel_[w * k_ + j]) return w;
    }
    return std::nullopt;
  }

  struct Witness {
    AtomSet a = 0;
    AtomSet b = 0;
    std::vector<AtomSet> chain;
  };

  /// Lexicographically least chain a <= u ≺ w ≺ v <= b with u R w R v.
  std::optional<Witness> witness(AtomSet a, AtomSet b) const {
    for (std::size_t i = 0; i < k_; ++i) {
      if (!is_subset(a, opens_[i])) continue;
      for (std::size_t j = 0; j < k_; ++j) {
        if (!is_subset(opens_[j], b) || !related(i, j)) continue;
        const auto w = *interpolant(i, j);
        return Witness{a, b, {opens_[i], opens_[w], opens_[j]}};
      }
    }
    return std::nullopt;
  }

  bool holds(AtomSet a, AtomSet b) const { return witness(a, b).has_value(); }

 private:
  std::vector<AtomSet> opens_;
  std::size_t k_;
  std::vector<char> rel_;
};

using PrecPrecWitness = PrecPrec::Witness;

inline std::optional<PrecPrecWitness> precprec(const MTAlgebra& M, AtomSet a, AtomSet b) {
  return PrecPrec(M).witness(a, b);
}

/// Joins of the opens v with pred(v), compared against each open u.
template <class Pred>
std::optional<AtomSet> open_approximation_failure(const MTAlgebra& M, Pred&& pred) {
  for (auto u : M.opens()) {
    AtomSet j = 0;
    for (auto v : M.opens()) {
      if (pred(v, u)) j |= v;
    }
    if (j != u) return u;
  }
  return std::nullopt;
}

inline std::optional<Refutation> t0_refutation(const MTAlgebra& M, const ElementTables& t) {
  if (auto a = join_density_failure(M, t.t0)) return Refutation{"t0", {*a}};
  return std::nullopt;
}
inline std::optional<Refutation> t_half_refutation(const MTAlgebra& M, const ElementTables& t) {
  if (auto a = join_density_failure(M, t.t_half)) return Refutation{"t_half", {*a}};
  return std::nullopt;
}
inline std::optional<Refutation> t1_refutation(const MTAlgebra& M, const ElementTables& t) {
  if (auto a = join_density_failure(M, t.t1)) return Refutation{"t1", {*a}};
  return std::nullopt;
}
inline std::optional<Refutation> t2_refutation(const MTAlgebra& M, const ElementTables& t) {
  if (auto a = join_density_failure(M, t.t2)) return Refutation{"t2", {*a}};
  return std::nullopt;
}

/// Higher axioms are only defined on T1-algebras; a non-T1 algebra is
/// refuted by the T1 witness.
inline std::optional<Refutation> t3_refutation(const MTAlgebra& M, const ElementTables& t) {
  if (auto r = t1_refutation(M, t)) return Refutation{"t3", r->args};
  auto u = open_approximation_failure(M, [&](AtomSet v, AtomSet w) { return prec(M, v, w); });
  if (u) return Refutation{"t3", {*u}};
  return std::nullopt;
}

inline std::optional<Refutation> t3half_refutation(const MTAlgebra& M, const ElementTables& t,
                                                   const PrecPrec& pp) {
  if (auto r = t1_refutation(M, t)) return Refutation{"t3half", r->args};
  auto u = open_approximation_failure(M, [&](AtomSet v, AtomSet w) { return pp.holds(v, w); });
  if (u) return Refutation{"t3half", {*u}};
  return std::nullopt;
}

/// Disjoint closed c, d without disjoint open neighbourhoods.
inline std::optional<std::pair<AtomSet, AtomSet>> normality_failure(const MTAlgebra& M) {
  for (auto c : M.closeds()) {
    for (auto d : M.closeds()) {
      if ((c & d) != 0) continue;
      bool separated = false;
      for (auto u : M.opens()) {
        if (!is_subset(c, u)) continue;
        for (auto v : M.opens()) {
          if ((u & v) == 0 && is_subset(d, v)) {
            separated = true;
            break;
          }
        }
        if (separated) break;
      }
      if (!separated) return std::pair{c, d};
    }
  }
  return std::nullopt;
}

inline std::optional<Refutation> t4_refutation(const MTAlgebra& M, const ElementTables& t) {
  if (auto r = t1_refutation(M, t)) return Refutation{"t4", r->args};
  if (auto cd = normality_failure(M)) return Refutation{"t4", {cd->first, cd->second}};
  return std::nullopt;
}

inline std::optional<Refutation> nt1_refutation(const MTAlgebra& M) {
  const auto n = M.element_count();
  for (AtomSet a = 0; a < n; ++a) {
    for (AtomSet b = 0; b < n; ++b) {
      if (is_subset(a, b)) continue;
      bool found = false;
      for (auto u : M.opens()) {
        if (!is_subset(a, u) && is_subset(b, u)) {
          found = true;
          break;
        }
      }
      if (!found) return Refutation{"nt1", {a, b}};
    }
  }
  return std::nullopt;
}

inline std::optional<Refutation> nt2_refutation(const MTAlgebra& M) {
  std::vector<std::pair<AtomSet, AtomSet>> disjoint;
  for (auto u : M.opens()) {
    for (auto v : M.opens()) {
      if ((u & v) == 0 && u != 0 && v != 0) disjoint.emplace_back(u, v);
    }
  }
  const auto n = M.element_count();
  for (AtomSet a = 1; a < n; ++a) {
    for (AtomSet b = 1; b < n; ++b) {
      if ((a & b) != 0) continue;
      bool found = false;
      for (auto [u, v] : disjoint) {
        if ((a & u) != 0 && (b & v) != 0) {
          found = true;
          break;
        }
      }
      if (!found) return Refutation{"nt2", {a, b}};
    }
  }
  return std::nullopt;
}

inline std::optional<Refutation> nt3_refutation(const MTAlgebra& M) {
  const auto n = M.element_count();
  for (AtomSet a = 1; a < n; ++a) {
    for (auto c : M.closeds()) {
      if ((a & c) != 0) continue;
      bool found = false;
      for (auto u : M.opens()) {
        if ((a & u) == 0) continue;
        for (auto v : M.opens()) {
          if ((u & v) == 0 && is_subset(c, v)) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (!found) return Refutation{"nt3", {a, c}};
    }
  }
  return std::nullopt;
}

/// The dyadic family of the completely-regular axiom is realised by a pair
/// (u0, u1) of the interpolative relation: u0 meets a, u1 misses c.
inline std::optional<Refutation> nt3half_refutation(const MTAlgebra& M, const PrecPrec& pp) {
  const auto& opens = pp.opens();
  const auto n = M.element_count();
  for (AtomSet a = 1; a < n; ++a) {
    for (auto c : M.closeds()) {
      if ((a & c) != 0) continue;
      bool found = false;
      for (std::size_t i = 0; i < opens.size() && !found; ++i) {
        if ((a & opens[i]) == 0) continue;
        for (std::size_t j = 0; j < opens.size(); ++j) {
          if ((opens[j] & c) == 0 && pp.related(i, j)) {
            found = true;
            break;
          }
        }
      }
      if (!found) return Refutation{"nt3half", {a, c}};
    }
  }
  return std::nullopt;
}

inline std::optional<Refutation> nt4_refutation(const MTAlgebra& M) {
  if (auto cd = normality_failure(M)) return Refutation{"nt4", {cd->first, cd->second}};
  return std::nullopt;
}

struct SeparationFlags {
  bool t0 = false, t_half = false, t1 = false, t2 = false, t3 = false, t3half = false, t4 = false;
  friend bool operator==(const SeparationFlags&, const SeparationFlags&) = default;
};

struct NtFlags {
  bool nt1 = false, nt2 = false, nt3 = false, nt3half = false, nt4 = false;
  friend bool operator==(const NtFlags&, const NtFlags&) = default;
};

inline SeparationFlags separation_profile(const MTAlgebra& M) {
  const auto t = element_tables(M);
  const PrecPrec pp(M);
  return {!t0_refutation(M, t),     !t_half_refutation(M, t), !t1_refutation(M, t),
          !t2_refutation(M, t),     !t3_refutation(M, t),     !t3half_refutation(M, t, pp),
          !t4_refutation(M, t)};
}

inline NtFlags nt_profile(const MTAlgebra& M) {
  const PrecPrec pp(M);
  return {!nt1_refutation(M), !nt2_refutation(M), !nt3_refutation(M),
          !nt3half_refutation(M, pp), !nt4_refutation(M)};
}

}  // namespace mtkit
