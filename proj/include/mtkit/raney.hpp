#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "mtkit/bits.hpp"
#include "mtkit/embedding.hpp"
#include "mtkit/error.hpp"
#include "mtkit/frame.hpp"
#include "mtkit/lattice.hpp"
#include "mtkit/mt_algebra.hpp"

namespace mtkit {

class RaneyExtension;
RaneyExtension validate_raney(const FiniteLattice& C, const LatticeEmbedding& embed);

/// A coframe C with a join-closed, finite-meet-closed, meet-dense subframe L
/// whose joins are exact in C.
class RaneyExtension {
 public:
  const FiniteLattice& coframe() const { return embed_.target(); }
  const LatticeEmbedding& embedding() const { return embed_; }
  /// The frame L as a lattice in its own right.
  const FiniteLattice& frame() const { return frame_; }

 private:
  friend RaneyExtension validate_raney(const FiniteLattice& C, const LatticeEmbedding& embed);
  RaneyExtension(LatticeEmbedding embed, FiniteLattice frame)
      : embed_(std::move(embed)), frame_(std::move(frame)) {}

  LatticeEmbedding embed_;
  FiniteLattice frame_;
};

namespace detail {

/// Least subset of the image (as element ids) whose join is not exact in C.
inline std::optional<std::vector<Element>> inexact_join(const FiniteLattice& C, ElementSet image) {
  const auto items = to_vector(image);
  if (items.size() > kExhaustiveSubsetLimit) {
    // Exactness of finite joins follows from binary exactness.
    for (auto x : items) {
      for (auto y : items) {
        if (!is_exact_join(C, bit(x) | bit(y))) return std::vector<Element>{x, y};
      }
    }
    return std::nullopt;
  }
  const auto joins = subset_joins(C, items);
  std::vector<Element> rhs(joins.size());
  std::optional<std::size_t> worst;
  for (Element a = 0; a < C.size(); ++a) {
    rhs[0] = C.bottom();
    for (std::size_t s = 1; s < rhs.size(); ++s) {
      const auto low = static_cast<std::size_t>(std::countr_zero(s));
      rhs[s] = C.join(rhs[s & (s - 1)], C.meet(a, items[low]));
      if (C.meet(a, joins[s]) != rhs[s] && (!worst || s < *worst)) worst = s;
    }
  }
  if (!worst) return std::nullopt;
  std::vector<Element> out;
  for_each_bit(*worst, [&](Element i) { out.push_back(items[i]); });
  return out;
}

}  // namespace detail

inline RaneyExtension validate_raney(const FiniteLattice& C, const LatticeEmbedding& embed) {
  if (!(embed.target() == C)) throw NotAnEmbedding("embedding does not land in the coframe");
  if (!frame_coframe_flags(C).is_coframe) {
    throw NotCoframe("finite joins do not distribute over meets",
                     codistributivity_failure(C).value_or(std::vector<Element>{}));
  }
  const ElementSet image = embed.image();
  if (!has(image, C.bottom())) throw NotJoinClosed("bottom is not in L", {C.bottom()});
  if (!has(image, C.top())) throw NotJoinClosed("top is not in L", {C.top()});
  for (auto x : to_vector(image)) {
    for (auto y : to_vector(image)) {
      if (!has(image, C.join(x, y))) throw NotJoinClosed("L is not closed under joins", {x, y});
      if (!has(image, C.meet(x, y))) {
        throw NotJoinClosed("L is not closed under finite meets", {x, y});
      }
    }
  }
  if (auto s = detail::inexact_join(C, image)) {
    throw InexactJoin("a join of L is not exact in C", *s);
  }
  for (Element a = 0; a < C.size(); ++a) {
    if (C.meet_of(image & C.order().up(a)) != a) {
      throw NotMeetDense("element is not a meet of L-elements", {a});
    }
  }
  return RaneyExtension(embed, validate_lattice(embed.source()));
}

/// R(M) = (S(M), O(M)) with the inclusion of opens into saturated elements.
inline RaneyExtension raney_of_mt(const MTAlgebra& M) {
  const auto sat = saturated_elements(M);
  if (sat.size() > kMaxLatticeElements) throw CapacityExceeded("S(M) exceeds 64 elements");
  const auto C = inclusion_lattice(sat);
  const auto L = open_frame(M);
  std::vector<Element> map;
  for (auto u : M.opens()) {
    map.push_back(static_cast<Element>(std::lower_bound(sat.begin(), sat.end(), u) - sat.begin()));
  }
  return validate_raney(C, LatticeEmbedding(L.lattice().order(), C, std::move(map)));
}

/// Strongly exact filters of L ordered by reverse inclusion, with L embedded
/// as principal filters. Element i of the coframe is strongly_exact_filters(L)[i].
inline RaneyExtension filt_se_extension(const FiniteLattice& L) {
  const FrameView frame(L);
  const auto fs = strongly_exact_filters(L);
  if (fs.size() > kMaxLatticeElements) throw CapacityExceeded("Filt_SE(L) exceeds 64 elements");
  const auto C = validate_lattice(FinitePoset::from_relation(fs.size(), [&](Element i, Element j) {
    return is_subset(fs[j].members, fs[i].members);
  }));
  std::vector<Element> map;
  for (Element a = 0; a < L.size(); ++a) {
    const auto p = principal_filter(L, a);
    const auto it = std::find(fs.begin(), fs.end(), p);
    if (it == fs.end()) throw std::logic_error("principal filter is not strongly exact");
    map.push_back(static_cast<Element>(it - fs.begin()));
  }
  return validate_raney(C, LatticeEmbedding(L.order(), C, std::move(map)));
}

struct RaneyFlags {
  bool spatial = false;
  bool sober = false;
  friend bool operator==(const RaneyFlags&, const RaneyFlags&) = default;
};

/// Spatial: C is join-generated by its completely join-primes. Sober: every
/// completely prime filter of L is ↑p ∩ L for a completely join-prime p.
inline RaneyFlags raney_flags(const RaneyExtension& R) {
  const auto& C = R.coframe();
  const auto& e = R.embedding();
  const ElementSet cjp = completely_join_primes(C);
  RaneyFlags f;
  f.spatial = density_flags(C, cjp).join_dense;
  f.sober = true;
  for (const auto& P : completely_prime_filters(R.frame())) {
    bool matched = false;
    for_each_bit(cjp, [&](Element p) {
      ElementSet above = 0;
      for (Element l = 0; l < R.frame().size(); ++l) {
        if (C.leq(p, e(l))) above |= bit(l);
      }
      matched = matched || above == P.members;
    });
    if (!matched) f.sober = false;
  }
  return f;
}

inline bool is_sober_raney(const RaneyExtension& R) { return raney_flags(R).sober; }

/// x = p ∧ ¬⋁{u ∈ O(M) | p ≰ u} for a completely join-prime p of S(M).
/// In a T0-algebra x is an atom whose saturation is p.
inline AtomSet cjp_to_atom(const MTAlgebra& M, AtomSet p) {
  const auto sat = saturated_elements(M);
  const auto it = std::lower_bound(sat.begin(), sat.end(), p);
  if (it == sat.end() || *it != p) throw NotCJP("element is not saturated");
  const auto C = inclusion_lattice(sat);
  const auto id = static_cast<Element>(it - sat.begin());
  if (!has(completely_join_primes(C), id)) throw NotCJP("element is not completely join-prime");
  AtomSet away = 0;
  for (auto u : M.opens()) {
    if (!is_subset(p, u)) away |= u;
  }
  return p & M.neg(away);
}

}  // namespace mtkit
