#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "mtkit/compactness.hpp"
#include "mtkit/frame.hpp"
#include "mtkit/funayama.hpp"
#include "mtkit/isomorphism.hpp"
#include "mtkit/lattice.hpp"
#include "mtkit/mt_algebra.hpp"
#include "mtkit/raney.hpp"
#include "mtkit/separation.hpp"

namespace mtkit {

/// One theorem instance with both sides evaluated separately.
struct TheoremCheck {
  enum class Kind { equivalence, implication };

  std::string name;
  Kind kind = Kind::equivalence;
  bool lhs = false;
  bool rhs = false;
  /// How the right-hand side was established, when that matters (iso path).
  std::string note;

  bool holds() const { return kind == Kind::equivalence ? lhs == rhs : (!lhs || rhs); }
};

struct TheoremReport {
  std::vector<TheoremCheck> checks;

  bool all_hold() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.holds(); });
  }
  const TheoremCheck* find(const std::string& name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
};

/// Outcome of comparing M with one of its envelopes.
struct EnvelopeMatch {
  bool isomorphic = false;
  /// "canonical", "search" or "none".
  std::string path;
};

/// Compare M with an envelope whose atom i is the join-irreducible
/// jis[i] of some lattice of saturated/open elements. The canonical map
/// sends each atom x to the index of its saturation; search is the fallback.
inline EnvelopeMatch match_envelope(const MTAlgebra& M, const MTAlgebra& envelope,
                                    const std::vector<AtomSet>& jis) {
  if (M.atom_count() == envelope.atom_count()) {
    std::vector<Element> map;
    for (std::size_t x = 0; x < M.atom_count(); ++x) {
      const auto it = std::find(jis.begin(), jis.end(), saturation(M, bit(x)));
      if (it == jis.end()) break;
      map.push_back(static_cast<Element>(it - jis.begin()));
    }
    if (map.size() == M.atom_count() && is_mt_isomorphism(M, envelope, map)) {
      return {true, "canonical"};
    }
  }
  if (mt_isomorphic(M, envelope)) return {true, "search"};
  return {false, "none"};
}

namespace detail {

/// Elements of `family` at the join-irreducible positions of `L`, where
/// element i of L is family[i].
inline std::vector<AtomSet> irreducible_members(const FiniteLattice& L,
                                                const std::vector<AtomSet>& family) {
  std::vector<AtomSet> out;
  for_each_bit(irreducibles(L).join_irreducibles, [&](Element j) { out.push_back(family[j]); });
  return out;
}

}  // namespace detail

/// M ≅ 𝓕O(M), compared to the T½ flag.
inline EnvelopeMatch open_envelope_match(const MTAlgebra& M) {
  const auto frame = open_frame(M);
  const auto env = funayama_of_frame(frame.lattice());
  return match_envelope(M, env.envelope, detail::irreducible_members(frame.lattice(), M.opens()));
}

/// M ≅ 𝓕R(M), compared to the T0 flag.
inline EnvelopeMatch raney_envelope_match(const MTAlgebra& M) {
  const auto R = raney_of_mt(M);
  const auto env = funayama_of_raney(R);
  return match_envelope(M, env.envelope,
                        detail::irreducible_members(R.coframe(), saturated_elements(M)));
}

inline TheoremReport theorem_suite(const MTAlgebra& M) {
  using K = TheoremCheck::Kind;
  const auto sep = separation_profile(M);
  const auto comp = compactness_profile(M);
  const auto st = structure_profile(M);
  TheoremReport r;

  const auto open_match = open_envelope_match(M);
  r.checks.push_back({"t_half<=>iso_open_envelope", K::equivalence, sep.t_half,
                      open_match.isomorphic, open_match.path});
  const auto raney_match = raney_envelope_match(M);
  r.checks.push_back({"t0<=>iso_raney_envelope", K::equivalence, sep.t0, raney_match.isomorphic,
                      raney_match.path});

  r.checks.push_back({"compact_t1=>spatial", K::implication, comp.compact && sep.t1, st.spatial, ""});
  r.checks.push_back(
      {"n_locally_compact_t1=>spatial", K::implication, comp.n_locally_compact && sep.t1, st.spatial, ""});
  r.checks.push_back(
      {"locally_compact_t_half=>spatial", K::implication, comp.locally_compact && sep.t_half, st.spatial, ""});

  const auto rf = raney_flags(raney_of_mt(M));
  r.checks.push_back({"t0=>(spatial<=>raney_spatial)", K::implication, sep.t0, st.spatial == rf.spatial, ""});
  r.checks.push_back({"t0=>(sober<=>raney_sober)", K::implication, sep.t0, st.sober == rf.sober, ""});
  return r;
}

/// Theorems about a frame L and its envelope 𝓕L.
inline TheoremReport theorem_suite(const FiniteLattice& L) {
  using K = TheoremCheck::Kind;
  const auto env = funayama_of_frame(L);
  const auto& F = env.envelope;
  const auto sep = separation_profile(F);
  TheoremReport r;

  const auto opens = open_frame(F);
  const bool iso = order_isomorphism(opens.lattice().order(), L.order()).has_value();
  r.checks.push_back({"opens_of_envelope_iso_frame", K::implication, true, iso, ""});
  r.checks.push_back({"envelope_is_t_half", K::implication, true, sep.t_half, ""});
  r.checks.push_back({"envelope_t1<=>subfit", K::equivalence, sep.t1, is_subfit(L), ""});

  const bool compact = compactness_profile(F).compact;
  r.checks.push_back(
      {"compact_subfit=>spatial", K::implication, compact && is_subfit(L), is_spatial_frame(L), ""});
  return r;
}

}  // namespace mtkit
