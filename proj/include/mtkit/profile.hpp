#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mtkit/compactness.hpp"
#include "mtkit/frame.hpp"
#include "mtkit/mt_algebra.hpp"
#include "mtkit/separation.hpp"

namespace mtkit {

/// Full classification record of an MT-algebra.
struct AxiomProfile {
  bool t0 = false, t_half = false, t1 = false, t2 = false, t3 = false, t3half = false, t4 = false;
  bool nt1 = false, nt2 = false, nt3 = false, nt3half = false, nt4 = false;
  bool compact = false, locally_compact = false, n_locally_compact = false;
  bool spatial = false, sober = false;
  bool hausdorff_open_frame = false, subfit_open_frame = false;

  static constexpr std::array<std::string_view, 19> kNames = {
      "t0",      "t_half",          "t1",
      "t2",      "t3",              "t3half",
      "t4",      "nt1",             "nt2",
      "nt3",     "nt3half",         "nt4",
      "compact", "locally_compact", "n_locally_compact",
      "spatial", "sober",           "hausdorff_open_frame",
      "subfit_open_frame"};

  std::optional<bool> get(std::string_view name) const {
    const bool values[] = {t0,      t_half,          t1,
                           t2,      t3,              t3half,
                           t4,      nt1,             nt2,
                           nt3,     nt3half,         nt4,
                           compact, locally_compact, n_locally_compact,
                           spatial, sober,           hausdorff_open_frame,
                           subfit_open_frame};
    for (std::size_t i = 0; i < kNames.size(); ++i) {
      if (kNames[i] == name) return values[i];
    }
    return std::nullopt;
  }

  friend bool operator==(const AxiomProfile&, const AxiomProfile&) = default;
};

inline bool is_profile_predicate(std::string_view name) {
  for (auto n : AxiomProfile::kNames) {
    if (n == name) return true;
  }
  return false;
}

struct Classification {
  AxiomProfile profile;
  /// One refutation per false flag, in kNames order.
  std::vector<Refutation> witnesses;
};

inline Classification classify_with_witnesses(const MTAlgebra& M) {
  Classification out;
  auto& p = out.profile;
  auto& w = out.witnesses;
  auto record = [&](bool& flag, std::optional<Refutation> r) {
    flag = !r.has_value();
    if (r) w.push_back(std::move(*r));
  };

  const auto tables = element_tables(M);
  const PrecPrec pp(M);
  record(p.t0, t0_refutation(M, tables));
  record(p.t_half, t_half_refutation(M, tables));
  record(p.t1, t1_refutation(M, tables));
  record(p.t2, t2_refutation(M, tables));
  record(p.t3, t3_refutation(M, tables));
  record(p.t3half, t3half_refutation(M, tables, pp));
  record(p.t4, t4_refutation(M, tables));
  record(p.nt1, nt1_refutation(M));
  record(p.nt2, nt2_refutation(M));
  record(p.nt3, nt3_refutation(M));
  record(p.nt3half, nt3half_refutation(M, pp));
  record(p.nt4, nt4_refutation(M));

  const auto comp = compactness_profile(M);
  const auto table = compact_table(M);
  std::optional<Refutation> r;
  if (!comp.compact) r = Refutation{"compact", {M.top()}};
  record(p.compact, r);
  r.reset();
  if (!comp.locally_compact) {
    auto u = open_approximation_failure(M, [&](AtomSet v, AtomSet w) { return way_below(table, v, w); });
    if (u) r = Refutation{"locally_compact", {*u}};
  }
  record(p.locally_compact, r);
  r.reset();
  if (!comp.n_locally_compact) {
    for (AtomSet a = 1; a < M.element_count() && !r; ++a) {
      bool found = false;
      for (auto k : comp.compact_elements) found = found || (a & M.interior(k)) != 0;
      if (!found) r = Refutation{"n_locally_compact", {a}};
    }
  }
  record(p.n_locally_compact, r);

  const auto st = structure_profile(M);
  r.reset();
  if (!st.spatial) r = Refutation{"spatial", {}};
  record(p.spatial, r);
  r.reset();
  if (!st.sober) {
    if (auto t0 = t0_refutation(M, tables)) {
      r = Refutation{"sober", t0->args};
    } else {
      for (auto c : join_irreducible_closeds(M)) {
        bool closure = false;
        for (auto x : st.atoms) closure = closure || M.closure(x) == c;
        if (!closure && !r) r = Refutation{"sober", {c}};
      }
    }
  }
  record(p.sober, r);

  const auto frame = open_frame(M);
  const auto& L = frame.lattice();
  const auto& opens = M.opens();
  r.reset();
  if (auto a = hausdorff_failure(L)) r = Refutation{"hausdorff_open_frame", {opens[*a]}};
  record(p.hausdorff_open_frame, r);
  r.reset();
  if (auto ab = subfit_failure(L)) {
    r = Refutation{"subfit_open_frame", {opens[ab->first], opens[ab->second]}};
  }
  record(p.subfit_open_frame, r);
  return out;
}

inline AxiomProfile classify(const MTAlgebra& M) { return classify_with_witnesses(M).profile; }

}  // namespace mtkit
