#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mtkit/bits.hpp"
#include "mtkit/constructions.hpp"
#include "mtkit/error.hpp"
#include "mtkit/frame.hpp"
#include "mtkit/funayama.hpp"
#include "mtkit/lattice.hpp"
#include "mtkit/mt_algebra.hpp"
#include "mtkit/poset.hpp"
#include "mtkit/product.hpp"
#include "mtkit/profile.hpp"

namespace mtkit {

/// Largest n accepted by the enumerators. Preorders are enumerated over all
/// n(n-1) off-diagonal relation bits, so n = 6 already means 2^30 candidates.
inline constexpr std::size_t kMaxEnumerationPoints = 5;

namespace detail {

/// Off-diagonal relations on n points as bit masks over the n(n-1) ordered
/// pairs; calls f(up-rows) for each reflexive transitive one.
template <class F>
void for_each_preorder(std::size_t n, F&& f) {
  std::vector<std::pair<Element, Element>> pairs;
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) {
      if (i != j) pairs.emplace_back(i, j);
    }
  }
  std::vector<ElementSet> up(n);
  for (std::uint64_t r = 0; r < (std::uint64_t{1} << pairs.size()); ++r) {
    for (Element i = 0; i < n; ++i) up[i] = bit(i);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (has(r, static_cast<Element>(k))) up[pairs[k].first] |= bit(pairs[k].second);
    }
    bool transitive = true;
    for (Element i = 0; i < n && transitive; ++i) {
      for_each_bit(up[i], [&](Element j) { transitive = transitive && is_subset(up[j], up[i]); });
    }
    if (transitive) f(up);
  }
}

inline void check_points(std::size_t n) {
  if (n > kMaxEnumerationPoints) {
    throw CapacityExceeded("enumeration is limited to " + std::to_string(kMaxEnumerationPoints) +
                           " points");
  }
}

}  // namespace detail

/// Every topology on n labeled points, as the up-closed sets of a preorder
/// (the specialization order). Sorted by open family.
inline std::vector<std::vector<AtomSet>> topology_families(std::size_t n) {
  detail::check_points(n);
  std::vector<std::vector<AtomSet>> out;
  detail::for_each_preorder(n, [&](const std::vector<ElementSet>& up) {
    std::vector<AtomSet> opens;
    for (AtomSet s = 0; s < (AtomSet{1} << n); ++s) {
      bool upset = true;
      for_each_bit(s, [&](Element i) { upset = upset && is_subset(up[i], s); });
      if (upset) opens.push_back(s);
    }
    out.push_back(std::move(opens));
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// The same families found by brute force: subsets of the proper nonempty
/// subsets that, with ∅ and the full set, are closed under ∪ and ∩.
inline std::vector<std::vector<AtomSet>> topology_families_by_closure(std::size_t n) {
  if (n > 4) throw CapacityExceeded("closure enumeration is limited to 4 points");
  const AtomSet full = full_mask(n);
  std::vector<AtomSet> middle;
  for (AtomSet s = 1; s < full; ++s) middle.push_back(s);
  std::vector<std::vector<AtomSet>> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << middle.size()); ++pick) {
    std::vector<AtomSet> fam{0};
    for_each_bit(pick, [&](Element i) { fam.push_back(middle[i]); });
    if (full != 0) fam.push_back(full);
    std::sort(fam.begin(), fam.end());
    bool closed = true;
    for (auto a : fam) {
      for (auto b : fam) {
        closed = closed && std::binary_search(fam.begin(), fam.end(), a | b) &&
                 std::binary_search(fam.begin(), fam.end(), a & b);
      }
    }
    if (closed) out.push_back(std::move(fam));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Labeled posets on n points built by adding one point at a time: the new
/// point n-1 gets a downset D and an upset U of the previous poset with
/// everything in D below everything in U. Sorted by up-rows.
inline std::vector<FinitePoset> enumerate_posets(std::size_t n) {
  detail::check_points(n);
  std::vector<std::vector<ElementSet>> level{{}};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::vector<ElementSet>> next;
    const auto me = static_cast<Element>(k);
    for (const auto& up : level) {
      const FinitePoset p(up);
      const auto downs = downsets(p);
      for (auto D : downs) {
        for (auto U : upsets(p)) {
          if ((D & U) != 0) continue;
          bool ok = true;
          for_each_bit(D, [&](Element d) { ok = ok && is_subset(U, up[d]); });
          if (!ok) continue;
          auto rows = up;
          for_each_bit(D, [&](Element d) { rows[d] |= bit(me); });
          rows.push_back(U | bit(me));
          next.push_back(std::move(rows));
        }
      }
    }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end());
  std::vector<FinitePoset> out;
  for (auto& up : level) out.emplace_back(std::move(up));
  return out;
}

enum class CorpusKind { topologies, posets, frames };

inline std::string to_string(CorpusKind k) {
  switch (k) {
    case CorpusKind::topologies: return "topologies";
    case CorpusKind::posets: return "posets";
    case CorpusKind::frames: return "frames";
  }
  return "?";
}

/// An enumerated family. Topology corpora fill `algebras`; poset corpora
/// fill `posets`; frame corpora fill both `posets` (the generators) and
/// `frames` (their downset lattices).
struct Corpus {
  CorpusKind kind = CorpusKind::topologies;
  std::size_t n = 0;
  std::vector<MTAlgebra> algebras;
  std::vector<FinitePoset> posets;
  std::vector<FiniteLattice> frames;

  std::size_t size() const {
    return kind == CorpusKind::topologies ? algebras.size() : posets.size();
  }
  std::string item_id(std::size_t i) const {
    return to_string(kind) + "/" + std::to_string(n) + "/" + std::to_string(i);
  }
};

inline Corpus enumerate_topologies(std::size_t n) {
  Corpus c{CorpusKind::topologies, n, {}, {}, {}};
  for (auto& fam : topology_families(n)) c.algebras.push_back(build_mt(n, std::move(fam)));
  return c;
}

inline Corpus enumerate_poset_corpus(std::size_t n) {
  return Corpus{CorpusKind::posets, n, {}, enumerate_posets(n), {}};
}

inline Corpus frames_from_posets(std::size_t n) {
  Corpus c{CorpusKind::frames, n, {}, enumerate_posets(n), {}};
  for (const auto& p : c.posets) c.frames.push_back(downset_lattice(p));
  return c;
}

/// Predicates evaluated on frames (and on posets through their downset
/// frame): the frame-level properties plus the profile of the envelope,
/// prefixed "envelope.".
inline std::vector<std::string> frame_predicate_names() {
  std::vector<std::string> out = {"subfit", "hausdorff", "spatial_frame", "boolean"};
  for (auto n : AxiomProfile::kNames) out.push_back("envelope." + std::string(n));
  return out;
}

inline std::vector<std::string> predicate_names(CorpusKind kind) {
  if (kind == CorpusKind::topologies) {
    return {AxiomProfile::kNames.begin(), AxiomProfile::kNames.end()};
  }
  return frame_predicate_names();
}

/// Evaluates named predicates on corpus items, computing each item's
/// profile at most once.
class PredicateTable {
 public:
  PredicateTable(const Corpus& corpus, std::vector<std::string> names)
      : corpus_(corpus), names_(std::move(names)) {
    const auto known = predicate_names(corpus.kind);
    for (const auto& name : names_) {
      if (std::find(known.begin(), known.end(), name) == known.end()) {
        throw Error("unknown predicate '" + name + "' for " + to_string(corpus.kind));
      }
    }
    values_.resize(corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i) values_[i] = evaluate(i);
  }

  const std::vector<std::string>& names() const { return names_; }
  bool value(std::size_t item, std::size_t predicate) const { return values_[item][predicate]; }

 private:
  std::vector<char> evaluate(std::size_t i) const {
    std::vector<char> row(names_.size());
    if (corpus_.kind == CorpusKind::topologies) {
      const auto p = classify(corpus_.algebras[i]);
      for (std::size_t k = 0; k < names_.size(); ++k) row[k] = *p.get(names_[k]);
      return row;
    }
    const auto L = corpus_.kind == CorpusKind::frames ? corpus_.frames[i]
                                                      : downset_lattice(corpus_.posets[i]);
    std::optional<AxiomProfile> envelope;
    for (std::size_t k = 0; k < names_.size(); ++k) {
      const auto& name = names_[k];
      if (name == "subfit") {
        row[k] = is_subfit(L);
      } else if (name == "hausdorff") {
        row[k] = is_hausdorff_frame(L);
      } else if (name == "spatial_frame") {
        row[k] = is_spatial_frame(L);
      } else if (name == "boolean") {
        row[k] = is_boolean(L);
      } else {
        if (!envelope) envelope = classify(funayama_of_frame(L).envelope);
        row[k] = *envelope->get(name.substr(std::string("envelope.").size()));
      }
    }
    return row;
  }

  const Corpus& corpus_;
  std::vector<std::string> names_;
  std::vector<std::vector<char>> values_;
};

/// The implication P => Q for every ordered pair of distinct predicates,
/// with the least counterexample index where it fails.
struct AtlasReport {
  CorpusKind kind = CorpusKind::topologies;
  std::size_t n = 0;
  std::size_t items = 0;
  std::vector<std::string> predicates;
  /// matrix[p][q] is empty when P => Q holds.
  std::vector<std::vector<std::optional<std::size_t>>> matrix;

  std::string item_id(std::size_t i) const {
    return to_string(kind) + "/" + std::to_string(n) + "/" + std::to_string(i);
  }

  /// One `P=>Q holds|refuted:<id>` line per ordered pair.
  std::string machine() const {
    std::ostringstream os;
    for (std::size_t p = 0; p < predicates.size(); ++p) {
      for (std::size_t q = 0; q < predicates.size(); ++q) {
        if (p == q) continue;
        os << predicates[p] << "=>" << predicates[q] << ' ';
        if (matrix[p][q]) {
          os << "refuted:" << item_id(*matrix[p][q]) << '\n';
        } else {
          os << "holds\n";
        }
      }
    }
    return os.str();
  }

  /// Row P, column Q: '+' when P => Q holds, '-' when refuted.
  std::string text() const {
    std::size_t width = 0;
    for (const auto& p : predicates) width = std::max(width, p.size());
    std::ostringstream os;
    os << "# " << to_string(kind) << " n=" << n << " items=" << items << '\n';
    for (std::size_t q = 0; q < predicates.size(); ++q) {
      os << "# " << std::string(width, ' ') << ' ' << std::string(q * 2, ' ') << predicates[q]
         << '\n';
    }
    for (std::size_t p = 0; p < predicates.size(); ++p) {
      os << "  " << predicates[p] << std::string(width - predicates[p].size(), ' ');
      for (std::size_t q = 0; q < predicates.size(); ++q) {
        os << ' ' << (p == q ? '.' : matrix[p][q] ? '-' : '+');
      }
      os << '\n';
    }
    return os.str();
  }
};

inline AtlasReport atlas(const Corpus& corpus, const std::vector<std::string>& predicates) {
  const PredicateTable table(corpus, predicates);
  AtlasReport r{corpus.kind, corpus.n, corpus.size(), predicates, {}};
  const auto k = predicates.size();
  r.matrix.assign(k, std::vector<std::optional<std::size_t>>(k));
  for (std::size_t p = 0; p < k; ++p) {
    for (std::size_t q = 0; q < k; ++q) {
      if (p == q) continue;
      for (std::size_t i = 0; i < corpus.size(); ++i) {
        if (table.value(i, p) && !table.value(i, q)) {
          r.matrix[p][q] = i;
          break;
        }
      }
    }
  }
  return r;
}

/// `A&B=>C&D`: every item satisfying all of the left satisfies all of the right.
struct Hypothesis {
  std::vector<std::string> premises;
  std::vector<std::string> conclusions;
};

inline Hypothesis parse_hypothesis(const std::string& text) {
  const auto arrow = text.find("=>");
  if (arrow == std::string::npos) throw Error("hypothesis must have the form P=>Q");
  auto split = [](const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s + "&") {
      if (ch == '&') {
        if (cur.empty()) throw Error("empty predicate in hypothesis");
        out.push_back(cur);
        cur.clear();
      } else if (ch != ' ') {
        cur += ch;
      }
    }
    return out;
  };
  return {split(text.substr(0, arrow)), split(text.substr(arrow + 2))};
}

/// Least item index violating the hypothesis.
inline std::optional<std::size_t> counterexample_search(const Corpus& corpus, const Hypothesis& h) {
  auto names = h.premises;
  names.insert(names.end(), h.conclusions.begin(), h.conclusions.end());
  const PredicateTable table(corpus, names);
  const auto np = h.premises.size();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    bool premises = true, conclusions = true;
    for (std::size_t k = 0; k < names.size(); ++k) {
      (k < np ? premises : conclusions) &= table.value(i, k);
    }
    if (premises && !conclusions) return i;
  }
  return std::nullopt;
}

}  // namespace mtkit
