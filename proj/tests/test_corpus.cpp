#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace mtkit;
using namespace fixtures;

namespace {

std::vector<std::vector<ElementSet>> up_rows(const std::vector<FinitePoset>& ps) {
  std::vector<std::vector<ElementSet>> out;
  for (const auto& p : ps) {
    std::vector<ElementSet> rows;
    for (Element a = 0; a < p.size(); ++a) rows.push_back(p.up(a));
    out.push_back(rows);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Point-level truth of the four classical axioms the oracle knows.
bool point_predicate(const oracle::PointSpace& s, const std::string& name) {
  if (name == "t0") return s.t0();
  if (name == "t_half") return s.t_half();
  if (name == "t1") return s.t1();
  return s.t2();
}

}  // namespace

TEST(Enumeration, TopologyCounts) {
  const std::vector<std::size_t> expected = {1, 1, 4, 29, 355};
  for (std::size_t n = 0; n < expected.size(); ++n) {
    EXPECT_EQ(enumerate_topologies(n).size(), expected[n]) << "n=" << n;
  }
}

TEST(Enumeration, TopologiesAgreeWithClosureSearch) {
  for (std::size_t n = 0; n <= 4; ++n) {
    ASSERT_EQ(topology_families(n), topology_families_by_closure(n)) << "n=" << n;
  }
}

TEST(Enumeration, PosetCounts) {
  const std::vector<std::size_t> expected = {1, 1, 3, 19, 219};
  for (std::size_t n = 0; n < expected.size(); ++n) {
    EXPECT_EQ(enumerate_posets(n).size(), expected[n]) << "n=" << n;
  }
}

TEST(Enumeration, PosetsAgreeWithRelationSearch) {
  for (std::size_t n = 0; n <= 4; ++n) {
    ASSERT_EQ(up_rows(enumerate_posets(n)), oracle::posets_by_relations(n)) << "n=" << n;
  }
}

TEST(Enumeration, CapIsEnforced) {
  EXPECT_THROW(enumerate_topologies(6), CapacityExceeded);
  EXPECT_THROW(enumerate_posets(6), CapacityExceeded);
}

TEST(Enumeration, Deterministic) {
  const auto a = enumerate_topologies(3), b = enumerate_topologies(3);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) ASSERT_EQ(a.algebras[i], b.algebras[i]);
  EXPECT_EQ(enumerate_posets(4), enumerate_posets(4));
}

TEST(Corpus, ItemIdsAndFrames) {
  const auto c = enumerate_topologies(3);
  EXPECT_EQ(c.item_id(17), "topologies/3/17");
  const auto f = frames_from_posets(3);
  EXPECT_EQ(f.size(), 19U);
  EXPECT_EQ(f.frames.size(), 19U);
  EXPECT_EQ(f.item_id(0), "frames/3/0");
  EXPECT_EQ(enumerate_poset_corpus(2).item_id(1), "posets/2/1");
}

TEST(Atlas, SeparationExamples) {
  const auto c = enumerate_topologies(3);
  const auto r = atlas(c, {"t2", "nt2"});
  EXPECT_NE(r.machine().find("t2=>nt2 holds\n"), std::string::npos);
  const auto tower = atlas(c, {"t0", "t1"});
  EXPECT_FALSE(tower.matrix[1][0].has_value());
  ASSERT_TRUE(tower.matrix[0][1].has_value());
  const auto& M = c.algebras[*tower.matrix[0][1]];
  EXPECT_TRUE(separation_profile(M).t0);
  EXPECT_FALSE(separation_profile(M).t1);
  EXPECT_NE(tower.machine().find("t0=>t1 refuted:topologies/3/"), std::string::npos);
}

TEST(Atlas, TextMatrix) {
  const auto text = atlas(enumerate_topologies(2), {"t0", "t1"}).text();
  EXPECT_NE(text.find("# topologies n=2 items=4"), std::string::npos);
  EXPECT_NE(text.find("  t0 . -"), std::string::npos);
  EXPECT_NE(text.find("  t1 + ."), std::string::npos);
}

TEST(Atlas, MatchesPointOracle) {
  const std::vector<std::string> names = {"t0", "t_half", "t1", "t2"};
  for (std::size_t n = 0; n <= 3; ++n) {
    const auto c = enumerate_topologies(n);
    const auto r = atlas(c, names);
    for (std::size_t p = 0; p < names.size(); ++p) {
      for (std::size_t q = 0; q < names.size(); ++q) {
        if (p == q) continue;
        std::optional<std::size_t> first;
        for (std::size_t i = 0; i < c.size() && !first; ++i) {
          const oracle::PointSpace s{n, c.algebras[i].opens()};
          if (point_predicate(s, names[p]) && !point_predicate(s, names[q])) first = i;
        }
        ASSERT_EQ(r.matrix[p][q], first) << names[p] << "=>" << names[q] << " n=" << n;
      }
    }
  }
}

TEST(Atlas, RefutationsAreGenuine) {
  const auto c = enumerate_topologies(3);
  const auto names = predicate_names(CorpusKind::topologies);
  const auto r = atlas(c, names);
  for (std::size_t p = 0; p < names.size(); ++p) {
    for (std::size_t q = 0; q < names.size(); ++q) {
      if (!r.matrix[p][q]) continue;
      const auto prof = classify(c.algebras[*r.matrix[p][q]]);
      ASSERT_TRUE(*prof.get(names[p]));
      ASSERT_FALSE(*prof.get(names[q]));
    }
  }
}

TEST(Atlas, FrameCorpus) {
  const auto r = atlas(frames_from_posets(3), {"boolean", "subfit", "envelope.t1"});
  EXPECT_FALSE(r.matrix[0][1].has_value());  // boolean => subfit
  EXPECT_FALSE(r.matrix[1][2].has_value());  // subfit => envelope T1
  EXPECT_FALSE(r.matrix[2][1].has_value());
  const auto posets = atlas(enumerate_poset_corpus(3), {"spatial_frame", "envelope.t_half"});
  EXPECT_FALSE(posets.matrix[0][1].has_value());
}

TEST(Atlas, UnknownPredicate) {
  EXPECT_THROW(atlas(enumerate_topologies(1), {"t0", "t9"}), Error);
  EXPECT_THROW(atlas(frames_from_posets(1), {"t0"}), Error);
}

TEST(Search, ParseHypothesis) {
  const auto h = parse_hypothesis("t1&compact=>spatial&sober");
  EXPECT_EQ(h.premises, (std::vector<std::string>{"t1", "compact"}));
  EXPECT_EQ(h.conclusions, (std::vector<std::string>{"spatial", "sober"}));
  EXPECT_THROW(parse_hypothesis("t1"), Error);
  EXPECT_THROW(parse_hypothesis("t1&=>t0"), Error);
  EXPECT_THROW(parse_hypothesis("=>t0"), Error);
}

TEST(Search, Examples) {
  const auto c = enumerate_topologies(3);
  EXPECT_FALSE(counterexample_search(c, parse_hypothesis("t1=>t0")).has_value());
  const auto hit = counterexample_search(c, parse_hypothesis("t0=>t1"));
  ASSERT_TRUE(hit.has_value());
  EXPECT_FALSE(separation_profile(c.algebras[*hit]).t1);
  // A finite NT2 algebra is discrete, so nothing here refutes NT2 => T1.
  EXPECT_FALSE(counterexample_search(c, parse_hypothesis("nt2=>t1")).has_value());
}

TEST(Search, LeastCounterexample) {
  const auto c = enumerate_topologies(3);
  const auto hit = counterexample_search(c, parse_hypothesis("compact=>t0&t_half"));
  ASSERT_TRUE(hit.has_value());
  for (std::size_t i = 0; i < *hit; ++i) {
    const auto s = separation_profile(c.algebras[i]);
    ASSERT_TRUE(s.t0 && s.t_half);
  }
}

TEST(Search, EmptyCorpus) {
  const Corpus empty{};
  EXPECT_EQ(empty.size(), 0U);
  EXPECT_FALSE(counterexample_search(empty, parse_hypothesis("t0=>t1")).has_value());
  EXPECT_EQ(atlas(empty, {"t0", "t1"}).machine(), "t0=>t1 holds\nt1=>t0 holds\n");
}

TEST(Export, RoundTrip) {
  const auto c = enumerate_topologies(3);
  std::string text;
  for (const auto& M : c.algebras) text += write_mt(M);
  std::istringstream in(text);
  const auto back = read_mts(in);
  ASSERT_EQ(back.size(), c.size());
  for (std::size_t i = 0; i < back.size(); ++i) ASSERT_EQ(back[i], c.algebras[i]);

  const auto ps = enumerate_posets(4);
  std::string ptext;
  for (const auto& p : ps) ptext += write_poset(p);
  std::istringstream pin(ptext);
  EXPECT_EQ(read_posets(pin), ps);
}

TEST(Atlas, FiniteT0IsTHalf) {
  for (std::size_t n = 0; n <= 3; ++n) {
    const auto r = atlas(enumerate_topologies(n), {"t0", "t_half"});
    EXPECT_EQ(r.machine(), "t0=>t_half holds\nt_half=>t0 holds\n") << "n=" << n;
  }
}

TEST(Atlas, ByteIdenticalReports) {
  const auto names = predicate_names(CorpusKind::topologies);
  const auto a = atlas(enumerate_topologies(3), names);
  const auto b = atlas(enumerate_topologies(3), names);
  EXPECT_EQ(a.machine(), b.machine());
  EXPECT_EQ(a.text(), b.text());
}

TEST(Corpus, EveryItemValidates) {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& M : enumerate_topologies(n).algebras) {
      ASSERT_FALSE(kuratowski_violation(M).has_value());
    }
    const auto f = frames_from_posets(n);
    for (std::size_t i = 0; i < f.size(); ++i) {
      ASSERT_NO_THROW(validate_lattice(f.frames[i].order()));
      ASSERT_TRUE(frame_coframe_flags(f.frames[i]).is_frame) << f.item_id(i);
    }
  }
}
