#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace mtkit;
using namespace fixtures;

namespace {

LatticeEmbedding identity(const FiniteLattice& L) {
  std::vector<Element> map(L.size());
  for (Element a = 0; a < L.size(); ++a) map[a] = a;
  return LatticeEmbedding(L.order(), L, std::move(map));
}

std::vector<MTAlgebra> mt_pool() {
  auto pool = topologies_upto(3);
  for (auto& M : small_products()) pool.push_back(std::move(M));
  return pool;
}

oracle::PointSpace points(const MTAlgebra& M) { return {M.atom_count(), M.opens()}; }

template <class E>
std::vector<Element> witness_of(const FiniteLattice& C, const LatticeEmbedding& e) {
  try {
    validate_raney(C, e);
  } catch (const E& err) {
    return err.witness();
  }
  ADD_FAILURE() << "expected a violation";
  return {};
}

}  // namespace

TEST(ValidateRaney, ChainWithItselfIsValid) {
  const auto C = chain(3);
  const auto R = validate_raney(C, identity(C));
  EXPECT_EQ(R.coframe().size(), 3U);
  EXPECT_EQ(R.frame().size(), 3U);
}

TEST(ValidateRaney, M3IsNotACoframe) {
  const auto C = m3();
  EXPECT_FALSE(witness_of<NotCoframe>(C, identity(C)).empty());
}

TEST(ValidateRaney, BottomAndTopAloneAreNotMeetDense) {
  const auto B = powerset_lattice(2);
  const LatticeEmbedding e(chain_poset(2), B, {0, 3});
  EXPECT_EQ(witness_of<NotMeetDense>(B, e), std::vector<Element>{1});
}

TEST(ValidateRaney, MissingTopOrJoin) {
  const auto B = powerset_lattice(2);
  EXPECT_EQ(witness_of<NotJoinClosed>(B, LatticeEmbedding(chain_poset(2), B, {0, 1})),
            std::vector<Element>{3});
  // {∅, {a}, {b}, top} in the cube lacks {a, b}.
  const LatticeEmbedding square(FinitePoset::from_pairs(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}),
                                powerset_lattice(3), {0, 1, 2, 7});
  EXPECT_EQ(witness_of<NotJoinClosed>(powerset_lattice(3), square), (std::vector<Element>{1, 2}));
}

TEST(ValidateRaney, EmbeddingMustLandInTheCoframe) {
  EXPECT_THROW(validate_raney(chain(3), identity(chain(2))), NotAnEmbedding);
}

// In a distributive lattice every join is exact, so inexactness only shows
// up on a lattice that would already fail the coframe check.
TEST(ValidateRaney, InexactJoinsOnlyOutsideCoframes) {
  EXPECT_EQ(detail::inexact_join(m3(), m3().all()), (std::vector<Element>{1, 2}));
  for (const auto& L : frames_upto(3)) ASSERT_FALSE(detail::inexact_join(L, L.all()).has_value());
}

TEST(RaneyOfMt, Examples) {
  const auto s = raney_of_mt(sierpinski());
  EXPECT_EQ(s.coframe().size(), 3U);
  EXPECT_EQ(s.embedding().image(), ElementSet{0b111});

  EXPECT_EQ(raney_of_mt(discrete2()).coframe().size(), 4U);

  const auto ind = raney_of_mt(indiscrete_mt(2));
  EXPECT_EQ(ind.coframe().size(), 2U);
  EXPECT_EQ(ind.frame().size(), 2U);
}

TEST(RaneyOfMt, ValidOnEveryAlgebra) {
  for (const auto& M : mt_pool()) {
    const auto R = raney_of_mt(M);
    ASSERT_EQ(R.coframe().size(), saturated_elements(M).size());
    ASSERT_EQ(R.frame().size(), M.opens().size());
  }
}

TEST(Funayama, ChainOfThreeIsSierpinski) {
  const auto r = funayama_of_frame(chain(3));
  EXPECT_TRUE(mt_isomorphic(r.envelope, sierpinski()).has_value());
}

TEST(Funayama, BooleanAlgebraIsDiscrete) {
  const auto r = funayama_of_frame(powerset_lattice(2));
  EXPECT_TRUE(mt_isomorphic(r.envelope, discrete2()).has_value());
}

TEST(Funayama, TwoChainIsOnePoint) {
  const auto r = funayama_of_frame(chain(2));
  EXPECT_EQ(r.envelope.atom_count(), 1U);
  EXPECT_EQ(r.envelope.opens(), (std::vector<AtomSet>{0, 1}));
}

TEST(Funayama, RejectsNonFrames) { EXPECT_THROW(funayama_of_frame(m3()), NotDistributive); }

TEST(Funayama, UnitIsAnIsomorphismOntoOpens) {
  for (const auto& L : frames_upto(4)) {
    const auto r = funayama_of_frame(L);
    ASSERT_EQ(r.unit.target().size(), L.size());
    ASSERT_EQ(r.unit.image(), r.unit.target().all());
    // The envelope's atoms are as many as the join-irreducibles of L.
    ASSERT_EQ(r.envelope.atom_count(), count(oracle::join_irreducibles(L)));
  }
}

TEST(Funayama, OfRaneyMatchesT0) {
  for (const auto& M : mt_pool()) {
    const auto env = funayama_of_raney(raney_of_mt(M));
    ASSERT_EQ(mt_isomorphic(M, env.envelope).has_value(), points(M).t0());
  }
}

TEST(Funayama, OfFrameMatchesTHalf) {
  for (const auto& M : topologies_upto(3)) {
    const auto env = funayama_of_frame(open_frame(M).lattice());
    ASSERT_EQ(mt_isomorphic(M, env.envelope).has_value(), points(M).t_half());
  }
}

TEST(FiltSe, AgreesWithFrameEnvelope) {
  for (const auto& L : frames_upto(4)) {
    const auto R = filt_se_extension(L);
    ASSERT_EQ(R.coframe().size(), L.size());  // all filters are principal
    const auto a = funayama_of_raney(R).envelope;
    const auto b = funayama_of_frame(L).envelope;
    ASSERT_TRUE(mt_isomorphic(a, b).has_value());
  }
}

TEST(RaneyFlags, FiltSeIsSoberAndSpatial) {
  for (const auto& L : frames_upto(4)) {
    const auto f = raney_flags(filt_se_extension(L));
    ASSERT_TRUE(f.sober);
    ASSERT_TRUE(f.spatial);
  }
}

TEST(RaneyFlags, TransferForT0Algebras) {
  for (const auto& M : mt_pool()) {
    if (!separation_profile(M).t0) continue;
    const auto st = structure_profile(M);
    const auto f = raney_flags(raney_of_mt(M));
    ASSERT_EQ(f.spatial, st.spatial);
    ASSERT_EQ(f.sober, st.sober);
  }
}

TEST(RaneyFlags, IndiscreteExample) {
  const auto f = raney_flags(raney_of_mt(indiscrete_mt(2)));
  EXPECT_TRUE(f.spatial);
  EXPECT_TRUE(f.sober);
  EXPECT_TRUE(is_sober_raney(raney_of_mt(sierpinski())));
}

TEST(CjpToAtom, Sierpinski) {
  const auto M = sierpinski();
  EXPECT_EQ(cjp_to_atom(M, 0b10), AtomSet{0b10});
  EXPECT_EQ(cjp_to_atom(M, 0b11), AtomSet{0b01});
  EXPECT_THROW(cjp_to_atom(M, 0b01), NotCJP);  // not saturated
  EXPECT_THROW(cjp_to_atom(M, 0b00), NotCJP);  // saturated, not prime
}

TEST(CjpToAtom, BijectionOnT0Algebras) {
  for (const auto& M : mt_pool()) {
    if (!separation_profile(M).t0) continue;
    const auto sat = saturated_elements(M);
    const auto C = inclusion_lattice(sat);
    AtomSet hit = 0;
    for_each_bit(completely_join_primes(C), [&](Element id) {
      const AtomSet x = cjp_to_atom(M, sat[id]);
      ASSERT_EQ(count(x), 1U);
      ASSERT_EQ(saturation(M, x), sat[id]);
      ASSERT_EQ(hit & x, 0U);
      hit |= x;
    });
    ASSERT_EQ(hit, M.top());
  }
}

TEST(TheoremSuite, SierpinskiTakesTheCanonicalPath) {
  const auto r = theorem_suite(sierpinski());
  EXPECT_TRUE(r.all_hold());
  ASSERT_NE(r.find("t_half<=>iso_open_envelope"), nullptr);
  EXPECT_EQ(r.find("t_half<=>iso_open_envelope")->note, "canonical");
  EXPECT_EQ(r.find("t0<=>iso_raney_envelope")->note, "canonical");
}

TEST(TheoremSuite, IndiscreteHasNoIsomorphism) {
  const auto r = theorem_suite(indiscrete_mt(2));
  EXPECT_TRUE(r.all_hold());
  EXPECT_FALSE(r.find("t0<=>iso_raney_envelope")->rhs);
  EXPECT_EQ(r.find("t0<=>iso_raney_envelope")->note, "none");
  EXPECT_EQ(r.find("no_such_check"), nullptr);
}

TEST(TheoremSuite, FrameExamples) {
  const auto r = theorem_suite(chain(3));
  EXPECT_TRUE(r.all_hold());
  EXPECT_FALSE(r.find("envelope_t1<=>subfit")->lhs);
  EXPECT_TRUE(theorem_suite(powerset_lattice(2)).find("envelope_t1<=>subfit")->lhs);
}

TEST(TheoremSuite, HoldsOnEveryAlgebraAndFrame) {
  for (const auto& M : mt_pool()) {
    const auto r = theorem_suite(M);
    for (const auto& c : r.checks) ASSERT_TRUE(c.holds()) << c.name;
    ASSERT_EQ(r.find("t0<=>iso_raney_envelope")->lhs, points(M).t0());
    ASSERT_EQ(r.find("t_half<=>iso_open_envelope")->lhs, points(M).t_half());
  }
  for (const auto& L : frames_upto(4)) {
    for (const auto& c : theorem_suite(L).checks) ASSERT_TRUE(c.holds()) << c.name;
  }
}
