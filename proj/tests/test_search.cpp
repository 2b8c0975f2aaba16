#include <gtest/gtest.h>

#include "frozen_tables.hpp"
#include "oracles.hpp"
#include "rcone/search.hpp"

using namespace rcone;

namespace {

using frozen::FrozenCell;
using frozen::kGenusOneGrid;
using frozen::kGenusZeroGrid;

void expect_matches(const SearchReport& r, const std::vector<FrozenCell>& frozen) {
  ASSERT_EQ(r.cells.size(), frozen.size());
  for (std::size_t k = 0; k < frozen.size(); ++k) {
    const auto& f = frozen[k];
    const auto& cell = r.cells[k];
    EXPECT_EQ(cell.D, (SurfaceClass{f.a, f.b}));
    EXPECT_EQ(cell.certificate.verdict, f.verdict) << cell.D;
    EXPECT_EQ(cell.certificate.bound_m0, f.bound_m0) << cell.D;
    if (f.verdict == Verdict::Witness) {
      EXPECT_EQ(cell.certificate.witness->degree, f.i) << cell.D;
      EXPECT_EQ(cell.certificate.witness->m, f.m) << cell.D;
      EXPECT_EQ(cell.certificate.witness->dim, DimValue::exact(f.dim)) << cell.D;
    }
  }
}

}  // namespace

TEST(SearchGrid, GenusTwoEveryClassHasAWitness) {
  const SearchReport r = search_grid(CurveModel(2, PointMode::Generic), {1, 1}, 10, 10);
  ASSERT_EQ(r.cells.size(), 121u);
  for (const auto& cell : r.cells) {
    EXPECT_EQ(cell.certificate.verdict, Verdict::Witness) << cell.D;
    EXPECT_TRUE(cell.pattern_check) << cell.D;
    EXPECT_TRUE(verify_certificate(cell.certificate));
  }
  EXPECT_EQ(r.verdict, SearchVerdict::NonexistenceProved);
  ASSERT_TRUE(r.proof.has_value());
  EXPECT_TRUE(verify_proof(*r.proof));
  EXPECT_FALSE(r.rationalizer.has_value());
}

TEST(SearchGrid, GenusZeroFindsTrivialRationalizer) {
  const SearchReport r = search_grid(CurveModel(0, PointMode::Generic), {1, 1}, 3, 3);
  EXPECT_EQ(r.verdict, SearchVerdict::RationalizerFound);
  EXPECT_EQ(r.rationalizer, (SurfaceClass{0, 0}));
  EXPECT_FALSE(r.proof.has_value());
  expect_matches(r, kGenusZeroGrid);
}

TEST(SearchGrid, GenusOneMatchesFrozenOracle) {
  const SearchReport r = search_grid(CurveModel(1, PointMode::Generic), {1, 1}, 5, 5);
  expect_matches(r, kGenusOneGrid);
  // h1(O_X) = 1 rules out D = 0; a single section C0 rationalizes.
  EXPECT_EQ(r.verdict, SearchVerdict::RationalizerFound);
  EXPECT_EQ(r.rationalizer, (SurfaceClass{1, 0}));
}

TEST(SearchGrid, GenusOneMatchesLiveOracle) {
  const SearchReport r = search_grid(CurveModel(1, PointMode::Generic), {1, 1}, 12, 12);
  for (const auto& cell : r.cells) {
    const auto o = oracle::cone_scan(1, 1, 1, cell.D.a, cell.D.b, oracle::generous_cap(1, cell.D.a, cell.D.b));
    ASSERT_EQ(cell.certificate.verdict == Verdict::Witness, o.witness) << cell.D;
    if (o.witness) {
      EXPECT_EQ(cell.certificate.witness->m, o.m);
      EXPECT_EQ(cell.certificate.witness->degree, o.i);
    }
  }
}

TEST(SearchGrid, RowMajorOrder) {
  const SearchReport r = search_grid(CurveModel(2, PointMode::Generic), {1, 1}, 2, 3);
  ASSERT_EQ(r.cells.size(), 12u);
  std::size_t k = 0;
  for (Int a = 0; a <= 2; ++a)
    for (Int b = 0; b <= 3; ++b) EXPECT_EQ(r.cells[k++].D, (SurfaceClass{a, b}));
}

TEST(SearchGrid, OtherPolarizationsAreGridOnly) {
  const SearchReport r = search_grid(CurveModel(2, PointMode::Generic), {2, 1}, 4, 4);
  EXPECT_FALSE(r.proof.has_value());
  EXPECT_NE(r.verdict, SearchVerdict::NonexistenceProved);
  if (!r.rationalizer) {
    EXPECT_EQ(r.verdict, SearchVerdict::GridOnly);
  }
}

TEST(SearchGrid, RejectsBadInput) {
  EXPECT_THROW(search_grid(CurveModel(2, PointMode::Generic), {1, 0}, 3, 3), std::invalid_argument);
  EXPECT_THROW(search_grid(CurveModel(2, PointMode::Generic), {1, 1}, -1, 3), std::invalid_argument);
}

TEST(SearchGrid, PatternCompletenessAtHigherGenus) {
  for (Int g = 2; g <= 5; ++g)
    for (PointMode mode : {PointMode::Generic, PointMode::Arbitrary}) {
      const SearchReport r = search_grid(CurveModel(g, mode), {1, 1}, 12, 12);
      EXPECT_EQ(r.verdict, SearchVerdict::NonexistenceProved);
      for (const auto& cell : r.cells) {
        if (mode == PointMode::Generic) {
          EXPECT_EQ(cell.certificate.verdict, Verdict::Witness) << cell.D;
        }
        EXPECT_NE(cell.certificate.verdict, Verdict::AllVanish) << cell.D;
        EXPECT_TRUE(cell.pattern_check) << cell.D;
      }
    }
}

TEST(ClosedForm, CaseValuesAtGenusTwo) {
  const NonexistenceProof p = nonexistence_closed_form(2);
  ASSERT_EQ(p.formulas.size(), 2u);
  ASSERT_EQ(p.cases.size(), 3u);
  const WitnessFormula& next = p.formulas[0];
  const WitnessFormula& same = p.formulas[1];
  EXPECT_EQ(next.m_offset, 1);
  EXPECT_EQ(same.m_offset, 0);
  // a < b+2: (b-a+2)(g-1).
  for (Int a = 0; a <= 6; ++a)
    for (Int b = std::max<Int>(0, a - 1); b <= a + 6; ++b) EXPECT_EQ(next.evaluate(b - a, 2), (b - a + 2) * 1);
  // a = b+2: 1.
  for (Int b = 0; b <= 6; ++b) EXPECT_EQ(same.evaluate(-2, 2), 1);
  EXPECT_EQ(next.evaluate(-2, 2), 0);
  // a > b+2: a-b-2.
  for (Int b = 0; b <= 6; ++b)
    for (Int a = b + 3; a <= b + 9; ++a) EXPECT_EQ(next.evaluate(b - a, 2), a - b - 2);
}

TEST(ClosedForm, MatchesSpelledOutExpressions) {
  const NonexistenceProof p = nonexistence_closed_form(3);
  for (Int g = 2; g <= 9; ++g)
    for (Int d = -20; d <= 20; ++d) {
      EXPECT_EQ(p.formulas[0].evaluate(d, g), std::max<Int>(0, d + 2) * (g - 1) + std::max<Int>(0, -d - 2));
      EXPECT_EQ(p.formulas[1].evaluate(d, g), std::max<Int>(0, d + 1) * g + std::max<Int>(0, -d - 1));
    }
}

TEST(ClosedForm, ValidForEverySymbolicGenus) {
  for (Int g = 2; g <= 20; ++g) {
    const NonexistenceProof p = nonexistence_closed_form(g);
    const CheckResult r = verify_proof(p);
    EXPECT_TRUE(r.ok) << r.reason;
    EXPECT_EQ(p.genus_min, 2);
  }
}

TEST(ClosedForm, RejectsOutsideProvedRegime) {
  EXPECT_THROW(nonexistence_closed_form(1), std::invalid_argument);
  EXPECT_THROW(nonexistence_closed_form(0), std::invalid_argument);
  EXPECT_THROW(nonexistence_closed_form(2, {2, 1}), std::invalid_argument);
}

TEST(ClosedForm, GridAgreement) {
  for (Int g = 2; g <= 4; ++g) {
    const CurveModel model(g, PointMode::Generic);
    const NonexistenceProof p = nonexistence_closed_form(g);
    const SearchReport r = search_grid(model, {1, 1}, 30, 30);
    for (const auto& cell : r.cells) {
      const Int m = predicted_witness_m(cell.D);
      const DimValue h = kunneth_h(model, m * SurfaceClass{1, 1} - cell.D, 1);
      const WitnessFormula& f = cell.D.a == cell.D.b + 2 ? p.formulas[1] : p.formulas[0];
      ASSERT_TRUE(h.is_exact());
      EXPECT_EQ(h.value(), f.evaluate(cell.D.b - cell.D.a, g)) << "g=" << g << " D=" << cell.D;
      EXPECT_GE(h.value(), 1);
    }
  }
}

TEST(VerifyProof, RejectsBrokenProofs) {
  const NonexistenceProof good = nonexistence_closed_form(2);
  ASSERT_TRUE(verify_proof(good));

  NonexistenceProof gap = good;
  gap.cases[0].d_lo = 0;  // leaves d = -1 uncovered
  EXPECT_FALSE(verify_proof(gap));

  NonexistenceProof overlap = good;
  overlap.cases[2].d_hi = -2;
  EXPECT_FALSE(verify_proof(overlap));

  NonexistenceProof wrong_formula = good;
  wrong_formula.cases[1].formula = 0;  // m = b+1 vanishes at a = b+2
  EXPECT_FALSE(verify_proof(wrong_formula));

  NonexistenceProof low_genus = good;
  low_genus.genus_min = 1;
  low_genus.genus = 1;
  EXPECT_FALSE(verify_proof(low_genus));

  NonexistenceProof not_kunneth = good;
  not_kunneth.formulas[0].terms[0].curve.constant = 0;  // claims h1(C, Q) = g
  EXPECT_FALSE(verify_proof(not_kunneth));

  NonexistenceProof overclaim = good;
  overclaim.cases[0].lower_bound = 2;
  EXPECT_FALSE(verify_proof(overclaim));
}
