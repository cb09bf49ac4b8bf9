#include "hyperladder/spectra.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace hyperladder;

namespace {

const Rational half = make_rational(1, 2);

std::vector<FunExpr> exprs(const std::vector<LabeledState>& sts) {
  std::vector<FunExpr> out;
  for (const auto& s : sts) out.push_back(s.expr);
  return out;
}

}  // namespace

TEST(Spectra, OneVariableGroundStates) {
  EXPECT_EQ(ground_theta(0, 0), FunExpr::monomial(1, half, half, 0, 0));
  EXPECT_TRUE(apply(Op::AMinus, {{0, 0, -5}, ground_theta(0, 0)}).is_zero());
  EXPECT_EQ(ground_chi(0, -3), FunExpr::monomial(1, 0, 0, make_rational(-5, 2), half));
  EXPECT_TRUE(apply_B_1d(Sign::Minus, 0, -3, ground_chi(0, -3)).is_zero());
  EXPECT_TRUE(apply_C_1d(Sign::Minus, make_rational(-1, 2), -3, ground_beta(make_rational(-1, 2), -3)).is_zero());
  EXPECT_THROW(ground_beta(1, 0), AdmissibilityError);
  EXPECT_THROW(ground_beta(0, -1), AdmissibilityError);
  EXPECT_THROW(ground_chi(0, -1), AdmissibilityError);
  EXPECT_THROW(ground_theta(-1, 0), AdmissibilityError);
}

TEST(Spectra, FundamentalStates) {
  const LabeledState g = ground_full(0, -5);
  EXPECT_EQ(g.label, (ParamPoint{0, 0, -5}));
  EXPECT_EQ(g.expr, FunExpr::monomial(1, half, half, make_rational(-9, 2), 1));
  const LabeledState g2 = ground_full(1, -4);
  for (Op op : {Op::AMinus, Op::BMinus, Op::CMinus}) EXPECT_TRUE(apply(op, g2).is_zero()) << name(op);
  EXPECT_THROW(ground_full(0, -2), AdmissibilityError);
  EXPECT_THROW(ground_full(-1, -5), AdmissibilityError);
}

TEST(Spectra, So42Vacuum) {
  const LabeledState v = so42_vacuum(-3);
  EXPECT_EQ(v.expr, FunExpr::monomial(1, half, half, make_rational(-5, 2), 1));
  for (Op op : {Op::AMinus, Op::AtildeMinus, Op::BMinus, Op::BtildeMinus, Op::CMinus, Op::CtildeMinus})
    EXPECT_TRUE(apply(op, v).is_zero()) << name(op);
  EXPECT_THROW(so42_vacuum(make_rational(-5, 2)), AdmissibilityError);
}

TEST(Spectra, VertexEnergies) {
  EXPECT_EQ(vertex_energy(0, -5), make_rational(-35, 4));
  EXPECT_EQ(vertex_energy(1, -4), make_rational(-3, 4));
  EXPECT_EQ(vertex_energy(0, make_rational(-3, 2)), 0);
}

TEST(Spectra, FundamentalStatesAreEigenstates) {
  for (auto [l0, l2] : std::vector<std::pair<Rational, Rational>>{{0, -3}, {half, make_rational(-7, 2)}, {2, -6}}) {
    const LabeledState g = ground_full(l0, l2);
    EXPECT_EQ(proportionality(apply_hamiltonian(g), g.expr), vertex_energy(l0, l2));
  }
}

TEST(Spectra, GramRank) {
  const LabeledState f = ground_full(0, -5);
  EXPECT_EQ(gram_rank({f, {f.label, Rational(2) * f.expr}}), 1);
  EXPECT_EQ(gram_rank({}), 0);
  const auto two = states_at({1, 0, -4}, {0, 0, -5});
  EXPECT_EQ(gram_rank(two), 2);
  std::vector<LabeledState> scaled = two;
  scaled[0].expr = make_rational(-7, 3) * scaled[0].expr;
  EXPECT_EQ(gram_rank(scaled), 2);
}

TEST(Spectra, WitnessWordsSpanTheTwoDimensionalSpace) {
  const auto ws = witnesses_at({1, 0, -4}, {0, 0, -5});
  ASSERT_EQ(ws.size(), 2u);
  std::set<std::string> words;
  for (const auto& w : ws) words.insert(to_string(w.word));
  EXPECT_TRUE(words.count("C+ A+"));
  EXPECT_TRUE(words.count("A+ C+"));
  // B+ on the vertex lies in their span.
  const LabeledState b = apply(Op::BPlus, ground_full(1, -4));
  EXPECT_EQ(oracle::exact_rank({ws[0].state.expr, ws[1].state.expr, b.expr}), 2);
}

TEST(Spectra, VertexItselfIsTheOnlyStateAtItsLabel) {
  const auto s = states_at({0, 0, -5}, {0, 0, -5});
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].expr, ground_full(0, -5).expr);
}

TEST(Spectra, DeeperDegeneracyAgreesWithExactRank) {
  const auto s = states_at({2, 0, -5}, {0, 0, -7});
  EXPECT_EQ(gram_rank(s), static_cast<int>(s.size()));
  EXPECT_EQ(oracle::exact_rank(exprs(s)), gram_rank(s));
  EXPECT_EQ(s.size(), 3u);
}

TEST(Spectra, LatticeFromTopVertex) {
  const Lattice l1 = enumerate_lattice({0, 0, -3}, Algebra::su21, 1);
  std::set<ParamPoint> labels;
  for (const auto& p : l1.points) labels.insert(p.label);
  EXPECT_TRUE(labels.count({0, 1, -4}));
  EXPECT_FALSE(labels.count({-1, -1, -3}));
  EXPECT_TRUE(apply(Op::APlus, ground_full(0, -3)).is_zero());
  // every generated state really is nonzero and normalizable
  for (const auto& p : l1.points)
    for (const auto& w : p.basis) {
      EXPECT_FALSE(w.state.is_zero());
      EXPECT_GT(oracle::inner_2d(w.state.expr, w.state.expr), 0.0);
      EXPECT_NEAR(oracle::inner_2d(w.state.expr, w.state.expr), inner(w.state.expr, w.state.expr),
                  1e-9 * inner(w.state.expr, w.state.expr));
    }
  const Lattice l0 = enumerate_lattice({0, 0, -3}, Algebra::so42, 0);
  EXPECT_EQ(l0.points.size(), 1u);
}

TEST(Spectra, Su21LatticesLieInOnePlane) {
  for (const ParamPoint& v : {ParamPoint{0, 0, -3}, ParamPoint{1, 0, -4}, ParamPoint{2, 0, -5}}) {
    const Lattice lat = enumerate_lattice(v, Algebra::su21, 3);
    for (const auto& p : lat.points) EXPECT_EQ(cprime(p.label), cprime(v));
  }
  const Lattice so = enumerate_lattice({0, 0, -3}, Algebra::so42, 2);
  std::set<Rational> planes;
  for (const auto& p : so.points) planes.insert(cprime(p.label));
  EXPECT_GT(planes.size(), 1u);
}

TEST(Spectra, EveryGeneratedStateIsAnExactEigenstate) {
  for (const ParamPoint& v : {ParamPoint{1, 0, -4}, ParamPoint{0, 0, -3}}) {
    const Rational e = vertex_energy(v.l0, v.l2);
    for (Algebra alg : {Algebra::su21, Algebra::so42}) {
      if (alg == Algebra::so42 && v.l0 != 0) continue;
      const Lattice lat = enumerate_lattice(v, alg, 2);
      for (const auto& p : lat.points)
        for (const auto& w : p.basis) EXPECT_EQ(proportionality(apply_hamiltonian(w.state), w.state.expr), e);
    }
  }
}

TEST(Spectra, DepthIsMinimalWordLength) {
  const Lattice lat = enumerate_lattice({1, 0, -4}, Algebra::su21, 2);
  const LatticePoint* p = lat.find({0, 0, -5});
  ASSERT_NE(p, nullptr);
  EXPECT_EQ(p->depth, 1);  // B+ reaches it in one step
  EXPECT_EQ(p->degeneracy, 2);
}

TEST(Spectra, BoundSpectrumOfTheWorkedExample) {
  const SpectrumReport rep = bound_spectrum({0, 0, -5});
  ASSERT_EQ(rep.levels.size(), 2u);
  EXPECT_EQ(rep.levels[0].energy, make_rational(-35, 4));
  EXPECT_EQ(rep.levels[0].degeneracy, 1);
  EXPECT_EQ(rep.levels[1].energy, make_rational(-3, 4));
  EXPECT_EQ(rep.levels[1].degeneracy, 2);
  for (const auto& lvl : rep.levels) EXPECT_LT(lvl.energy, 0);
}

TEST(Spectra, ParityForbidsTheIntermediateVertex) {
  // Every raising shift changes l0 + l1 + l2 by an even amount.
  for (Op op : {Op::APlus, Op::BPlus, Op::CPlus, Op::AtildePlus, Op::BtildePlus, Op::CtildePlus}) {
    const ParamPoint s = shift(op);
    EXPECT_TRUE(is_integer((s.l0 + s.l1 + s.l2) / 2)) << name(op);
  }
  for (const ParamPoint& v : {ParamPoint{0, 0, -4}, ParamPoint{1, 0, -5}, ParamPoint{2, 0, -6}})
    EXPECT_TRUE(states_at(v, {0, 0, -5}).empty()) << v.str();
}

TEST(Spectra, ExcitedLevelDegeneraciesGrowByOne) {
  const SpectrumReport rep = bound_spectrum({0, 0, -9});
  ASSERT_EQ(rep.levels.size(), 4u);
  for (std::size_t n = 0; n < rep.levels.size(); ++n) {
    EXPECT_EQ(rep.levels[n].degeneracy, static_cast<int>(n + 1));
    std::vector<FunExpr> fs;
    for (const auto& w : rep.levels[n].witnesses) fs.push_back(build_state(rep.levels[n].vertex, w).expr);
    EXPECT_EQ(oracle::exact_rank(fs), rep.levels[n].degeneracy);
  }
}

TEST(Spectra, EqualVertexSumsGiveEqualEnergies) {
  EXPECT_EQ(vertex_energy(0, -3), vertex_energy(1, -4));
  EXPECT_EQ(vertex_energy(1, -4), vertex_energy(2, -5));
  const auto a = states_at({1, 0, -4}, {0, 1, -6});
  const auto b = states_at({2, 0, -5}, {1, 1, -7});
  ASSERT_FALSE(a.empty());
  ASSERT_FALSE(b.empty());
  EXPECT_EQ(proportionality(apply_hamiltonian(a[0]), a[0].expr), proportionality(apply_hamiltonian(b[0]), b[0].expr));
}

TEST(Spectra, InadmissibleTargetsAreRejected) {
  EXPECT_THROW(bound_spectrum({0, 0, -2}), AdmissibilityError);
  EXPECT_THROW(bound_spectrum({0, half, -6}), AdmissibilityError);
}

TEST(Spectra, NormalizationMatchesQuadrature) {
  const auto [unit, n] = normalize(ground_full(0, -3));
  EXPECT_NEAR(inner(unit.expr, unit.expr), 1.0, 1e-12);
  const LabeledState g = ground_full(0, -3);
  EXPECT_NEAR(n, 1.0 / std::sqrt(oracle::inner_2d(g.expr, g.expr)), 1e-8);
  EXPECT_THROW(normalize({{0, 0, -3}, FunExpr()}), DivergenceError);
}

TEST(Spectra, OrthonormalizedSecondLevelPair) {
  const auto o = orthonormalize(states_at({1, 0, -4}, {0, 0, -5}));
  ASSERT_EQ(o.size(), 2u);
  EXPECT_NEAR(inner(o[0].expr, o[0].expr), 1.0, 1e-10);
  EXPECT_NEAR(inner(o[1].expr, o[1].expr), 1.0, 1e-10);
  EXPECT_NEAR(inner(o[0].expr, o[1].expr), 0.0, 1e-10);
}
