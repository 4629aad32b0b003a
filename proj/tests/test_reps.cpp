#include <gtest/gtest.h>

#include "oracles.hpp"
#include "picross/random.hpp"
#include "picross/reps.hpp"

using namespace picross;

namespace {

IndexSet ints(int cutoff) { return enumerate({SemigroupElement(1)}, SemigroupElement(cutoff)); }

std::vector<SemigroupElement> range(int lo, int hi) {
  std::vector<SemigroupElement> out;
  for (int i = lo; i <= hi; ++i) out.emplace_back(i);
  return out;
}

OperatorFamily j_family(const IndexSet& set, int s) {
  OperatorFamily v;
  for (const auto& t : set.elements()) v.emplace(t, truncated_J(set, s, t));
  return v;
}

CovariantPair toeplitz_pair(const IndexSet& set) {
  CovariantPair p;
  const auto line = line_basis(set);
  for (const auto& s : set.elements()) {
    p.V.emplace(s, toeplitz_shift(line, s));
    p.piImages.emplace(s, indicator_projection(line, s));
  }
  return p;
}

CovariantPair grid_pair(int n, int maxPower) {
  CovariantPair p;
  const auto grid = Basis::grid(n);
  for (int k = 0; k <= maxPower; ++k) {
    const Operator vk = grid_shift(grid, GridMode::Tau, k);
    p.V.emplace(SemigroupElement(k), vk);
    p.piImages.emplace(SemigroupElement(k), vk * vk.adjoint());
  }
  return p;
}

}  // namespace

TEST(Action, TauOnGenerators) {
  const auto img = act(Action::tau(), 2, 3);
  EXPECT_EQ(img.kind, GeneratorImage::Kind::Indicator);
  EXPECT_EQ(img.label, SemigroupElement(5));
}

TEST(Action, SigmaBackwardTranslation) {
  EXPECT_EQ(act(Action::sigma(), 2, 5).label, SemigroupElement(3));
  EXPECT_EQ(act(Action::sigma(), 2, 1).kind, GeneratorImage::Kind::Unit);
}

TEST(Action, IntervalMembership) {
  EXPECT_TRUE(Action::tau_interval(3, true).in_interval(3));
  EXPECT_FALSE(Action::tau_interval(3, false).in_interval(3));
}

TEST(RepFromProjections, IndicatorsFaithful) {
  const IndexSet set = ints(6);
  ProjectionFamily fam;
  for (const auto& s : set.elements()) fam.P.emplace(s, indicator_projection(set, s));
  const auto rep = rep_from_projections(fam);
  EXPECT_TRUE(rep.faithful);
  EXPECT_EQ(rep.monotonicity, 0.0);
  const Operator x = rep.apply({{SemigroupElement(1), 2.0}, {SemigroupElement(3), -1.0}});
  ComplexMatrix expected = ComplexMatrix::Zero(7, 7);
  for (int r = 1; r <= 6; ++r) expected(r, r) = r >= 3 ? 1.0 : 2.0;
  EXPECT_EQ(x.matrix(), expected);
  EXPECT_THROW(rep.apply({{SemigroupElement(9), 1.0}}), std::out_of_range);
}

TEST(RepFromProjections, ConstantNotFaithful) {
  const IndexSet set = ints(4);
  ProjectionFamily fam;
  for (const auto& s : set.elements()) fam.P.emplace(s, indicator_projection(set, 2));
  EXPECT_FALSE(rep_from_projections(fam).faithful);
}

TEST(RepFromProjections, RangeProjectionsOfJ) {
  const IndexSet set = ints(6);
  ProjectionFamily fam;
  for (const auto& [t, v] : j_family(set, 4)) fam.P.emplace(t, v * v.adjoint());
  const auto rep = rep_from_projections(fam);
  EXPECT_EQ(rep.monotonicity, 0.0);
}

TEST(RepFromProjections, RejectsIncreasingFamily) {
  const IndexSet set = ints(4);
  ProjectionFamily fam;
  for (const auto& s : set.elements()) fam.P.emplace(s, indicator_projection(set, SemigroupElement(4) - s));
  EXPECT_THROW(rep_from_projections(fam), std::invalid_argument);
}

TEST(PiFromV, RangeProjectionsOfJ) {
  const IndexSet set = ints(6);
  const auto v = j_family(set, 4);
  const CovariantPair p = pi_from_V(v, 4, true);
  for (int t = 0; t <= 4; ++t) {
    const Operator& vt = v.at(SemigroupElement(t));
    EXPECT_EQ(p.piImages.at(SemigroupElement(t)).matrix(), (vt * vt.adjoint()).matrix());
  }
}

TEST(PiFromV, OpenIntervalForK) {
  const IndexSet set = ints(6);
  OperatorFamily v;
  for (const auto& t : set.elements()) v.emplace(t, truncated_K(set, 4, t));
  const CovariantPair p = pi_from_V(v, 4, false);
  EXPECT_LE(check_covariance(p).covrep, 1e-12);
}

TEST(PiFromV, OnlyUnitAtZero) {
  const auto b = Basis::plain(3);
  OperatorFamily v{{SemigroupElement(0), Operator::identity(b)}, {SemigroupElement(1), Operator::zero(b)},
                   {SemigroupElement(2), Operator::zero(b)}};
  const CovariantPair p = pi_from_V(v, 2, true);
  EXPECT_EQ(oracle::max_abs(p.piImages.at(SemigroupElement(1)).matrix()), 0.0);
  EXPECT_EQ(oracle::max_abs(p.piImages.at(SemigroupElement(2)).matrix()), 0.0);
}

TEST(Covariance, ToeplitzAndGridPass) {
  for (const auto& p : {toeplitz_pair(ints(10)), grid_pair(10, 4)}) {
    const auto r = check_covariance(p);
    EXPECT_GT(r.cases, 0u);
    EXPECT_LE(r.covrep, 1e-12);
    EXPECT_LE(r.altcov, 1e-12);
    EXPECT_EQ(r.unitV0, 0.0);
    EXPECT_TRUE(r.agree);
  }
}

TEST(Covariance, PerturbedFailsTogether) {
  CounterRng rng(5, 5);
  for (int trial = 0; trial < 10; ++trial) {
    CovariantPair p = trial % 2 ? toeplitz_pair(ints(8)) : grid_pair(8, 3);
    for (auto& [s, v] : p.V) {
      ComplexMatrix e(v.dim(), v.dim());
      for (Eigen::Index j = 0; j < e.cols(); ++j) {
        for (Eigen::Index i = 0; i < e.rows(); ++i) e(i, j) = Complex(rng.normal(), rng.normal());
      }
      v = Operator(v.matrix() + 1e-3 * e, v.basis_ptr(), v.budget(), v.adjoint_budget());
    }
    const auto r = check_covariance(p);
    EXPECT_FALSE(r.covrepPass);
    EXPECT_FALSE(r.altcovPass);
    EXPECT_TRUE(r.agree);
  }
}

TEST(InducedRep, CovariantWithUnitV0) {
  const IndexSet set = ints(5);
  const CovariantPair p = induced_rep(point_characters(set.elements()), set, static_cast<int>(set.size()));
  const auto r = check_covariance(p);
  EXPECT_LE(r.covrep, 1e-12);
  EXPECT_LE(r.altcov, 1e-12);
  const Operator& v0 = p.V.at(SemigroupElement(0));
  EXPECT_EQ(v0.matrix(), ComplexMatrix::Identity(v0.dim(), v0.dim()));
}

TEST(PointCharacters, Diagonal) {
  const auto pi0 = point_characters({SemigroupElement(0), SemigroupElement(2), SemigroupElement(4)});
  EXPECT_EQ(pi0(SemigroupElement(2)), (std::vector<int>{0, 1, 1}));
}

TEST(Faithfulness, GridTauWitness) {
  const auto grid = Basis::grid(12);
  OperatorFamily v;
  for (int p = 0; p <= 6; ++p) v.emplace(SemigroupElement(p), grid_shift(grid, GridMode::Tau, p));
  const auto w = faithfulness_witness(v, range(1, 3), range(0, 3));
  EXPECT_TRUE(w.ok);
  EXPECT_GE(w.minNorm, 1.0 - 1e-12);
}

TEST(Faithfulness, GridWitnessVectors) {
  // Both e_{i,0} and e_{0,i} are fixed by the witness operator once m and the
  // projections are chosen to cover them.
  const int n = 10;
  const auto grid = Basis::grid(n);
  const Operator v = grid_shift(grid, GridMode::Tau, 1);
  const Operator vs = v.adjoint();
  const Operator one = Operator::identity(grid);
  for (int i = 1; i <= 3; ++i) {
    const Operator w0 = (one - power(vs, 1) * power(v, 1)) * (one - power(v, i + 1) * power(vs, i + 1));
    const auto a = *grid->index_of(GridIndex{i, 0});
    EXPECT_EQ(w0.matrix()(a, a), Complex(1.0));
    const Operator w1 = (one - power(vs, i + 1) * power(v, i + 1)) * (one - v * vs);
    const auto b = *grid->index_of(GridIndex{0, i});
    EXPECT_EQ(w1.matrix()(b, b), Complex(1.0));
    EXPECT_NEAR(w1.matrix().col(b).norm(), 1.0, 1e-15);
  }
}

TEST(Faithfulness, IsometryFails) {
  const IndexSet set = ints(12);
  OperatorFamily v;
  for (int p = 0; p <= 4; ++p) v.emplace(SemigroupElement(p), toeplitz_shift(set, p));
  const auto w = faithfulness_witness(v, range(1, 3), range(0, 3));
  EXPECT_FALSE(w.ok);
  EXPECT_LT(w.minNorm, 1e-12);
}

TEST(Faithfulness, DirectSumOfJ) {
  const IndexSet set = ints(8);
  OperatorFamily v;
  for (int s = 0; s <= 4; ++s) {
    std::vector<Operator> parts;
    for (int r = 0; r <= 4; ++r) parts.push_back(truncated_J(set, r, s));
    v.emplace(SemigroupElement(s), direct_sum(parts));
  }
  EXPECT_TRUE(faithfulness_witness(v, range(1, 4), range(0, 4)).ok);
}
