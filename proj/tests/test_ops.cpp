#include <gtest/gtest.h>

#include "oracles.hpp"
#include "picross/ops.hpp"
#include "picross/random.hpp"

using namespace picross;

namespace {

IndexSet ints(int cutoff) { return enumerate({SemigroupElement(1)}, SemigroupElement(cutoff)); }

// Matrix of r -> r + s on the labels of `set`, dropping images outside it.
ComplexMatrix shift_oracle(const IndexSet& set, const SemigroupElement& s) {
  const auto n = static_cast<Eigen::Index>(set.size());
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (std::size_t c = 0; c < set.size(); ++c) {
    if (const auto r = set.index_of(set[c] + s)) m(static_cast<Eigen::Index>(*r), static_cast<Eigen::Index>(c)) = 1.0;
  }
  return m;
}

}  // namespace

TEST(ToeplitzShift, SubdiagonalOnIntegers) {
  EXPECT_EQ(toeplitz_shift(ints(3), SemigroupElement(1)).matrix(), oracle::shift(3));
  EXPECT_EQ(toeplitz_shift(ints(3), SemigroupElement(0)).matrix(), ComplexMatrix::Identity(4, 4));
}

TEST(ToeplitzShift, SparseGenerators) {
  const IndexSet set = enumerate({SemigroupElement(2), SemigroupElement(3)}, SemigroupElement(7));
  EXPECT_EQ(toeplitz_shift(set, SemigroupElement(2)).matrix(), shift_oracle(set, SemigroupElement(2)));
}

TEST(ToeplitzShift, DenseGeneratorsMatchRule) {
  const IndexSet set = enumerate({SemigroupElement(1), SemigroupElement::sqrt2()}, SemigroupElement(4));
  for (const auto& s : {SemigroupElement(1), SemigroupElement::sqrt2()}) {
    EXPECT_EQ(toeplitz_shift(set, s).matrix(), shift_oracle(set, s));
  }
}

TEST(ToeplitzShift, IsPartialIsometry) {
  const IndexSet set = enumerate({SemigroupElement(1), SemigroupElement::sqrt2()}, SemigroupElement(4));
  for (const auto& s : set.elements()) {
    const auto c = is_partial_isometry(toeplitz_shift(set, s));
    EXPECT_TRUE(c.ok);
    EXPECT_EQ(c.residual, 0.0);
  }
}

TEST(TruncatedJ, IsJ2AtS2T1) {
  EXPECT_EQ(truncated_J(ints(6), SemigroupElement(2), SemigroupElement(1)).matrix(), oracle::shift(2));
}

TEST(TruncatedJ, VanishesBeyondS) {
  EXPECT_EQ(oracle::max_abs(truncated_J(ints(6), SemigroupElement(2), SemigroupElement(3)).matrix()), 0.0);
}

TEST(TruncatedJ, RankOneAtTEqualsS) {
  EXPECT_EQ(truncated_J(ints(6), SemigroupElement(2), SemigroupElement(2)).matrix(), oracle::unit(3, 2, 0));
}

TEST(TruncatedK, VanishesAtS) {
  EXPECT_EQ(oracle::max_abs(truncated_K(ints(6), SemigroupElement(2), SemigroupElement(2)).matrix()), 0.0);
}

TEST(TruncatedK, ShiftOnOpenInterval) {
  EXPECT_EQ(truncated_K(ints(6), SemigroupElement(3), SemigroupElement(1)).matrix(), oracle::shift(2));
  EXPECT_EQ(truncated_K(ints(6), SemigroupElement(3), SemigroupElement(0)).matrix(), ComplexMatrix::Identity(3, 3));
}

TEST(TruncatedJK, DecompositionProperty) {
  const IndexSet set = ints(8);
  for (int s = 0; s <= 8; ++s) {
    for (int t = 0; t <= 9; ++t) {
      const ComplexMatrix j = truncated_J(set, s, t).matrix();
      ComplexMatrix expected = ComplexMatrix::Zero(s + 1, s + 1);
      if (t <= s) {
        expected.topLeftCorner(s, s) = truncated_K(set, s, t).matrix();
        expected(s, s - t) += 1.0;
      }
      EXPECT_EQ(j, expected) << "s=" << s << " t=" << t;
    }
  }
}

TEST(Indicator, Basics) {
  const IndexSet set = ints(3);
  EXPECT_EQ(indicator_projection(set, 0).matrix(), ComplexMatrix::Identity(4, 4));
  ComplexMatrix d = ComplexMatrix::Zero(4, 4);
  d(2, 2) = d(3, 3) = 1.0;
  EXPECT_EQ(indicator_projection(set, 2).matrix(), d);
}

TEST(Indicator, ProductIsMax) {
  const IndexSet set = enumerate({SemigroupElement(1), SemigroupElement::sqrt2()}, SemigroupElement(3));
  for (const auto& s : set.elements()) {
    for (const auto& t : set.elements()) {
      EXPECT_EQ((indicator_projection(set, s) * indicator_projection(set, t)).matrix(),
                indicator_projection(set, max(s, t)).matrix());
    }
  }
}

TEST(Indicator, RangeOfShiftOnGuard) {
  const IndexSet set = ints(10);
  for (int s = 0; s <= 4; ++s) {
    const Operator ts = toeplitz_shift(set, s);
    const auto g = guarded_residual(ts * ts.adjoint(), indicator_projection(set, s));
    EXPECT_GT(g.guardSize, 0u);
    EXPECT_EQ(g.residual, 0.0);
  }
}

TEST(GridShift, TauAction) {
  const auto grid = Basis::grid(2);
  const Operator v = grid_shift(grid, GridMode::Tau, 1);
  const auto col01 = *grid->index_of(GridIndex{0, 1});
  const auto row10 = *grid->index_of(GridIndex{1, 0});
  const auto col00 = *grid->index_of(GridIndex{0, 0});
  EXPECT_EQ(v.matrix()(row10, col01), Complex(1.0));
  EXPECT_EQ(v.matrix().col(col01).cwiseAbs().sum(), 1.0);
  EXPECT_EQ(v.matrix().col(col00).cwiseAbs().sum(), 0.0);
}

TEST(GridShift, SigmaAdjointMovesSecondCoordinate) {
  const int n = 5;
  const auto grid = Basis::grid(n);
  const Operator vs = grid_shift(grid, GridMode::Sigma, 1).adjoint();
  for (int k = 0; k <= n; ++k) {
    for (int l = 0; l < n; ++l) {
      const auto c = *grid->index_of(GridIndex{k, l});
      const auto r = *grid->index_of(GridIndex{k, l + 1});
      EXPECT_EQ(vs.matrix()(r, c), Complex(1.0));
    }
  }
}

TEST(GridShift, PowersAgree) {
  const auto grid = Basis::grid(7);
  const Operator v = grid_shift(grid, GridMode::Tau, 1);
  EXPECT_EQ(grid_shift(grid, GridMode::Tau, 0).matrix(), ComplexMatrix::Identity(grid->size(), grid->size()));
  for (int p = 1; p <= 5; ++p) EXPECT_EQ(grid_shift(grid, GridMode::Tau, p).matrix(), power(v, p).matrix());
}

TEST(GridShift, BadArguments) {
  EXPECT_THROW(grid_shift(0, GridMode::Tau, 1), std::invalid_argument);
  EXPECT_THROW(grid_shift(3, GridMode::Tau, -1), std::invalid_argument);
}

TEST(DirectSum, PowerPartialIsometry) {
  const Operator d = direct_sum({shift_matrix(1), shift_matrix(2)});
  ASSERT_EQ(d.dim(), 5);
  for (int p = 1; p <= 3; ++p) EXPECT_TRUE(is_partial_isometry(power(d, p)).ok);
}

TEST(Compress, MatchesKOnInterior) {
  const IndexSet set = ints(10);
  const Operator one = Operator::identity(line_basis(set));
  for (int s = 1; s <= 5; ++s) {
    const Operator ts = toeplitz_shift(set, s);
    for (int t = 0; t <= s; ++t) {
      const Operator c = compress(one - ts * ts.adjoint(), toeplitz_shift(set, t));
      EXPECT_EQ(c.matrix(), truncated_K(set, s, t).matrix());
    }
  }
}

TEST(Compress, RejectsNonProjection) {
  const auto b = Basis::plain(2);
  EXPECT_THROW(compress(Operator(ComplexMatrix::Constant(2, 2, 0.3), b), Operator::identity(b)),
               std::invalid_argument);
}

TEST(PartialIsometry, Examples) {
  EXPECT_TRUE(is_partial_isometry(shift_matrix(2)).ok);
  EXPECT_LT(is_partial_isometry(shift_matrix(2)).residual, 1e-15);
  const auto b = Basis::plain(1);
  EXPECT_FALSE(is_partial_isometry(Operator(ComplexMatrix::Constant(1, 1, 0.5), b)).ok);
}

TEST(ProductCriterion, PowersOfShift) {
  const auto c = product_pi_criterion(shift_matrix(3), shift_matrix(3));
  EXPECT_TRUE(c.productIsPI);
  EXPECT_LT(c.commNorm, 1e-14);
  EXPECT_TRUE(c.agree);
}

TEST(ProductCriterion, ProjectionCounterexample) {
  const auto b = Basis::plain(2);
  const Operator p(oracle::unit(2, 0, 0), b);
  const Operator qq(ComplexMatrix::Constant(2, 2, 0.5), b);
  const auto c = product_pi_criterion(qq, p);
  EXPECT_FALSE(c.productIsPI);
  EXPECT_TRUE(c.agree);
}

TEST(ProductCriterion, RandomPairsAgree) {
  CounterRng rng(42, 9);
  int productPI = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int dim = rng.uniform_int(1, 8);
    const auto b = Basis::plain(dim);
    const Operator s(random_partial_isometry(dim, rng), b);
    const Operator t(random_partial_isometry(dim, rng), b);
    const auto c = product_pi_criterion(s, t);
    EXPECT_TRUE(c.agree) << "trial " << trial;
    productPI += c.productIsPI ? 1 : 0;
  }
  EXPECT_GT(productPI, 0);
  EXPECT_LT(productPI, 100);
}

TEST(ProductCriterion, RejectsNonPartialIsometry) {
  const auto b = Basis::plain(1);
  const Operator h(ComplexMatrix::Constant(1, 1, 0.5), b);
  EXPECT_THROW(product_pi_criterion(h, h), std::invalid_argument);
}

TEST(RandomPartialIsometry, SingularValuesAreZeroOrOne) {
  CounterRng rng(1, 2);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = random_partial_isometry(6, rng);
    for (double sv : linalg::singular_values(a)) EXPECT_TRUE(std::abs(sv) < 1e-12 || std::abs(sv - 1.0) < 1e-12);
  }
}

TEST(SemigroupRep, JFamilyExact) {
  const IndexSet set = ints(8);
  OperatorFamily f;
  for (int t = 0; t <= 8; ++t) f.emplace(SemigroupElement(t), truncated_J(set, 5, t));
  const auto r = semigroup_rep_check(f);
  EXPECT_EQ(r.worst(), 0.0);
  EXPECT_GT(r.pairs, 0u);
}

TEST(SemigroupRep, GridTauGuarded) {
  const auto grid = Basis::grid(12);
  OperatorFamily f;
  for (int p = 0; p <= 5; ++p) f.emplace(SemigroupElement(p), grid_shift(grid, GridMode::Tau, p));
  EXPECT_LE(semigroup_rep_check(f).worst(), 1e-12);
}

TEST(SemigroupRep, IsometryRangeJoin) {
  const IndexSet set = ints(16);
  OperatorFamily f;
  for (int s = 0; s <= 6; ++s) f.emplace(SemigroupElement(s), toeplitz_shift(set, s));
  EXPECT_LE(semigroup_rep_check(f).rangeJoin, 1e-12);
}

TEST(SemigroupRep, DetectsBrokenFamily) {
  const IndexSet set = ints(8);
  OperatorFamily f;
  for (int t = 0; t <= 4; ++t) f.emplace(SemigroupElement(t), truncated_J(set, 5, t));
  f.at(SemigroupElement(2)) = truncated_J(set, 5, 3);
  EXPECT_GT(semigroup_rep_check(f).worst(), 0.5);
  EXPECT_THROW(semigroup_rep_check({}), std::invalid_argument);
}

TEST(Budget, ThenAndJoin) {
  const Budget a = Budget::shift(2);
  const Budget b = Budget::shift(-3);
  EXPECT_EQ(a.then(b).axis(0).net, QuadraticNumber(-1));
  EXPECT_EQ(a.then(b).axis(0).excursion, QuadraticNumber(2));
  EXPECT_EQ(b.then(a).axis(0).excursion, QuadraticNumber(0));
  EXPECT_EQ(a.join(b).axis(0).excursion, QuadraticNumber(2));
  EXPECT_TRUE(Budget().is_zero());
}

TEST(GuardedResidual, EmptyGuardReported) {
  const IndexSet set = ints(3);
  const Operator t = toeplitz_shift(set, 2);
  EXPECT_EQ(guarded_residual(t * t, t * t).guardSize, 0u);
  EXPECT_THROW(toeplitz_shift(set, 5), std::out_of_range);
}

TEST(Operator, MismatchedBasesThrow) {
  EXPECT_THROW(shift_matrix(2) * shift_matrix(3), DimensionError);
}
