#include <gtest/gtest.h>

#include "oracles.hpp"
#include "picross/sigma.hpp"

using namespace picross;

namespace {

Operator grid_projection(const std::shared_ptr<const Basis>& grid, int n, bool diagonal) {
  ComplexMatrix m = ComplexMatrix::Zero(grid->size(), grid->size());
  for (int k = 0; k <= grid->grid_n(); ++k) {
    for (int l = 0; l <= grid->grid_n(); ++l) {
      const bool in = diagonal ? k + l >= n : (l == 0 && k >= n);
      if (in) {
        const auto i = *grid->index_of(GridIndex{k, l});
        m(i, i) = 1.0;
      }
    }
  }
  return Operator(m, grid);
}

Operator model_t(int dim) {
  std::vector<SemigroupElement> labels;
  for (int r = 0; r < dim; ++r) labels.emplace_back(r);
  return toeplitz_shift(Basis::line(labels, dim - 1), 1);
}

}  // namespace

TEST(Egsigma, QAndPiAreCoordinateProjections) {
  const CoisometricSystem sys = egsigma_system(10, 8);
  const auto grid = sys.V.basis_ptr();
  for (int n = 0; n <= 8; ++n) {
    EXPECT_EQ(sys.Q[static_cast<std::size_t>(n)].matrix(), grid_projection(grid, n, false).matrix());
    const auto g = guarded_residual(build_pi(sys, n), grid_projection(grid, n, true));
    EXPECT_GT(g.guardSize, 0u);
    EXPECT_EQ(g.residual, 0.0);
  }
}

TEST(BuildPi, ZeroIsIdentity) {
  const CoisometricSystem sys = egsigma_system(8, 4);
  EXPECT_EQ(build_pi(sys, 0).matrix(), ComplexMatrix::Identity(sys.V.dim(), sys.V.dim()));
  EXPECT_THROW(build_pi(sys, 5), std::out_of_range);
  EXPECT_THROW(build_pi(sys, -1), std::out_of_range);
}

TEST(BuildPi, RecursionProperty) {
  const CoisometricSystem sys = egsigma_system(12, 8);
  const auto pi = build_pi_all(sys);
  for (std::size_t n = 1; n < pi.size(); ++n) {
    const Operator rec = sys.Q[n] + sys.V.adjoint() * pi[n - 1] * sys.V;
    EXPECT_LE(guarded_residual(pi[n], rec).residual, 1e-12);
  }
}

TEST(ExtractQ, Roundtrip) {
  const CoisometricSystem sys = egsigma_system(12, 8);
  const auto q = extract_q(build_pi_all(sys), sys.V);
  ASSERT_EQ(q.size(), sys.Q.size());
  for (std::size_t n = 0; n < q.size(); ++n) EXPECT_LE(guarded_residual(q[n], sys.Q[n]).residual, 1e-12);
}

TEST(Invariants, EgsigmaHolds) {
  const CoisometricSystem sys = egsigma_system(12, 8);
  EXPECT_LE(check_system(sys).worst(), 1e-12);
  const auto inv = check_pi(sys, build_pi_all(sys));
  EXPECT_LE(inv.projection, 1e-12);
  EXPECT_LE(inv.monotonicity, 1e-12);
  EXPECT_LE(inv.difference, 1e-12);
}

TEST(Invariants, SwappedQBreaksMonotonicity) {
  CoisometricSystem sys = egsigma_system(10, 6);
  std::swap(sys.Q[2], sys.Q[4]);
  EXPECT_GT(check_system(sys).monotonicity, 0.5);
}

TEST(Covariance, Egsigma) {
  const CoisometricSystem sys = egsigma_system(12, 8);
  const auto rep = covariance_check_sigma(build_pi_all(sys), sys.V, 3);
  EXPECT_GT(rep.covariance.cases, 0u);
  EXPECT_LE(rep.worst(), 1e-12);
}

TEST(Covariance, UnitaryWithZeroQ) {
  const int d = 5;
  const auto b = Basis::plain(d);
  ComplexMatrix c = ComplexMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) c((k + 1) % d, k) = 1.0;
  const CoisometricSystem sys{Operator(c, b), std::vector<Operator>(4, Operator::zero(b))};
  const auto pi = build_pi_all(sys);
  for (const auto& p : pi) EXPECT_LE(guarded_residual(p, Operator::identity(b)).residual, 1e-14);
  EXPECT_LE(covariance_check_sigma(pi, sys.V, 3).worst(), 1e-12);
}

TEST(Faithfulness, GapsAndConstant) {
  const CoisometricSystem sys = egsigma_system(10, 6);
  const auto f = faithfulness_sigma(sys);
  EXPECT_TRUE(f.ok);
  EXPECT_NEAR(f.minGap, 1.0, 1e-14);
  CoisometricSystem flat = sys;
  for (auto& q : flat.Q) q = sys.Q[0];
  EXPECT_FALSE(faithfulness_sigma(flat).ok);
}

TEST(Faithfulness, ModelSystem) {
  const CoisometricSystem sys = model_system(6, 16, 5);
  EXPECT_LE(check_system(sys).worst(), 1e-12);
  EXPECT_TRUE(faithfulness_sigma(sys).ok);
}

TEST(ModelImage, IdentityAtZero) {
  const OperatorSequence seq = model_image(0, 0, 0, 4, 12);
  for (const auto& s : seq.samples) EXPECT_EQ(s.matrix(), ComplexMatrix::Identity(12, 12));
  EXPECT_EQ(seq.tail.matrix(), ComplexMatrix::Identity(12, 12));
}

TEST(ModelImage, RangeProjectionsBelowM) {
  const int dim = 14;
  const Operator t = model_t(dim);
  const OperatorSequence seq = model_image(0, 0, 2, 5, dim);
  for (int n = 0; n < 5; ++n) {
    const Operator expected = n <= 2 ? power(t, 2 - n) * power(t.adjoint(), 2 - n) : Operator::identity(t.basis_ptr());
    EXPECT_LE(guarded_residual(seq.samples[static_cast<std::size_t>(n)], expected).residual, 1e-14) << n;
  }
  EXPECT_LE(guarded_residual(seq.tail, Operator::identity(t.basis_ptr())).residual, 1e-14);
}

TEST(ModelImage, TooSmallDimensionThrows) { EXPECT_THROW(model_image(3, 3, 3, 2, 8), std::out_of_range); }

TEST(ModelEvaluate, ElementQMatchesSystemQ) {
  const int dim = 16;
  const Operator t = model_t(dim);
  const Operator defect = Operator::identity(t.basis_ptr()) - t * t.adjoint();
  for (int n = 0; n <= 4; ++n) {
    const OperatorSequence seq = model_evaluate(element_q(n), 6, dim);
    for (int k = 0; k < 6; ++k) {
      const Operator expected = n <= k ? defect : Operator::zero(t.basis_ptr());
      EXPECT_LE(guarded_residual(seq.samples[static_cast<std::size_t>(k)], expected).residual, 1e-14);
    }
    EXPECT_LE(guarded_residual(seq.tail, defect).residual, 1e-14);
  }
}

TEST(SymbolConstancy, ModelImagesConstant) {
  const OperatorSequence seq = model_image(2, 1, 3, 6, 30);
  const auto c = symbol_constancy(seq, 8);
  EXPECT_TRUE(c.ok);
  EXPECT_EQ(c.tailSymbol.coefficient(1), Complex(1.0));
}

TEST(SymbolConstancy, DetectsChangedSample) {
  const Operator t = model_t(30);
  OperatorSequence seq{{t, t, power(t, 2), t}, t};
  EXPECT_FALSE(symbol_constancy(seq, 4).ok);
}

TEST(OperatorSequence, Arithmetic) {
  const Operator t = model_t(10);
  const OperatorSequence a{{t, t}, t};
  const OperatorSequence b = a * a - Complex(1.0) * a;
  EXPECT_EQ(b.tail.matrix(), (t * t - t).matrix());
  EXPECT_THROW(a + (OperatorSequence{{t}, t}), DimensionError);
}
