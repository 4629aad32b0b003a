#include "picross/algebra.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace picross {

AlgebraBasis::AlgebraBasis(Eigen::Index ambientDim, double rankTol)
    : ambientDim_(ambientDim), span_(ambientDim, ambientDim, rankTol) {}

namespace {

Eigen::Index common_dim(const std::vector<ComplexMatrix>& mats) {
  if (mats.empty()) throw std::invalid_argument("no generators");
  const auto n = mats.front().rows();
  for (const auto& m : mats) {
    if (m.rows() != n || m.cols() != n) throw DimensionError("generators must share a square shape");
  }
  return n;
}

}  // namespace

AlgebraBasis generate(const std::vector<ComplexMatrix>& gens, Eigen::Index maxDim,
                      const Tolerance& tol) {
  const auto n = common_dim(gens);
  AlgebraBasis ab(n, tol.rankTol);
  std::vector<ComplexMatrix> mats;
  auto push = [&](const ComplexMatrix& m) {
    bool added = false;
    ab.span_.add(m, &added);
    if (added) mats.push_back(ab.span_.element(ab.span_.dim() - 1));
    return ab.span_.dim() <= maxDim;
  };
  for (const auto& g : gens) {
    if (!push(g) || !push(g.adjoint())) return ab;
  }
  std::size_t processed = 0;
  for (;;) {
    ++ab.iterations_;
    const std::size_t before = mats.size();
    for (std::size_t i = 0; i < before; ++i) {
      for (std::size_t j = 0; j < before; ++j) {
        if (i < processed && j < processed) continue;
        if (!push(mats[i] * mats[j])) return ab;
      }
    }
    processed = before;
    if (mats.size() == before) break;
  }
  ab.converged_ = true;
  return ab;
}

AlgebraBasis generate(const std::vector<Operator>& gens, Eigen::Index maxDim, const Tolerance& tol) {
  std::vector<ComplexMatrix> mats;
  mats.reserve(gens.size());
  for (const auto& g : gens) mats.push_back(g.matrix());
  return generate(mats, maxDim, tol);
}

AlgebraBasis span_of(const std::vector<ComplexMatrix>& elements, const Tolerance& tol) {
  AlgebraBasis ab(common_dim(elements), tol.rankTol);
  for (const auto& e : elements) ab.span_.add(e);
  ab.converged_ = true;
  return ab;
}

Membership contains(const AlgebraBasis& ab, const ComplexMatrix& a, const Tolerance& tol) {
  if (a.rows() != ab.ambient_dim() || a.cols() != ab.ambient_dim()) {
    throw DimensionError("contains: matrix does not match the ambient dimension");
  }
  Membership out;
  out.residual = ab.span().distance(a);
  out.member = out.residual <= tol.rankTol * linalg::trace_norm(a);
  return out;
}

Operator ideal_element(const std::shared_ptr<const Basis>& line, const IdealElement& e) {
  const Operator tu = toeplitz_shift(line, e.u);
  return toeplitz_shift(line, e.r) * (Operator::identity(line) - tu * tu.adjoint()) *
         toeplitz_shift(line, e.t).adjoint();
}

AlgebraBasis commutator_ideal_span(const IndexSet& set, const std::vector<SemigroupElement>& rRange,
                                   const std::vector<SemigroupElement>& uRange,
                                   const std::vector<SemigroupElement>& tRange,
                                   const Tolerance& tol) {
  const auto line = line_basis(set);
  std::vector<ComplexMatrix> elements;
  for (const auto& r : rRange) {
    for (const auto& u : uRange) {
      for (const auto& t : tRange) elements.push_back(ideal_element(line, {r, u, t}).matrix());
    }
  }
  return span_of(elements, tol);
}

namespace {

std::optional<IdealElement> left_adjoint_product(const SemigroupElement& s, const IdealElement& e) {
  if (e.r >= s) return IdealElement{e.r - s, e.u, e.t};
  const SemigroupElement gap = s - e.r;
  if (gap < e.u) return IdealElement{SemigroupElement(0), e.u - gap, gap + e.t};
  return std::nullopt;
}

}  // namespace

std::optional<IdealElement> predict_ideal_product(IdealSide side, const SemigroupElement& s,
                                                  const IdealElement& e) {
  switch (side) {
    case IdealSide::LeftShift:
      return IdealElement{e.r + s, e.u, e.t};
    case IdealSide::LeftShiftAdjoint:
      return left_adjoint_product(s, e);
    case IdealSide::RightShiftAdjoint:
      return IdealElement{e.r, e.u, e.t + s};
    case IdealSide::RightShift: {
      const auto p = left_adjoint_product(s, {e.t, e.u, e.r});
      if (!p) return std::nullopt;
      return IdealElement{p->t, p->u, p->r};
    }
  }
  return std::nullopt;
}

IdealCaseReport commutator_ideal_cases(const IndexSet& set,
                                       const std::vector<SemigroupElement>& sRange,
                                       const std::vector<IdealElement>& elements) {
  const auto line = line_basis(set);
  const auto& cut = set.cutoff();
  IdealCaseReport out;
  for (const auto& e : elements) {
    const Operator x = ideal_element(line, e);
    for (const auto& s : sRange) {
      const Operator ts = toeplitz_shift(line, s);
      for (const auto side : {IdealSide::LeftShift, IdealSide::LeftShiftAdjoint,
                              IdealSide::RightShift, IdealSide::RightShiftAdjoint}) {
        const auto predicted = predict_ideal_product(side, s, e);
        if (predicted && (predicted->r > cut || predicted->u > cut || predicted->t > cut)) continue;
        Operator actual = x;
        switch (side) {
          case IdealSide::LeftShift: actual = ts * x; break;
          case IdealSide::LeftShiftAdjoint: actual = ts.adjoint() * x; break;
          case IdealSide::RightShift: actual = x * ts; break;
          case IdealSide::RightShiftAdjoint: actual = x * ts.adjoint(); break;
        }
        const Operator expected =
            predicted ? ideal_element(line, *predicted) : Operator::zero(line);
        out.residual = std::max(out.residual, guarded_residual(actual, expected).residual);
        ++out.cases;
        if (side == IdealSide::LeftShiftAdjoint) {
          if (!predicted) {
            ++out.zeroCases;
          } else if (e.r >= s) {
            ++out.shiftDownCases;
          } else {
            ++out.absorbedCases;
          }
        }
      }
    }
  }
  return out;
}

JKReport jk_decomposition_check(const IndexSet& set, const SemigroupElement& s,
                                const Tolerance& tol) {
  JKReport out;
  const auto closedLabels = interval(set, s, true);
  const auto n = static_cast<Eigen::Index>(closedLabels.size());
  const auto closedBasis = Basis::line(closedLabels, s);

  for (const auto& t : set.elements()) {
    const Operator j = truncated_J(set, s, t);
    const Operator k = truncated_K(set, s, t);
    if (t > s) {
      out.beyond = std::max(out.beyond, linalg::spectral_norm(j.matrix()) +
                                            linalg::spectral_norm(k.matrix()));
      continue;
    }
    ComplexMatrix expected = ComplexMatrix::Zero(n, n);
    expected.topLeftCorner(k.dim(), k.dim()) = k.matrix();
    const auto row = closedBasis->index_of(s);
    const auto col = closedBasis->index_of(s - t);
    if (row && col) expected(*row, *col) += 1.0;
    out.decomposition = std::max(out.decomposition, linalg::residual(j.matrix(), expected));
  }

  const Operator js = truncated_J(set, s, s);
  for (Eigen::Index ri = 0; ri < n; ++ri) {
    const Operator left = truncated_J(set, s, s - closedLabels[static_cast<std::size_t>(ri)]);
    for (Eigen::Index ti = 0; ti < n; ++ti) {
      const Operator right = truncated_J(set, s, s - closedLabels[static_cast<std::size_t>(ti)]);
      const Operator word = left.adjoint() * js * js.adjoint() * right;
      out.matrixUnits = std::max(
          out.matrixUnits, linalg::residual(word.matrix(), matrix_unit(closedBasis, ri, ti).matrix()));
    }
  }

  const auto line = line_basis(set);
  const Operator ts = toeplitz_shift(line, s);
  const Operator p = Operator::identity(line) - ts * ts.adjoint();
  for (const auto& t : interval(set, s, true)) {
    const Operator compressed = compress(p, toeplitz_shift(line, t), tol);
    const Operator k = truncated_K(set, s, t);
    if (compressed.dim() != k.dim()) {
      out.compression = std::numeric_limits<double>::infinity();
      continue;
    }
    out.compression = std::max(out.compression, linalg::residual(compressed.matrix(), k.matrix()));
  }

  std::vector<Operator> gens;
  const bool integers = set.generators().size() == 1 && set.generators().front() == SemigroupElement(1);
  if (integers) {
    gens.push_back(truncated_J(set, s, SemigroupElement(1)));
  } else {
    for (const auto& t : closedLabels) gens.push_back(truncated_J(set, s, t));
  }
  const AlgebraBasis ab = generate(gens, 1600, tol);
  out.algebraDim = ab.dim();
  out.expectedDim = n * n;
  out.converged = ab.converged();
  return out;
}

std::vector<int> rank_growth_K(const std::vector<SemigroupElement>& gens, const SemigroupElement& s,
                               const SemigroupElement& t, const std::vector<int>& depths,
                               const Tolerance& tol) {
  std::vector<int> ranks;
  for (const int depth : depths) {
    const IndexSet set = enumerate_group_cone(gens, depth, s);
    ranks.push_back(linalg::norm_rank(truncated_K(set, s, t).matrix(), tol).rank);
  }
  return ranks;
}

}  // namespace picross
