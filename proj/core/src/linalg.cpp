#include "picross/linalg.hpp"

#include <cmath>
#include <sstream>

namespace picross {

void Tolerance::validate() const {
  if (!(eqTol > 0.0) || !(rankTol > 0.0)) {
    throw std::invalid_argument("tolerances must be positive");
  }
}

namespace linalg {

namespace {

std::string shape(const ComplexMatrix& a) {
  std::ostringstream out;
  out << a.rows() << "x" << a.cols();
  return out.str();
}

}  // namespace

ComplexMatrix identity(Eigen::Index n) { return ComplexMatrix::Identity(n, n); }

ComplexMatrix zeros(Eigen::Index rows, Eigen::Index cols) {
  return ComplexMatrix::Zero(rows, cols);
}

ComplexMatrix compose(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("compose: " + shape(a) + " times " + shape(b));
  }
  ComplexMatrix out = a * b;
  return out;
}

ComplexMatrix adjoint(const ComplexMatrix& a) { return a.adjoint(); }

Eigen::VectorXd singular_values(const ComplexMatrix& a) {
  if (a.size() == 0) return Eigen::VectorXd();
  if (!a.allFinite()) throw NumericalError("singular_values: non-finite entries");
  Eigen::BDCSVD<ComplexMatrix> svd(a);
  if (svd.info() != Eigen::Success) {
    throw NumericalError("singular_values: SVD did not converge");
  }
  return svd.singularValues();
}

double spectral_norm(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  if ((a.array() == Complex(0.0, 0.0)).all()) return 0.0;
  const Eigen::VectorXd sv = singular_values(a);
  return sv.size() == 0 ? 0.0 : sv(0);
}

NormRank norm_rank(const ComplexMatrix& a, const Tolerance& tol) {
  NormRank out;
  if (a.size() == 0 || (a.array() == Complex(0.0, 0.0)).all()) return out;
  const Eigen::VectorXd sv = singular_values(a);
  out.specNorm = sv(0);
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > tol.rankTol) ++out.rank;
  }
  return out;
}

double residual(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("residual: " + shape(a) + " vs " + shape(b));
  }
  return spectral_norm(a - b);
}

Complex trace_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("trace_inner: " + shape(a) + " vs " + shape(b));
  }
  return (a.conjugate().cwiseProduct(b)).sum();
}

double trace_norm(const ComplexMatrix& a) { return a.norm(); }

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return compose(a, b) - compose(b, a);
}

ComplexMatrix direct_sum(const std::vector<ComplexMatrix>& blocks) {
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  ComplexMatrix out = ComplexMatrix::Zero(rows, cols);
  Eigen::Index r = 0;
  Eigen::Index c = 0;
  for (const auto& b : blocks) {
    out.block(r, c, b.rows(), b.cols()) = b;
    r += b.rows();
    c += b.cols();
  }
  return out;
}

ExtendResult orthonormal_extend(std::vector<ComplexMatrix> basis, const ComplexMatrix& m,
                                const Tolerance& tol) {
  for (const auto& b : basis) {
    if (b.rows() != m.rows() || b.cols() != m.cols()) {
      throw DimensionError("orthonormal_extend: basis element " + shape(b) + " vs " + shape(m));
    }
  }
  ComplexMatrix rest = m;
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& b : basis) rest -= trace_inner(b, rest) * b;
  }
  ExtendResult out;
  out.residual = trace_norm(rest);
  out.added = out.residual > tol.rankTol;
  if (out.added) basis.push_back(rest / out.residual);
  out.basis = std::move(basis);
  return out;
}

SpanBuilder::SpanBuilder(Eigen::Index rows, Eigen::Index cols, double rankTol)
    : rows_(rows), cols_(cols), rankTol_(rankTol), columns_(rows * cols, 16) {}

ComplexVector SpanBuilder::orthogonal_part(const ComplexVector& v) const {
  ComplexVector rest = v;
  if (dim_ == 0) return rest;
  const auto q = columns_.leftCols(dim_);
  for (int pass = 0; pass < 2; ++pass) {
    const ComplexVector coeff = q.adjoint() * rest;
    rest -= q * coeff;
  }
  return rest;
}

double SpanBuilder::add(const ComplexMatrix& m, bool* added) {
  if (m.rows() != rows_ || m.cols() != cols_) {
    throw DimensionError("SpanBuilder::add: expected " + std::to_string(rows_) + "x" +
                         std::to_string(cols_) + ", got " + shape(m));
  }
  const ComplexVector v = Eigen::Map<const ComplexVector>(m.data(), m.size());
  const ComplexVector rest = orthogonal_part(v);
  const double norm = rest.norm();
  const bool grow = norm > rankTol_;
  if (grow) {
    if (dim_ == columns_.cols()) columns_.conservativeResize(Eigen::NoChange, 2 * dim_);
    columns_.col(dim_) = rest / norm;
    ++dim_;
  }
  if (added) *added = grow;
  return norm;
}

double SpanBuilder::distance(const ComplexMatrix& m) const {
  if (m.rows() != rows_ || m.cols() != cols_) {
    throw DimensionError("SpanBuilder::distance: shape mismatch " + shape(m));
  }
  const ComplexVector v = Eigen::Map<const ComplexVector>(m.data(), m.size());
  return orthogonal_part(v).norm();
}

ComplexMatrix SpanBuilder::element(Eigen::Index i) const {
  ComplexMatrix out(rows_, cols_);
  Eigen::Map<ComplexVector>(out.data(), out.size()) = columns_.col(i);
  return out;
}

std::vector<ComplexMatrix> SpanBuilder::elements() const {
  std::vector<ComplexMatrix> out;
  out.reserve(static_cast<std::size_t>(dim_));
  for (Eigen::Index i = 0; i < dim_; ++i) out.push_back(element(i));
  return out;
}

}  // namespace linalg
}  // namespace picross
