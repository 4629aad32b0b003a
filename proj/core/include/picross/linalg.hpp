#pragma once

// Dense complex-matrix substrate shared by every other module.
//
// Matrices are plain Eigen::MatrixXcd values. Equality between operators is
// never a boolean comparison: callers compute a spectral-norm residual and
// compare it against Tolerance::eqTol, so every report carries the number.

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace picross {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Raised when operand shapes do not fit together.
class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when a decomposition fails to converge.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

struct Tolerance {
  double eqTol = 1e-10;    // operator-norm residual threshold for equality
  double rankTol = 1e-8;   // singular-value cutoff for numeric rank

  /// Throws std::invalid_argument unless both thresholds are positive.
  void validate() const;
};

namespace linalg {

ComplexMatrix identity(Eigen::Index n);
ComplexMatrix zeros(Eigen::Index rows, Eigen::Index cols);

/// Matrix product A*B; throws DimensionError when A.cols() != B.rows().
ComplexMatrix compose(const ComplexMatrix& a, const ComplexMatrix& b);

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& a);

/// Singular values in descending order. Throws NumericalError if the SVD
/// does not converge or the input has non-finite entries.
Eigen::VectorXd singular_values(const ComplexMatrix& a);

/// Largest singular value. A matrix whose entries are all exactly zero
/// short-circuits to 0 without a decomposition.
double spectral_norm(const ComplexMatrix& a);

struct NormRank {
  double specNorm = 0.0;
  int rank = 0;
};

NormRank norm_rank(const ComplexMatrix& a, const Tolerance& tol = {});

/// ||A - B|| in the operator norm; throws DimensionError on shape mismatch.
double residual(const ComplexMatrix& a, const ComplexMatrix& b);

/// Trace inner product <A, B> = trace(A^* B).
Complex trace_inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// Norm induced by the trace inner product (the Frobenius norm).
double trace_norm(const ComplexMatrix& a);

/// Commutator AB - BA.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Block-diagonal direct sum.
ComplexMatrix direct_sum(const std::vector<ComplexMatrix>& blocks);

struct ExtendResult {
  std::vector<ComplexMatrix> basis;
  bool added = false;
  double residual = 0.0;  // trace norm of the component orthogonal to the old span
};

/// One Gram-Schmidt step under the trace inner product. The incoming basis
/// must already be orthonormal. The orthogonal component of `m` is appended
/// (normalized) when its trace norm exceeds tol.rankTol.
ExtendResult orthonormal_extend(std::vector<ComplexMatrix> basis, const ComplexMatrix& m,
                                const Tolerance& tol = {});

/// Incremental orthonormal span of equally-shaped matrices, stored as
/// columns of a (rows*cols) x dim matrix so that projections are a single
/// matrix-vector product. Used by the span-closure engine.
class SpanBuilder {
 public:
  SpanBuilder(Eigen::Index rows, Eigen::Index cols, double rankTol);

  /// Orthogonalizes `m` against the span (two passes of classical
  /// Gram-Schmidt) and appends it when the remainder exceeds rankTol.
  /// Returns the remainder's trace norm.
  double add(const ComplexMatrix& m, bool* added = nullptr);

  /// Trace norm of the component of `m` orthogonal to the span.
  double distance(const ComplexMatrix& m) const;

  Eigen::Index dim() const { return dim_; }
  Eigen::Index rows() const { return rows_; }
  Eigen::Index cols() const { return cols_; }
  ComplexMatrix element(Eigen::Index i) const;
  std::vector<ComplexMatrix> elements() const;

 private:
  ComplexVector orthogonal_part(const ComplexVector& v) const;

  Eigen::Index rows_;
  Eigen::Index cols_;
  double rankTol_;
  Eigen::Index dim_ = 0;
  ComplexMatrix columns_;  // (rows*cols) x capacity, first dim_ columns used
};

}  // namespace linalg
}  // namespace picross
