#pragma once

// Span-closure engine for the *-algebra generated by a finite set of
// matrices, plus the dimension and decomposition checks built on it.

#include <optional>
#include <vector>

#include "picross/ops.hpp"

namespace picross {

class AlgebraBasis {
 public:
  AlgebraBasis(Eigen::Index ambientDim, double rankTol);

  Eigen::Index ambient_dim() const { return ambientDim_; }
  Eigen::Index dim() const { return span_.dim(); }
  bool converged() const { return converged_; }
  int iterations() const { return iterations_; }
  std::vector<ComplexMatrix> basis() const { return span_.elements(); }
  const linalg::SpanBuilder& span() const { return span_; }

 private:
  friend AlgebraBasis generate(const std::vector<ComplexMatrix>&, Eigen::Index, const Tolerance&);
  friend AlgebraBasis span_of(const std::vector<ComplexMatrix>&, const Tolerance&);

  Eigen::Index ambientDim_;
  linalg::SpanBuilder span_;
  bool converged_ = false;
  int iterations_ = 0;
};

/// Smallest subspace containing the generators and their adjoints that is
/// closed under multiplication (words of length >= 1; no unit adjoined).
/// Stops with converged() == false once maxDim is exceeded.
AlgebraBasis generate(const std::vector<ComplexMatrix>& gens, Eigen::Index maxDim = 1600,
                      const Tolerance& tol = {});
AlgebraBasis generate(const std::vector<Operator>& gens, Eigen::Index maxDim = 1600,
                      const Tolerance& tol = {});

/// Plain linear span, no closure.
AlgebraBasis span_of(const std::vector<ComplexMatrix>& elements, const Tolerance& tol = {});

struct Membership {
  double residual = 0.0;  // trace norm of the component outside the span
  bool member = false;
};
/// member iff residual <= rankTol * ||A||_F.
Membership contains(const AlgebraBasis& ab, const ComplexMatrix& a, const Tolerance& tol = {});

/// Index triple (r, u, t) naming T_r (1 - T_u T_u^*) T_t^*.
struct IdealElement {
  SemigroupElement r;
  SemigroupElement u;
  SemigroupElement t;
};

Operator ideal_element(const std::shared_ptr<const Basis>& line, const IdealElement& e);

/// Orthonormal span of T_r (1 - T_u T_u^*) T_t^* over the given ranges.
AlgebraBasis commutator_ideal_span(const IndexSet& set, const std::vector<SemigroupElement>& rRange,
                                   const std::vector<SemigroupElement>& uRange,
                                   const std::vector<SemigroupElement>& tRange,
                                   const Tolerance& tol = {});

enum class IdealSide { LeftShift, LeftShiftAdjoint, RightShift, RightShiftAdjoint };

/// Predicted product of T_s, T_s^* (on the left) or T_s, T_s^* (on the
/// right) with the ideal element; nullopt means the product is zero.
std::optional<IdealElement> predict_ideal_product(IdealSide side, const SemigroupElement& s,
                                                  const IdealElement& e);

struct IdealCaseReport {
  double residual = 0.0;  // max guarded ||actual - predicted||
  std::size_t cases = 0;
  std::size_t zeroCases = 0;
  std::size_t shiftDownCases = 0;   // r >= s under left T_s^*
  std::size_t absorbedCases = 0;    // r < s, s - r < u under left T_s^*
};

/// Checks every side, every s in sRange and every listed element.
IdealCaseReport commutator_ideal_cases(const IndexSet& set,
                                       const std::vector<SemigroupElement>& sRange,
                                       const std::vector<IdealElement>& elements);

struct JKReport {
  double decomposition = 0.0;  // max ||J^s_t - K^s_t - e_s (x) e_{s-t}||, t <= s
  double beyond = 0.0;         // max ||J^s_t|| + ||K^s_t|| for t > s
  double matrixUnits = 0.0;    // max ||(J_{s-r})^* J_s J_s^* J_{s-t} - e_r (x) e_t||
  double compression = 0.0;    // max ||P T_t P - K^s_t|| with P = 1 - T_s T_s^*
  Eigen::Index algebraDim = 0;
  Eigen::Index expectedDim = 0;
  bool converged = false;
};

/// The J/K decomposition, the matrix-unit words and the dimension of
/// C*(J^s) on [0, s]. The dimension is generated by J^s_1 when the set is
/// Z-generated and by every J^s_t otherwise.
JKReport jk_decomposition_check(const IndexSet& set, const SemigroupElement& s,
                                const Tolerance& tol = {});

/// Numeric rank of K^s_t on the group-cone truncation at each depth.
std::vector<int> rank_growth_K(const std::vector<SemigroupElement>& gens, const SemigroupElement& s,
                               const SemigroupElement& t, const std::vector<int>& depths,
                               const Tolerance& tol = {});

}  // namespace picross
