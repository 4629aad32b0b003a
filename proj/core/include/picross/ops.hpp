#pragma once

// Concrete operators on truncated bases: shifts, truncated shifts,
// indicator projections, grid shifts, matrix units, and the partial-isometry
// predicates.
//
// Every Operator carries a shift budget. Truncating an infinite-dimensional
// shift is only wrong for basis vectors that get pushed past the cutoff, so
// the budget records, per axis, how far a basis vector can travel upward
// while the operator is applied (the excursion) and where it ends (the net
// shift). A guarded comparison only looks at columns whose headroom covers
// the excursion.

#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "picross/linalg.hpp"
#include "picross/spaces.hpp"

namespace picross {

class CounterRng;

struct GridIndex {
  int k = 0;
  int l = 0;
  friend bool operator==(const GridIndex&, const GridIndex&) = default;
};

using Label = std::variant<std::monostate, SemigroupElement, GridIndex>;

struct AxisBudget {
  QuadraticNumber excursion;
  QuadraticNumber net;
};

class Budget {
 public:
  static constexpr int kAxes = 2;

  /// An exact translation by d0 along the first axis and d1 along the second.
  static Budget shift(const QuadraticNumber& d0, const QuadraticNumber& d1 = 0);

  /// Budget of (next after this): apply this operator, then `next`.
  Budget then(const Budget& next) const;
  /// Budget of a sum of this and `other`.
  Budget join(const Budget& other) const;

  const AxisBudget& axis(int i) const { return axes_[static_cast<std::size_t>(i)]; }
  bool is_zero() const;

 private:
  std::array<AxisBudget, kAxes> axes_{};
};

/// Shared basis description: labels plus the per-axis headroom of each label
/// (distance to the truncation cutoff).
class Basis {
 public:
  enum class Shape { Plain, Line, Grid };

  static std::shared_ptr<const Basis> plain(Eigen::Index n);
  static std::shared_ptr<const Basis> line(std::vector<SemigroupElement> labels,
                                           const SemigroupElement& cutoff);
  static std::shared_ptr<const Basis> grid(int n);
  static std::shared_ptr<const Basis> concat(const std::vector<std::shared_ptr<const Basis>>& parts);
  static std::shared_ptr<const Basis> subset(const Basis& parent,
                                             const std::vector<Eigen::Index>& keep);

  Shape shape() const { return shape_; }
  Eigen::Index size() const { return static_cast<Eigen::Index>(labels_.size()); }
  const Label& label(Eigen::Index i) const { return labels_[static_cast<std::size_t>(i)]; }
  const QuadraticNumber& headroom(Eigen::Index i, int axis) const {
    return headroom_[static_cast<std::size_t>(i)][static_cast<std::size_t>(axis)];
  }
  /// Grid side length minus one; 0 for other shapes.
  int grid_n() const { return gridN_; }
  /// Truncation cutoff of a Line basis.
  const SemigroupElement& cutoff() const { return cutoff_; }

  std::optional<Eigen::Index> index_of(const SemigroupElement& x) const;
  std::optional<Eigen::Index> index_of(const GridIndex& g) const;

  /// Labels whose headroom covers the budget's excursion on every axis.
  std::vector<Eigen::Index> guard(const Budget& budget) const;

 private:
  Shape shape_ = Shape::Plain;
  std::vector<Label> labels_;
  std::vector<std::array<QuadraticNumber, Budget::kAxes>> headroom_;
  std::vector<SemigroupElement> lineLabels_;  // sorted; Line shape only
  SemigroupElement cutoff_;
  int gridN_ = 0;
};

class Operator {
 public:
  Operator(ComplexMatrix matrix, std::shared_ptr<const Basis> basis, Budget budget = {},
           Budget adjointBudget = {});

  static Operator identity(std::shared_ptr<const Basis> basis);
  static Operator zero(std::shared_ptr<const Basis> basis);

  const ComplexMatrix& matrix() const { return matrix_; }
  const Basis& basis() const { return *basis_; }
  const std::shared_ptr<const Basis>& basis_ptr() const { return basis_; }
  const Budget& budget() const { return budget_; }
  const Budget& adjoint_budget() const { return adjointBudget_; }
  Eigen::Index dim() const { return matrix_.rows(); }

  Operator adjoint() const;
  /// Same matrix, budget reset to zero. For operators known to be exact.
  Operator as_exact() const;

  friend Operator operator*(const Operator& a, const Operator& b);
  friend Operator operator+(const Operator& a, const Operator& b);
  friend Operator operator-(const Operator& a, const Operator& b);
  friend Operator operator*(Complex c, const Operator& a);

 private:
  ComplexMatrix matrix_;
  std::shared_ptr<const Basis> basis_;
  Budget budget_;
  Budget adjointBudget_;
};

/// A^n by repeated multiplication; A^0 is the identity.
Operator power(const Operator& a, int n);

struct GuardedResidual {
  double residual = 0.0;
  std::size_t guardSize = 0;
};

/// ||(A - B) R|| where R includes the labels guarded by the joined budgets.
GuardedResidual guarded_residual(const Operator& a, const Operator& b);
/// ||(A - B) R|| over an explicit set of columns.
double residual_on(const Operator& a, const Operator& b, const std::vector<Eigen::Index>& cols);

std::shared_ptr<const Basis> line_basis(const IndexSet& set);

Operator toeplitz_shift(const IndexSet& set, const SemigroupElement& s);
Operator toeplitz_shift(const std::shared_ptr<const Basis>& line, const SemigroupElement& s);
Operator truncated_J(const IndexSet& set, const SemigroupElement& s, const SemigroupElement& t);
Operator truncated_K(const IndexSet& set, const SemigroupElement& s, const SemigroupElement& t);
Operator indicator_projection(const IndexSet& set, const SemigroupElement& s);
Operator indicator_projection(const std::shared_ptr<const Basis>& line, const SemigroupElement& s);

enum class GridMode { Tau, Sigma };
/// Throws std::invalid_argument when n < 1 or power < 0.
Operator grid_shift(int n, GridMode mode, int power);
Operator grid_shift(const std::shared_ptr<const Basis>& grid, GridMode mode, int power);

/// The truncated shift J_k on C^{k+1}: e_j -> e_{j+1}.
Operator shift_matrix(int k);

Operator matrix_unit(const std::shared_ptr<const Basis>& basis, Eigen::Index i, Eigen::Index j);
Operator direct_sum(const std::vector<Operator>& parts);
/// PAP. When P is a diagonal 0/1 matrix the result is restricted to the
/// labels in its range. Throws std::invalid_argument if P is not a
/// projection within eqTol.
Operator compress(const Operator& p, const Operator& a, const Tolerance& tol = {});

struct PartialIsometryCheck {
  bool ok = false;
  double residual = 0.0;
};
PartialIsometryCheck is_partial_isometry(const Operator& a, const Tolerance& tol = {});

struct ProductCriterion {
  bool productIsPI = false;
  double productResidual = 0.0;  // ||(ST)(ST)*(ST) - ST||
  double commNorm = 0.0;         // ||[S*S, TT*]||
  bool agree = false;
};
/// Throws std::invalid_argument if S or T is not a partial isometry.
ProductCriterion product_pi_criterion(const Operator& s, const Operator& t,
                                      const Tolerance& tol = {});

struct SemigroupRepReport {
  double multiplicativity = 0.0;  // max guarded ||V_s V_t - V_{s+t}||
  double commutators = 0.0;       // max ||[P, Q]|| over initial and range projections
  double initialJoin = 0.0;       // max ||V_s*V_s V_t*V_t - V_{s v t}*V_{s v t}||
  double rangeJoin = 0.0;         // max ||V_sV_s* V_tV_t* - V_{s v t}V_{s v t}*||
  std::size_t pairs = 0;
  double worst() const;
};

using OperatorFamily = std::map<SemigroupElement, Operator>;

/// Checks every pair of indices in `family`; products V_{s+t} are compared
/// whenever s + t is also present. Throws std::invalid_argument on an empty
/// family.
SemigroupRepReport semigroup_rep_check(const OperatorFamily& family);

/// Gaussian matrix with singular values snapped to 0 or 1 by fair coin flips.
ComplexMatrix random_partial_isometry(int dim, CounterRng& rng);

}  // namespace picross
