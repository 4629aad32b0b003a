#pragma once

// Covariant partial-isometric representations of the indicator algebras
// B_I and c, described by their values on the generators 1_t.

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "picross/ops.hpp"

namespace picross {

/// Action of the semigroup on the generators 1_t.
struct Action {
  enum class Kind { Tau, TauI, Sigma };
  Kind kind = Kind::Tau;
  SemigroupElement bound;  // right end of I for TauI
  bool closed = true;      // I = [0, bound] when closed, [0, bound) otherwise

  static Action tau() { return {}; }
  static Action tau_interval(const SemigroupElement& s, bool closed) {
    return {Kind::TauI, s, closed};
  }
  static Action sigma() { return {Kind::Sigma, {}, true}; }

  bool in_interval(const SemigroupElement& t) const;
};

/// Image of a generator under an action: 1_label, the unit, or zero.
struct GeneratorImage {
  enum class Kind { Indicator, Unit, Zero };
  Kind kind = Kind::Zero;
  SemigroupElement label;
};

/// alpha_s(1_t) for the given action.
GeneratorImage act(const Action& action, const SemigroupElement& s, const SemigroupElement& t);

struct ProjectionFamily {
  std::map<SemigroupElement, Operator> P;
};

struct RepFromProjections {
  bool faithful = false;
  double minGap = 0.0;        // min over r != t of guarded ||P_r - P_t||
  double monotonicity = 0.0;  // max over r <= t of guarded ||P_t P_r - P_t||
  ProjectionFamily family;

  /// sum_r c_r P_r. Throws std::out_of_range for labels outside the family.
  Operator apply(const std::map<SemigroupElement, Complex>& combination) const;
};

/// Throws std::invalid_argument when some P_r is not a projection or the
/// family is not decreasing.
RepFromProjections rep_from_projections(const ProjectionFamily& fam, const Tolerance& tol = {});

struct CovariantPair {
  std::map<SemigroupElement, Operator> piImages;  // pi(1_t); pi(1_0) is pi(1)
  OperatorFamily V;
  Action action;
};

/// pi(1_r) = V_r V_r^* on the interval I = [0, s] or [0, s). Throws
/// std::invalid_argument if V_r is nonzero for some r outside I.
CovariantPair pi_from_V(const OperatorFamily& V, const SemigroupElement& s, bool closed,
                        const Tolerance& tol = {});

struct CovarianceReport {
  double covrep = 0.0;  // max of ||pi(a_s(a)) - V_s pi(a) V_s^*|| and ||[V_s^*V_s, pi(a)]||
  double altcov = 0.0;  // max of ||pi(a_s(a)) V_s - V_s pi(a)|| and ||pi(a_s(1)) - V_sV_s^*||
  double unitV0 = 0.0;  // ||V_0 - 1||, or 0 when V_0 is absent
  bool covrepPass = false;
  bool altcovPass = false;
  bool agree = false;
  std::size_t cases = 0;
};

/// Evaluates both covariance formulations over every (s, t) pair whose
/// images are available. All residuals are guarded.
CovarianceReport check_covariance(const CovariantPair& pair, const Tolerance& tol = {});

/// pi_0 as a function from labels to the 0/1 diagonal of pi_0(1_t).
using DiagonalRep = std::function<std::vector<int>(const SemigroupElement&)>;

/// Diagonal representation of B_{Gamma+} by point evaluations: slot j
/// carries 1_t to [t <= points[j]]. Faithful on the truncation when the
/// points cover every label.
DiagonalRep point_characters(std::vector<SemigroupElement> points);

/// The induced pair on the truncation of l^2(Gamma+, H) restricted to the
/// fibres pi_0(alpha_r(1))H: (pi(1_t) zeta)(r) = pi_0(1_{t+r}) zeta(r) and
/// (V_s zeta)(r) = zeta(r + s).
CovariantPair induced_rep(const DiagonalRep& pi0, const IndexSet& set, int innerDim);

struct FaithfulnessWitness {
  double minNorm = 0.0;
  bool ok = false;
  std::size_t cases = 0;
};

/// min over r in rRange and u < t in uvRange of the guarded norm of
/// (1 - V_r^*V_r)(V_uV_u^* - V_tV_t^*).
FaithfulnessWitness faithfulness_witness(const OperatorFamily& V,
                                         const std::vector<SemigroupElement>& rRange,
                                         const std::vector<SemigroupElement>& uvRange,
                                         const Tolerance& tol = {});

/// Guarded operator norm of A, restricted to the columns guarded by A's budget.
double guarded_norm(const Operator& a);

}  // namespace picross
