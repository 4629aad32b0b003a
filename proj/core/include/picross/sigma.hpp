#pragma once

// The backward-shift system: coisometric covariant pairs described by a
// coisometry V and a decreasing family of projections Q_n, the sampled
// function-algebra model, and symbol constancy along a sequence.

#include <optional>
#include <vector>

#include "picross/reps.hpp"
#include "picross/universal.hpp"

namespace picross {

struct CoisometricSystem {
  Operator V;
  std::vector<Operator> Q;  // Q_0 .. Q_maxN
  int max_n() const { return static_cast<int>(Q.size()) - 1; }
};

struct SystemInvariants {
  double coisometry = 0.0;    // guarded ||VV^* - 1||
  double initial = 0.0;       // guarded ||Q_0 - (1 - V^*V)||
  double monotonicity = 0.0;  // max guarded ||Q_{n+1} Q_n - Q_{n+1}||
  double annihilation = 0.0;  // max guarded ||V Q_n||
  double projection = 0.0;    // max guarded ||Q_n^2 - Q_n|| and ||Q_n^* - Q_n||
  double worst() const;
};
SystemInvariants check_system(const CoisometricSystem& sys);

/// pi(1_n) = V^{*n} V^n + sum_{k<n} V^{*k} Q_{n-k} V^k. Throws std::out_of_range
/// when n exceeds max_n() or the guard band of the result is empty.
Operator build_pi(const CoisometricSystem& sys, int n);
/// build_pi for n = 0..max_n().
std::vector<Operator> build_pi_all(const CoisometricSystem& sys);

struct PiInvariants {
  double projection = 0.0;    // max guarded ||P_n^2 - P_n||
  double monotonicity = 0.0;  // max guarded ||P_n P_{n-1} - P_n||
  double difference = 0.0;    // max guarded ||(P_n - P_{n+1}) - displayed orthogonal sum||
};
PiInvariants check_pi(const CoisometricSystem& sys, const std::vector<Operator>& pi);

/// Q_0 = 1 - V^*V and Q_n = pi(1_n) - V^* pi(1_{n-1}) V.
std::vector<Operator> extract_q(const std::vector<Operator>& piImages, const Operator& V);

struct SigmaCovarianceReport {
  CovarianceReport covariance;
  double coisometry = 0.0;  // guarded ||VV^* - 1||
  double worst() const;
};
/// Both covariance formulations for V_p = V^p, p <= maxPower, against the
/// backward action, plus the coisometry identity.
SigmaCovarianceReport covariance_check_sigma(const std::vector<Operator>& piImages, const Operator& V,
                                             int maxPower, const Tolerance& tol = {});

struct SigmaFaithfulness {
  bool ok = false;
  double minGap = 0.0;  // min_n guarded ||Q_n - Q_{n+1}||
};
SigmaFaithfulness faithfulness_sigma(const CoisometricSystem& sys, const Tolerance& tol = {});

/// V = grid sigma shift on {0..N}^2, Q_n = projection on span{e_{k,0} : k >= n}.
CoisometricSystem egsigma_system(int gridN, int maxN);

/// Values at n = 0 .. samples.size()-1 plus the value at infinity.
struct OperatorSequence {
  std::vector<Operator> samples;
  Operator tail;

  friend OperatorSequence operator+(const OperatorSequence& a, const OperatorSequence& b);
  friend OperatorSequence operator-(const OperatorSequence& a, const OperatorSequence& b);
  friend OperatorSequence operator*(const OperatorSequence& a, const OperatorSequence& b);
  friend OperatorSequence operator*(Complex c, const OperatorSequence& a);
};

/// Max guarded residual over samples and tail.
double sequence_residual(const OperatorSequence& a, const OperatorSequence& b);

/// One sample of the model: V = T^* on the line {0..dim-1} and
/// Q_k = 1 - TT^* when k <= n, else 0. nullopt is the point at infinity.
CoisometricSystem model_sample_system(std::optional<int> n, int dim, int maxN);

/// Direct sum of the samples n = 0..nSamples-1 and the point at infinity.
CoisometricSystem model_system(int nSamples, int dim, int maxN);

/// n -> V^{*i} pi(1_m) V^j in the model, as a sequence.
OperatorSequence model_image(int i, int j, int m, int nSamples, int dim);

/// Linear extension of model_image.
OperatorSequence model_evaluate(const SigmaCombination& x, int nSamples, int dim);

struct SymbolConstancy {
  bool ok = false;
  double maxDeviation = 0.0;
  LaurentPoly tailSymbol;
};
/// Band symbol of each sample compared with that of the tail.
SymbolConstancy symbol_constancy(const OperatorSequence& seq, int maxDegree, double tol = 1e-12);

}  // namespace picross
