#include "picross/sigma.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace picross {

namespace {

double worst_of(std::initializer_list<double> xs) { return *std::max_element(xs.begin(), xs.end()); }

Operator one_like(const Operator& a) { return Operator::identity(a.basis_ptr()); }

}  // namespace

double SystemInvariants::worst() const {
  return worst_of({coisometry, initial, monotonicity, annihilation, projection});
}

SystemInvariants check_system(const CoisometricSystem& sys) {
  SystemInvariants out;
  const Operator& v = sys.V;
  const Operator one = one_like(v);
  out.coisometry = guarded_residual(v * v.adjoint(), one).residual;
  if (!sys.Q.empty()) out.initial = guarded_residual(sys.Q[0], one - v.adjoint() * v).residual;
  for (std::size_t n = 0; n < sys.Q.size(); ++n) {
    const Operator& q = sys.Q[n];
    out.projection = std::max({out.projection, guarded_residual(q * q, q).residual,
                               guarded_residual(q.adjoint(), q).residual});
    out.annihilation = std::max(out.annihilation, guarded_residual(v * q, Operator::zero(q.basis_ptr())).residual);
    if (n + 1 < sys.Q.size()) {
      const Operator& next = sys.Q[n + 1];
      out.monotonicity = std::max(out.monotonicity, guarded_residual(next * q, next).residual);
    }
  }
  return out;
}

Operator build_pi(const CoisometricSystem& sys, int n) {
  if (n < 0 || n > sys.max_n()) {
    throw std::out_of_range("build_pi: n = " + std::to_string(n) + " outside 0.." +
                            std::to_string(sys.max_n()));
  }
  const Operator& v = sys.V;
  const Operator vAdj = v.adjoint();
  Operator vk = one_like(v);
  Operator vkAdj = vk;
  Operator out = Operator::zero(v.basis_ptr());
  for (int k = 0; k < n; ++k) {
    out = out + vkAdj * sys.Q[static_cast<std::size_t>(n - k)] * vk;
    vk = v * vk;
    vkAdj = vkAdj * vAdj;
  }
  out = out + vkAdj * vk;
  if (out.basis().guard(out.budget()).empty()) {
    throw std::out_of_range("build_pi: truncation too small for n = " + std::to_string(n));
  }
  return out;
}

std::vector<Operator> build_pi_all(const CoisometricSystem& sys) {
  std::vector<Operator> out;
  for (int n = 0; n <= sys.max_n(); ++n) out.push_back(build_pi(sys, n));
  return out;
}

PiInvariants check_pi(const CoisometricSystem& sys, const std::vector<Operator>& pi) {
  PiInvariants out;
  const Operator& v = sys.V;
  const Operator vAdj = v.adjoint();
  const Operator one = one_like(v);
  for (std::size_t n = 0; n < pi.size(); ++n) {
    out.projection = std::max(out.projection, guarded_residual(pi[n] * pi[n], pi[n]).residual);
    if (n > 0) {
      out.monotonicity = std::max(out.monotonicity, guarded_residual(pi[n] * pi[n - 1], pi[n]).residual);
    }
    if (n + 1 >= pi.size() || n + 1 >= sys.Q.size()) continue;
    Operator vk = one;
    Operator vkAdj = one;
    Operator sum = Operator::zero(v.basis_ptr());
    for (std::size_t k = 0; k < n; ++k) {
      sum = sum + vkAdj * (sys.Q[n - k] - sys.Q[n + 1 - k]) * vk;
      vk = v * vk;
      vkAdj = vkAdj * vAdj;
    }
    sum = sum + vkAdj * (one - vAdj * v - sys.Q[1]) * vk;
    out.difference = std::max(out.difference, guarded_residual(pi[n] - pi[n + 1], sum).residual);
  }
  return out;
}

std::vector<Operator> extract_q(const std::vector<Operator>& piImages, const Operator& V) {
  std::vector<Operator> out;
  if (piImages.empty()) return out;
  const Operator vAdj = V.adjoint();
  out.push_back(one_like(V) - vAdj * V);
  for (std::size_t n = 1; n < piImages.size(); ++n) {
    out.push_back(piImages[n] - vAdj * piImages[n - 1] * V);
  }
  return out;
}

double SigmaCovarianceReport::worst() const {
  return worst_of({covariance.covrep, covariance.altcov, coisometry});
}

SigmaCovarianceReport covariance_check_sigma(const std::vector<Operator>& piImages, const Operator& V,
                                             int maxPower, const Tolerance& tol) {
  if (maxPower < 0) throw std::invalid_argument("maxPower must be nonnegative");
  CovariantPair pair;
  pair.action = Action::sigma();
  for (std::size_t n = 0; n < piImages.size(); ++n) {
    pair.piImages.emplace(SemigroupElement(static_cast<long long>(n)), piImages[n]);
  }
  Operator vp = one_like(V);
  for (int p = 0; p <= maxPower; ++p) {
    pair.V.emplace(SemigroupElement(p), vp);
    vp = V * vp;
  }
  SigmaCovarianceReport out;
  out.covariance = check_covariance(pair, tol);
  out.coisometry = guarded_residual(V * V.adjoint(), one_like(V)).residual;
  return out;
}

SigmaFaithfulness faithfulness_sigma(const CoisometricSystem& sys, const Tolerance& tol) {
  SigmaFaithfulness out;
  if (sys.Q.size() < 2) return out;
  out.minGap = std::numeric_limits<double>::infinity();
  for (std::size_t n = 0; n + 1 < sys.Q.size(); ++n) {
    out.minGap = std::min(out.minGap, guarded_residual(sys.Q[n], sys.Q[n + 1]).residual);
  }
  out.ok = out.minGap > tol.eqTol;
  return out;
}

CoisometricSystem egsigma_system(int gridN, int maxN) {
  if (maxN < 0) throw std::invalid_argument("maxN must be nonnegative");
  const auto grid = Basis::grid(gridN);
  CoisometricSystem sys{grid_shift(grid, GridMode::Sigma, 1), {}};
  for (int n = 0; n <= maxN; ++n) {
    ComplexMatrix q = ComplexMatrix::Zero(grid->size(), grid->size());
    for (int k = n; k <= gridN; ++k) {
      const auto i = *grid->index_of(GridIndex{k, 0});
      q(i, i) = 1.0;
    }
    sys.Q.emplace_back(std::move(q), grid);
  }
  return sys;
}

namespace {

OperatorSequence zip(const OperatorSequence& a, const OperatorSequence& b,
                     Operator (*op)(const Operator&, const Operator&)) {
  if (a.samples.size() != b.samples.size()) throw DimensionError("sequences differ in length");
  OperatorSequence out{{}, op(a.tail, b.tail)};
  for (std::size_t n = 0; n < a.samples.size(); ++n) out.samples.push_back(op(a.samples[n], b.samples[n]));
  return out;
}

Operator add(const Operator& a, const Operator& b) { return a + b; }
Operator sub(const Operator& a, const Operator& b) { return a - b; }
Operator mul(const Operator& a, const Operator& b) { return a * b; }

std::shared_ptr<const Basis> model_line(int dim) {
  if (dim < 2) throw std::invalid_argument("model dimension must be at least 2");
  std::vector<SemigroupElement> labels;
  for (int r = 0; r < dim; ++r) labels.emplace_back(r);
  return Basis::line(std::move(labels), dim - 1);
}

}  // namespace

OperatorSequence operator+(const OperatorSequence& a, const OperatorSequence& b) { return zip(a, b, add); }
OperatorSequence operator-(const OperatorSequence& a, const OperatorSequence& b) { return zip(a, b, sub); }
OperatorSequence operator*(const OperatorSequence& a, const OperatorSequence& b) { return zip(a, b, mul); }

OperatorSequence operator*(Complex c, const OperatorSequence& a) {
  OperatorSequence out{{}, c * a.tail};
  for (const auto& s : a.samples) out.samples.push_back(c * s);
  return out;
}

double sequence_residual(const OperatorSequence& a, const OperatorSequence& b) {
  if (a.samples.size() != b.samples.size()) throw DimensionError("sequences differ in length");
  double r = guarded_residual(a.tail, b.tail).residual;
  for (std::size_t n = 0; n < a.samples.size(); ++n) {
    r = std::max(r, guarded_residual(a.samples[n], b.samples[n]).residual);
  }
  return r;
}

namespace {

CoisometricSystem sample_system_on(const std::shared_ptr<const Basis>& line, std::optional<int> n, int maxN) {
  const Operator t = toeplitz_shift(line, SemigroupElement(1));
  const Operator range = Operator::identity(line) - t * t.adjoint();
  CoisometricSystem sys{t.adjoint(), {}};
  for (int k = 0; k <= maxN; ++k) {
    sys.Q.push_back(!n || k <= *n ? range : Operator::zero(line));
  }
  return sys;
}

}  // namespace

CoisometricSystem model_sample_system(std::optional<int> n, int dim, int maxN) {
  return sample_system_on(model_line(dim), n, maxN);
}

CoisometricSystem model_system(int nSamples, int dim, int maxN) {
  std::vector<CoisometricSystem> parts;
  for (int n = 0; n < nSamples; ++n) parts.push_back(model_sample_system(n, dim, maxN));
  parts.push_back(model_sample_system(std::nullopt, dim, maxN));
  std::vector<Operator> vs;
  for (const auto& p : parts) vs.push_back(p.V);
  CoisometricSystem sys{direct_sum(vs), {}};
  for (int k = 0; k <= maxN; ++k) {
    std::vector<Operator> qs;
    for (const auto& p : parts) qs.push_back(p.Q[static_cast<std::size_t>(k)]);
    sys.Q.push_back(direct_sum(qs));
  }
  return sys;
}

namespace {

Operator sample_image(const std::shared_ptr<const Basis>& line, std::optional<int> n, int i, int j, int m) {
  const CoisometricSystem sys = sample_system_on(line, n, m);
  return power(sys.V.adjoint(), i) * build_pi(sys, m) * power(sys.V, j);
}

}  // namespace

OperatorSequence model_image(int i, int j, int m, int nSamples, int dim) {
  if (i < 0 || j < 0 || m < 0 || nSamples < 1) throw std::invalid_argument("model_image: bad indices");
  if (dim <= i + j + m + 2) {
    throw std::out_of_range("model_image: dimension " + std::to_string(dim) + " too small");
  }
  const auto line = model_line(dim);
  OperatorSequence out{{}, sample_image(line, std::nullopt, i, j, m)};
  for (int n = 0; n < nSamples; ++n) out.samples.push_back(sample_image(line, n, i, j, m));
  return out;
}

OperatorSequence model_evaluate(const SigmaCombination& x, int nSamples, int dim) {
  const auto line = model_line(dim);
  OperatorSequence out{std::vector<Operator>(static_cast<std::size_t>(nSamples), Operator::zero(line)),
                       Operator::zero(line)};
  for (const auto& [key, c] : x) out = out + c * model_image(key[0], key[2], key[1], nSamples, dim);
  return out;
}

SymbolConstancy symbol_constancy(const OperatorSequence& seq, int maxDegree, double tol) {
  SymbolConstancy out;
  out.tailSymbol = band_symbol(seq.tail, maxDegree);
  for (const auto& s : seq.samples) {
    out.maxDeviation = std::max(out.maxDeviation, LaurentPoly::distance(band_symbol(s, maxDegree), out.tailSymbol));
  }
  out.ok = out.maxDeviation <= tol;
  return out;
}

}  // namespace picross
