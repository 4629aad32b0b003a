#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "picross/ops.hpp"
#include "picross/runner.hpp"

namespace picross::detail {

class SuiteContext {
 public:
  explicit SuiteContext(const SuiteConfig& config) : config_(config) {}

  const SuiteConfig& config() const { return config_; }
  const Tolerance& tol() const { return config_.tol; }

  /// Times `body` and records its residual. A throwing body records an
  /// infinite residual.
  void check(const std::string& name, const std::string& anchor, double threshold,
             const std::function<double()>& body);

  /// a + perturb * E for a Gaussian E drawn from the seed and a per-call
  /// counter; a itself when perturbation is off.
  Operator perturb(const Operator& a) const;
  ComplexMatrix perturb(const ComplexMatrix& a) const;

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  const SuiteConfig& config_;
  std::vector<CheckResult> results_;
  mutable std::uint64_t draws_ = 0;
};

struct SuiteEntry {
  const char* name;
  const char* description;
  const char* anchor;
  void (*run)(SuiteContext&);
};

const std::vector<SuiteEntry>& suite_registry();

}  // namespace picross::detail
