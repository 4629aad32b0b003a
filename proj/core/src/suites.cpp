#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>

#include "picross/algebra.hpp"
#include "picross/random.hpp"
#include "picross/reps.hpp"
#include "picross/sigma.hpp"
#include "picross/universal.hpp"
#include "suite_context.hpp"

namespace picross::detail {

void SuiteContext::check(const std::string& name, const std::string& anchor, double threshold,
                         const std::function<double()>& body) {
  const auto start = std::chrono::steady_clock::now();
  double residual = std::numeric_limits<double>::infinity();
  try {
    residual = body();
  } catch (const std::exception&) {
    residual = std::numeric_limits<double>::infinity();
  }
  const auto stop = std::chrono::steady_clock::now();
  CheckResult r;
  r.name = name;
  r.paperAnchor = anchor;
  r.residual = residual;
  r.threshold = threshold;
  r.pass = std::isfinite(residual) && residual <= threshold;
  r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  results_.push_back(std::move(r));
}

ComplexMatrix SuiteContext::perturb(const ComplexMatrix& a) const {
  if (config_.perturb == 0.0) return a;
  CounterRng rng(config_.seed, 0x9e70000u + draws_++);
  ComplexMatrix e(a.rows(), a.cols());
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) e(i, j) = Complex(rng.normal(), rng.normal());
  }
  return a + (config_.perturb / std::sqrt(static_cast<double>(a.rows()))) * e;
}

Operator SuiteContext::perturb(const Operator& a) const {
  if (config_.perturb == 0.0) return a;
  return Operator(perturb(a.matrix()), a.basis_ptr(), a.budget(), a.adjoint_budget());
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

IndexSet integers(int cutoff) { return enumerate({SemigroupElement(1)}, SemigroupElement(cutoff)); }

IndexSet config_set(const SuiteContext& ctx) {
  return enumerate(ctx.config().generators, ctx.config().cutoff);
}

std::vector<SemigroupElement> range_ints(int lo, int hi) {
  std::vector<SemigroupElement> out;
  for (int i = lo; i <= hi; ++i) out.emplace_back(i);
  return out;
}

double flag(bool ok) { return ok ? 0.0 : 1.0; }

// Residual of a guarded comparison, or infinity when the guard is empty.
double nonvacuous(const GuardedResidual& g) { return g.guardSize == 0 ? kInf : g.residual; }

double sparse_residual(const SparseImage& a, const SparseImage& b, const Basis& basis) {
  if (basis.guard(a.budget.join(b.budget)).empty()) return kInf;
  return guarded_residual(a, b, basis);
}

// ---------------------------------------------------------------- toeplitz

void suite_toeplitz(SuiteContext& ctx) {
  const IndexSet set = config_set(ctx);
  const auto line = line_basis(set);
  ctx.check("ops.toeplitz_partial_isometry", "Toeplitz shifts T_s", 1e-13, [&] {
    double r = 0.0;
    for (const auto& s : set.elements()) {
      r = std::max(r, is_partial_isometry(ctx.perturb(toeplitz_shift(line, s))).residual);
    }
    return r;
  });
  ctx.check("ops.indicator_product", "Toeplitz shifts T_s", 0.0, [&] {
    double r = 0.0;
    for (const auto& s : set.elements()) {
      const Operator ps = ctx.perturb(indicator_projection(line, s));
      for (const auto& t : set.elements()) {
        r = std::max(r, linalg::residual((ps * indicator_projection(line, t)).matrix(),
                                         indicator_projection(line, max(s, t)).matrix()));
      }
    }
    return r;
  });
  ctx.check("ops.indicator_range", "Lemma excovrep", ctx.tol().eqTol, [&] {
    double r = 0.0;
    for (const auto& s : set.elements()) {
      const Operator ts = toeplitz_shift(line, s);
      r = std::max(r, nonvacuous(guarded_residual(ctx.perturb(ts * ts.adjoint()),
                                                  indicator_projection(line, s))));
    }
    return r;
  });
  ctx.check("ops.shift_partial_isometries", "Definitions defJ and defK", 1e-13, [&] {
    const IndexSet ints = integers(8);
    double r = 0.0;
    for (const auto& s : ints.elements()) {
      for (const auto& t : ints.elements()) {
        r = std::max(r, is_partial_isometry(ctx.perturb(truncated_J(ints, s, t))).residual);
        r = std::max(r, is_partial_isometry(ctx.perturb(truncated_K(ints, s, t))).residual);
      }
    }
    for (int p = 0; p <= 4; ++p) {
      r = std::max(r, is_partial_isometry(ctx.perturb(grid_shift(8, GridMode::Sigma, p))).residual);
    }
    return r;
  });
  ctx.check("ops.grid_tau_power", "Example excNtau", 0.0, [&] {
    const int n = 12;
    const Operator v = grid_shift(n, GridMode::Tau, 1);
    double r = 0.0;
    for (int p = 0; p <= 6; ++p) {
      r = std::max(r, linalg::residual(ctx.perturb(grid_shift(n, GridMode::Tau, p)).matrix(),
                                       power(v, p).matrix()));
    }
    return r;
  });
  ctx.check("ops.truncated_shift_nilpotent", "Example ppisometryJk", 0.0, [&] {
    double r = 0.0;
    for (int k = 1; k <= 5; ++k) {
      const Operator j = ctx.perturb(shift_matrix(k));
      r = std::max(r, linalg::spectral_norm(power(j, k + 1).matrix()));
    }
    return r;
  });
}

// ---------------------------------------------------------- tool_criterion

void suite_tool_criterion(SuiteContext& ctx) {
  ctx.check("ops.product_criterion_random", "Prop. tool", 0.0, [&] {
    CounterRng rng(ctx.config().seed, 1);
    int disagreements = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const int dim = rng.uniform_int(1, 12);
      const auto basis = Basis::plain(dim);
      const Operator s(random_partial_isometry(dim, rng), basis);
      const Operator t(random_partial_isometry(dim, rng), basis);
      const auto c = product_pi_criterion(ctx.perturb(s), t, ctx.tol());
      if (!c.agree) ++disagreements;
    }
    return static_cast<double>(disagreements);
  });
  ctx.check("ops.product_criterion_counterexample", "Prop. tool", 0.0, [&] {
    const auto basis = Basis::plain(2);
    ComplexMatrix p = ComplexMatrix::Zero(2, 2);
    p(0, 0) = 1.0;
    const ComplexMatrix q = ComplexMatrix::Constant(2, 2, 0.5);
    const auto c = product_pi_criterion(Operator(q, basis), ctx.perturb(Operator(p, basis)), ctx.tol());
    return flag(!c.productIsPI && c.agree);
  });
}

// ------------------------------------------------------------ matrix_units

Operator word(const Operator& j, int a, int b, int c, int d, bool adjointFirst) {
  const Operator js = j.adjoint();
  if (adjointFirst) return power(js, a) * power(j, b) * power(js, c) * power(j, d);
  return power(j, a) * power(js, b) * power(j, c) * power(js, d);
}

void suite_matrix_units(SuiteContext& ctx) {
  ctx.check("ops.matrix_unit_word_literal", "Example ppisometryJk", 1e-13, [&] {
    double r = 0.0;
    for (int k = 1; k <= 5; ++k) {
      const Operator j = ctx.perturb(shift_matrix(k));
      for (int i = 1; i <= k + 1; ++i) {
        for (int l = 1; l <= k + 1; ++l) {
          const Operator w = word(j, l - 1, k, k, i - 1, true);
          r = std::max(r, linalg::residual(w.matrix(), matrix_unit(j.basis_ptr(), i - 1, l - 1).matrix()));
        }
      }
    }
    return r;
  });
  ctx.check("ops.matrix_unit_word_reordered", "Example ppisometryJk", 1e-13, [&] {
    double r = 0.0;
    for (int k = 1; k <= 5; ++k) {
      const Operator j = ctx.perturb(shift_matrix(k));
      for (int i = 1; i <= k + 1; ++i) {
        for (int l = 1; l <= k + 1; ++l) {
          const Operator w = word(j, i - 1, k, k, l - 1, false);
          r = std::max(r, linalg::residual(w.matrix(), matrix_unit(j.basis_ptr(), i - 1, l - 1).matrix()));
        }
      }
    }
    return r;
  });
  ctx.check("algebra.matrix_unit_interval_word", "Prop. C*Js", 1e-13, [&] {
    double r = 0.0;
    const IndexSet ints = integers(8);
    for (int s = 0; s <= 8; ++s) {
      r = std::max(r, jk_decomposition_check(ints, SemigroupElement(s), ctx.tol()).matrixUnits);
    }
    const IndexSet set = config_set(ctx);
    const auto closed = interval(set, set.cutoff(), true);
    r = std::max(r, jk_decomposition_check(set, closed[closed.size() / 2], ctx.tol()).matrixUnits);
    return r;
  });
}

// --------------------------------------------------------------- commprojs

OperatorFamily perturbed(const SuiteContext& ctx, OperatorFamily f) {
  for (auto& [s, v] : f) v = ctx.perturb(v);
  return f;
}

void suite_commprojs(SuiteContext& ctx) {
  const IndexSet set = config_set(ctx);
  const SemigroupElement mid = set[set.size() / 2];
  for (const bool closed : {true, false}) {
    ctx.check(closed ? "ops.commuting_projections_J" : "ops.commuting_projections_K",
              "Prop. commprojs", 1e-12, [&] {
                OperatorFamily f;
                for (const auto& t : set.elements()) {
                  f.emplace(t, closed ? truncated_J(set, mid, t) : truncated_K(set, mid, t));
                }
                return semigroup_rep_check(perturbed(ctx, f)).worst();
              });
  }
  ctx.check("ops.commuting_projections_grid", "Prop. commprojs", 1e-12, [&] {
    OperatorFamily f;
    const auto grid = Basis::grid(16);
    for (int p = 0; p <= 8; ++p) f.emplace(SemigroupElement(p), grid_shift(grid, GridMode::Tau, p));
    return semigroup_rep_check(perturbed(ctx, f)).worst();
  });
  ctx.check("ops.commuting_projections_isometries", "Prop. commprojs", 1e-12, [&] {
    const IndexSet ints = integers(16);
    const auto line = line_basis(ints);
    OperatorFamily f;
    for (int s = 0; s <= 8; ++s) f.emplace(SemigroupElement(s), toeplitz_shift(line, s));
    return semigroup_rep_check(perturbed(ctx, f)).worst();
  });
}

// ------------------------------------------------------------------ dirsum

int expected_dirsum_dim(int n) {
  int d = 0;
  for (int k = 1; k <= n; ++k) d += (k + 1) * (k + 1);
  return d;
}

Operator dirsum_J(int n) {
  std::vector<Operator> parts;
  for (int k = 1; k <= n; ++k) parts.push_back(shift_matrix(k));
  return direct_sum(parts);
}

double dim_residual(const AlgebraBasis& ab, Eigen::Index expected) {
  if (!ab.converged()) return kInf;
  return std::abs(static_cast<double>(ab.dim() - expected));
}

void suite_dirsum(SuiteContext& ctx) {
  for (int k = 1; k <= 5; ++k) {
    ctx.check("algebra.dim_J_k" + std::to_string(k), "Example ppisometryJk", 0.0, [&, k] {
      return dim_residual(generate({ctx.perturb(shift_matrix(k))}, 1600, ctx.tol()), (k + 1) * (k + 1));
    });
  }
  for (int n = 1; n <= 4; ++n) {
    ctx.check("algebra.dim_dirsum_n" + std::to_string(n), "Lemma dirsumJk", 0.0, [&, n] {
      return dim_residual(generate({ctx.perturb(dirsum_J(n))}, 1600, ctx.tol()), expected_dirsum_dim(n));
    });
  }
  ctx.check("algebra.dirsum_power", "Lemma dirsumJk", 0.0, [&] {
    double r = 0.0;
    for (int n = 1; n <= 4; ++n) {
      const Operator d = ctx.perturb(dirsum_J(n));
      const auto dim = d.dim();
      ComplexMatrix expected = ComplexMatrix::Zero(dim, dim);
      expected(dim - 1, dim - n - 1) = 1.0;
      r = std::max(r, linalg::residual(power(d, n).matrix(), expected));
    }
    return r;
  });
  ctx.check("algebra.dirsum_contains_lower", "Lemma dirsumJk", ctx.tol().rankTol, [&] {
    double r = 0.0;
    for (int n = 2; n <= 4; ++n) {
      const AlgebraBasis ab = generate({ctx.perturb(dirsum_J(n))}, 1600, ctx.tol());
      std::vector<Operator> parts;
      for (int k = 1; k < n; ++k) parts.push_back(shift_matrix(k));
      parts.push_back(Operator::zero(Basis::plain(n + 1)));
      const ComplexMatrix lower = direct_sum(parts).matrix();
      r = std::max(r, contains(ab, lower, ctx.tol()).residual / linalg::trace_norm(lower));
    }
    return r;
  });
  ctx.check("algebra.contains_matrix_unit", "Example ppisometryJk", ctx.tol().rankTol, [&] {
    const AlgebraBasis ab = generate({ctx.perturb(shift_matrix(2))}, 1600, ctx.tol());
    double r = 0.0;
    for (Eigen::Index i = 0; i < 3; ++i) {
      for (Eigen::Index j = 0; j < 3; ++j) {
        ComplexMatrix e = ComplexMatrix::Zero(3, 3);
        e(i, j) = 1.0;
        r = std::max(r, contains(ab, e, ctx.tol()).residual);
      }
    }
    return r;
  });
}

// -------------------------------------------------------- jk_decomposition

void suite_jk_decomposition(SuiteContext& ctx) {
  const IndexSet ints = integers(std::max(8, static_cast<int>(ctx.config().cutoff.to_double())));
  std::vector<JKReport> reports;
  for (int s = 0; s <= 8; ++s) reports.push_back(jk_decomposition_check(ints, SemigroupElement(s), ctx.tol()));
  ctx.check("algebra.jk_decomposition", "Prop. C*Js", 0.0, [&] {
    double r = 0.0;
    const IndexSet small = integers(8);
    for (int s = 0; s <= 8; ++s) {
      for (int t = 0; t <= s; ++t) {
        const Operator j = ctx.perturb(truncated_J(small, s, t));
        const Operator k = truncated_K(small, s, t);
        ComplexMatrix expected = ComplexMatrix::Zero(j.dim(), j.dim());
        expected.topLeftCorner(k.dim(), k.dim()) = k.matrix();
        expected(s, s - t) += 1.0;
        r = std::max(r, linalg::residual(j.matrix(), expected));
      }
    }
    for (const auto& rep : reports) r = std::max(r, rep.decomposition);
    return r;
  });
  ctx.check("algebra.jk_beyond", "Definitions defJ and defK", 0.0, [&] {
    double r = 0.0;
    for (const auto& rep : reports) r = std::max(r, rep.beyond);
    return r;
  });
  ctx.check("algebra.jk_compression", "Lemma C*Ks", 0.0, [&] {
    double r = 0.0;
    for (const auto& rep : reports) r = std::max(r, rep.compression);
    return r;
  });
  ctx.check("algebra.jk_decomposition_config", "Prop. C*Js", 0.0, [&] {
    const IndexSet set = config_set(ctx);
    double r = 0.0;
    for (const auto& s : interval(set, set.cutoff(), true)) {
      if (s > SemigroupElement(8)) break;
      r = std::max(r, jk_decomposition_check(set, s, ctx.tol()).decomposition);
    }
    return r;
  });
}

// ------------------------------------------------------------ jk_dimension

void suite_jk_dimension(SuiteContext& ctx) {
  ctx.check("algebra.jk_dimension_integers", "Prop. C*Js", 0.0, [&] {
    const IndexSet ints = integers(8);
    double r = 0.0;
    for (int s = 1; s <= 6; ++s) {
      const AlgebraBasis ab = generate({ctx.perturb(truncated_J(ints, s, 1))}, 1600, ctx.tol());
      r = std::max(r, dim_residual(ab, (s + 1) * (s + 1)));
    }
    return r;
  });
  ctx.check("algebra.jk_dimension_dense", "Prop. C*Js", 0.0, [&] {
    const IndexSet set = enumerate({SemigroupElement(1), SemigroupElement::sqrt2()}, SemigroupElement(3));
    const JKReport rep = jk_decomposition_check(set, SemigroupElement(2), ctx.tol());
    return rep.converged ? std::abs(static_cast<double>(rep.algebraDim - rep.expectedDim)) : kInf;
  });
}

// -------------------------------------------------------------- noncompact

double strict_increase_failures(const std::vector<int>& ranks) {
  double fails = 0.0;
  for (std::size_t i = 1; i < ranks.size(); ++i) {
    if (ranks[i] <= ranks[i - 1]) fails += 1.0;
  }
  return fails;
}

void suite_noncompact(SuiteContext& ctx) {
  const std::vector<int> depths{4, 8, 16};
  ctx.check("algebra.rank_growth_dense", "Prop. kerRs", 0.0, [&] {
    const auto ranks = rank_growth_K({SemigroupElement(1), SemigroupElement::sqrt2()}, SemigroupElement(2),
                                     SemigroupElement(1), depths, ctx.tol());
    return strict_increase_failures(ranks);
  });
  ctx.check("algebra.rank_growth_integers", "Prop. kerRs", 0.0, [&] {
    const auto ranks =
        rank_growth_K({SemigroupElement(1)}, SemigroupElement(2), SemigroupElement(1), depths, ctx.tol());
    double spread = 0.0;
    for (const int r : ranks) spread = std::max(spread, std::abs(static_cast<double>(r - ranks.front())));
    return spread;
  });
}

// -------------------------------------------------------- commutator_ideal

void suite_commutator_ideal(SuiteContext& ctx) {
  const int cutoff = std::max(12, static_cast<int>(ctx.config().cutoff.to_double()));
  const IndexSet ints = integers(cutoff);
  std::vector<IdealElement> elements;
  for (int r = 0; r <= 4; ++r) {
    for (int u = 1; u <= 4; ++u) {
      for (int t = 0; t <= 4; ++t) elements.push_back({r, u, t});
    }
  }
  const IdealCaseReport rep = commutator_ideal_cases(ints, range_ints(0, 4), elements);
  ctx.check("algebra.commutator_ideal_cases", "Lemma comideal", ctx.tol().eqTol,
            [&] { return rep.cases == 0 ? kInf : rep.residual; });
  ctx.check("algebra.commutator_ideal_case_coverage", "Lemma comideal", 0.0, [&] {
    return flag(rep.zeroCases > 0 && rep.shiftDownCases > 0 && rep.absorbedCases > 0);
  });
  ctx.check("algebra.commutator_ideal_contains_defects", "Lemma comideal", ctx.tol().rankTol, [&] {
    const auto range = range_ints(0, 3);
    const AlgebraBasis ab = commutator_ideal_span(ints, range, range_ints(1, 3), range, ctx.tol());
    const auto line = line_basis(ints);
    double r = 0.0;
    for (int u = 1; u <= 3; ++u) {
      const Operator tu = toeplitz_shift(line, u);
      const ComplexMatrix defect = ctx.perturb((Operator::identity(line) - tu * tu.adjoint())).matrix();
      r = std::max(r, contains(ab, defect, ctx.tol()).residual / linalg::trace_norm(defect));
    }
    return r;
  });
}

// -------------------------------------------------------------- covariance

std::vector<std::pair<std::string, CovariantPair>> covariant_pairs(const SuiteContext& ctx) {
  std::vector<std::pair<std::string, CovariantPair>> out;
  const IndexSet set = config_set(ctx);
  const auto line = line_basis(set);
  {
    CovariantPair p;
    p.action = Action::tau();
    for (const auto& s : set.elements()) {
      p.V.emplace(s, toeplitz_shift(line, s));
      p.piImages.emplace(s, indicator_projection(line, s));
    }
    out.emplace_back("toeplitz", std::move(p));
  }
  const SemigroupElement mid = set[set.size() / 2];
  for (const bool closed : {true, false}) {
    OperatorFamily v;
    for (const auto& t : set.elements()) {
      v.emplace(t, closed ? truncated_J(set, mid, t) : truncated_K(set, mid, t));
    }
    out.emplace_back(closed ? "excovrep_J" : "excovrep_K", pi_from_V(v, mid, closed, ctx.tol()));
  }
  {
    CovariantPair p;
    p.action = Action::tau();
    const auto grid = Basis::grid(12);
    for (int k = 0; k <= 6; ++k) {
      const Operator vk = grid_shift(grid, GridMode::Tau, k);
      p.V.emplace(SemigroupElement(k), vk);
      p.piImages.emplace(SemigroupElement(k), vk * vk.adjoint());
    }
    out.emplace_back("grid_tau", std::move(p));
  }
  {
    const IndexSet small = integers(6);
    out.emplace_back("induced", induced_rep(point_characters(small.elements()), small,
                                            static_cast<int>(small.size())));
  }
  return out;
}

void suite_covariance(SuiteContext& ctx) {
  const auto pairs = covariant_pairs(ctx);
  for (const auto& [name, pair] : pairs) {
    ctx.check("reps.covariance_" + name, "Lemma equivalence", 1e-12, [&] {
      CovariantPair p = pair;
      for (auto& [s, v] : p.V) v = ctx.perturb(v);
      const auto rep = check_covariance(p, ctx.tol());
      return rep.cases == 0 ? kInf : std::max({rep.covrep, rep.altcov, rep.unitV0});
    });
  }
  std::vector<CovarianceReport> negatives;
  for (int trial = 0; trial < 50; ++trial) {
    CovariantPair p = pairs[static_cast<std::size_t>(trial) % pairs.size()].second;
    CounterRng rng(ctx.config().seed, 100 + static_cast<std::uint64_t>(trial));
    const double eps = 1e-3 * (1.0 + rng.uniform());
    for (auto& [s, v] : p.V) {
      ComplexMatrix e(v.dim(), v.dim());
      for (Eigen::Index j = 0; j < e.cols(); ++j) {
        for (Eigen::Index i = 0; i < e.rows(); ++i) e(i, j) = Complex(rng.normal(), rng.normal());
      }
      v = Operator(v.matrix() + eps * e, v.basis_ptr(), v.budget(), v.adjoint_budget());
    }
    negatives.push_back(check_covariance(p, ctx.tol()));
  }
  ctx.check("reps.covariance_equivalence", "Lemma equivalence", 0.0, [&] {
    double disagreements = 0.0;
    for (const auto& [name, pair] : pairs) {
      if (!check_covariance(pair, ctx.tol()).agree) disagreements += 1.0;
    }
    for (const auto& rep : negatives) {
      if (!rep.agree) disagreements += 1.0;
    }
    return disagreements;
  });
  ctx.check("reps.covariance_negatives_rejected", "Corollary altcov", 0.0, [&] {
    double accepted = 0.0;
    for (const auto& rep : negatives) {
      if (rep.covrepPass || rep.altcovPass) accepted += 1.0;
    }
    return accepted;
  });
  ctx.check("reps.excovrep_corrected_identity", "Lemma excovrep", 0.0, [&] {
    const IndexSet set = config_set(ctx);
    const SemigroupElement mid = set[set.size() / 2];
    double r = 0.0;
    for (const auto& rr : set.elements()) {
      for (const auto& t : set.elements()) {
        if (t < rr) continue;
        const Operator vr = ctx.perturb(truncated_J(set, mid, rr));
        const Operator vt = truncated_J(set, mid, t);
        const Operator vd = truncated_J(set, mid, t - rr);
        const Operator lhs = vr * vr.adjoint() - vt * vt.adjoint();
        const Operator rhs = vr * (Operator::identity(vd.basis_ptr()) - vd * vd.adjoint()) * vr.adjoint();
        r = std::max(r, linalg::residual(lhs.matrix(), rhs.matrix()));
      }
    }
    return r;
  });
  ctx.check("reps.projection_family_faithfulness", "Lemma projtorep", 0.0, [&] {
    const IndexSet set = config_set(ctx);
    const auto line = line_basis(set);
    ProjectionFamily indicators;
    ProjectionFamily constant;
    for (const auto& s : set.elements()) {
      indicators.P.emplace(s, ctx.perturb(indicator_projection(line, s)));
      constant.P.emplace(s, indicator_projection(line, set[1]));
    }
    const bool a = rep_from_projections(indicators, ctx.tol()).faithful;
    const bool b = rep_from_projections(constant, ctx.tol()).faithful;
    return flag(a && !b);
  });
}

// ------------------------------------------------------------ faithfulness

void suite_faithfulness(SuiteContext& ctx) {
  ctx.check("reps.faithfulness_grid", "Prop. faithgammatau", 1e-12, [&] {
    const auto grid = Basis::grid(12);
    OperatorFamily v;
    for (int p = 0; p <= 6; ++p) v.emplace(SemigroupElement(p), ctx.perturb(grid_shift(grid, GridMode::Tau, p)));
    const auto w = faithfulness_witness(v, range_ints(1, 3), range_ints(0, 3), ctx.tol());
    return w.cases == 0 ? kInf : std::max(0.0, 1.0 - w.minNorm);
  });
  ctx.check("reps.faithfulness_isometry_fails", "Prop. faithgammatau", ctx.tol().eqTol, [&] {
    const auto line = line_basis(integers(std::max(12, static_cast<int>(ctx.config().cutoff.to_double()))));
    OperatorFamily v;
    for (int p = 0; p <= 4; ++p) v.emplace(SemigroupElement(p), ctx.perturb(toeplitz_shift(line, p)));
    const auto w = faithfulness_witness(v, range_ints(1, 3), range_ints(0, 3), ctx.tol());
    return w.cases == 0 ? kInf : w.minNorm;
  });
  ctx.check("reps.faithfulness_dirsum_J", "Corollary JsIfaithful", 0.0, [&] {
    const IndexSet ints = integers(8);
    OperatorFamily v;
    for (int s = 0; s <= 4; ++s) {
      std::vector<Operator> parts;
      for (int r = 0; r <= 4; ++r) parts.push_back(truncated_J(ints, r, s));
      v.emplace(SemigroupElement(s), ctx.perturb(direct_sum(parts)));
    }
    return flag(faithfulness_witness(v, range_ints(1, 4), range_ints(0, 4), ctx.tol()).ok);
  });
  ctx.check("reps.witness_vector_grid", "Example excNtau", 0.0, [&] {
    const auto grid = Basis::grid(12);
    const Operator v = ctx.perturb(grid_shift(grid, GridMode::Tau, 1));
    const Operator vs = v.adjoint();
    const Operator one = Operator::identity(grid);
    double r = 0.0;
    for (int m = 1; m <= 3; ++m) {
      const Operator kernel = one - power(vs, m) * power(v, m);
      for (int i = 0; i <= 3; ++i) {
        for (int j = i + 1; j <= 4; ++j) {
          const Operator w = kernel * (power(v, i) * power(vs, i) - power(v, j) * power(vs, j));
          const auto col = *grid->index_of(GridIndex{i, 0});
          ComplexVector e = ComplexVector::Zero(grid->size());
          e(col) = 1.0;
          r = std::max(r, (w.matrix().col(col) - e).norm());
        }
      }
    }
    return r;
  });
}

// ------------------------------------------------------------------- rform

void suite_rform(SuiteContext& ctx) {
  const Evaluator ev(Assignment::grid(ctx.config().gridN));
  ctx.check("universal.rform_symbolic", "Lemma Rform", 0.0, [&] {
    double mismatches = 0.0;
    for (int m = 0; m <= 8; ++m) {
      for (int i = 0; i <= m; ++i) {
        for (int j = 0; j <= m; ++j) {
          const NormalForm lhs = element_f(i, j, m) - element_f(i, j, m + 1);
          const NormalForm rhs = element_g(m - i, m - j, m) - element_g(m - i, m - j, m + 1);
          if (!(lhs == rhs)) mismatches += 1.0;
        }
      }
    }
    return mismatches;
  });
  ctx.check("universal.rform_grid", "Lemma Rform", 1e-12, [&] {
    double r = 0.0;
    for (int m = 0; m <= 8; ++m) {
      for (int i = 0; i <= m; ++i) {
        for (int j = 0; j <= m; ++j) {
          SparseImage lhs = ev.evaluate_sparse(element_f(i, j, m) - element_f(i, j, m + 1));
          if (ctx.config().perturb != 0.0) lhs.matrix.coeffRef(0, 0) += ctx.config().perturb;
          const SparseImage rhs = ev.evaluate_sparse(element_g(m - i, m - j, m) - element_g(m - i, m - j, m + 1));
          r = std::max(r, sparse_residual(lhs, rhs, *ev.basis()));
        }
      }
    }
    return r;
  });
  auto gf_expected = [](int i, int j, int m, int n, int p, int r) {
    const int top = j + p;
    if (r > top || i > top || m > top || n > top) return NormalForm();
    return element_f(top - i, r, top) - element_f(top - i, r, top + 1);
  };
  ctx.check("universal.gf_product_symbolic", "Lemma Rform", 0.0, [&] {
    double mismatches = 0.0;
    for (int i = 0; i <= 3; ++i)
      for (int j = 0; j <= 3; ++j)
        for (int m = 0; m <= 3; ++m)
          for (int n = 0; n <= 3; ++n)
            for (int p = 0; p <= 3; ++p)
              for (int r = 0; r <= 3; ++r) {
                if (!(element_g(i, j, m) * element_f(p, r, n) == gf_expected(i, j, m, n, p, r))) mismatches += 1.0;
              }
    return mismatches;
  });
  ctx.check("universal.gf_product_grid", "Lemma Rform", 1e-12, [&] {
    double res = 0.0;
    for (int i = 0; i <= 2; ++i)
      for (int j = 0; j <= 2; ++j)
        for (int m = 0; m <= 2; ++m)
          for (int n = 0; n <= 2; ++n)
            for (int p = 0; p <= 2; ++p)
              for (int r = 0; r <= 2; ++r) {
                SparseImage g = ev.evaluate_sparse(element_g(i, j, m));
                if (ctx.config().perturb != 0.0) g.matrix.coeffRef(0, 0) += ctx.config().perturb;
                const SparseImage f = ev.evaluate_sparse(element_f(p, r, n));
                const SparseImage gf{SparseMatrix(g.matrix * f.matrix), f.budget.then(g.budget),
                                     g.adjointBudget.then(f.adjointBudget)};
                res = std::max(res, sparse_residual(gf, ev.evaluate_sparse(gf_expected(i, j, m, n, p, r)),
                                                    *ev.basis()));
              }
    return res;
  });
}

// ----------------------------------------------------------------- pimform

void suite_pimform(SuiteContext& ctx) {
  ctx.check("universal.pimform", "Equation pimform", 0.0, [&] {
    double r = 0.0;
    for (int n = 0; n <= 8; ++n) {
      const Evaluator ev(Assignment::pn(n, std::max(n, 1)));
      for (int m = 0; m <= 6; ++m) {
        for (int i = 0; i <= 6; ++i) {
          for (int j = 0; j <= 6; ++j) {
            const Operator img = ctx.perturb(ev.evaluate(element_f(i, j, m)));
            ComplexMatrix expected = ComplexMatrix::Zero(img.dim(), img.dim());
            if (i <= n && j <= n && m <= n) expected(i, j) = 1.0;
            r = std::max(r, linalg::residual(img.matrix(), expected));
          }
        }
      }
    }
    return r;
  });
  ctx.check("universal.pimform_support", "Equation pinonI", 0.0, [&] {
    double wrong = 0.0;
    for (int n = 0; n <= 8; ++n) {
      const Evaluator ev(Assignment::pn(n, std::max(n, 1)));
      for (int m = 0; m <= 6; ++m) {
        for (int i = 0; i <= m; ++i) {
          for (int j = 0; j <= m; ++j) {
            const bool nonzero = linalg::spectral_norm(ctx.perturb(ev.evaluate(element_e(i, j, m))).matrix()) > 0.5;
            if (nonzero != (m == n)) wrong += 1.0;
          }
        }
      }
    }
    return wrong;
  });
  ctx.check("universal.subquotient_dimension", "Theorem Bgammatau", 0.0, [&] {
    double r = 0.0;
    for (int n = 0; n <= 6; ++n) {
      const Evaluator ev(Assignment::pn(n, std::max(n, 1)));
      std::vector<ComplexMatrix> images;
      for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) images.push_back(ctx.perturb(ev.evaluate(element_e(i, j, n))).matrix());
      }
      r = std::max(r, std::abs(static_cast<double>(span_of(images, ctx.tol()).dim() - (n + 1) * (n + 1))));
    }
    return r;
  });
}

// ------------------------------------------------------------ automorphism

void suite_automorphism(SuiteContext& ctx) {
  ctx.check("universal.automorphism", "Theorem pipi*onto", 0.0, [&] {
    double r = 0.0;
    for (int n = 0; n <= 6; ++n) {
      const Evaluator pn(Assignment::pn(n, std::max(n, 1)));
      const Evaluator pns(Assignment::pnstar(n, std::max(n, 1)));
      for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) {
          const Operator a = ctx.perturb(pns.evaluate(element_e(i, j, n)));
          const Operator b = pn.evaluate(element_e(n - i, n - j, n));
          r = std::max(r, linalg::residual(a.matrix(), b.matrix()));
        }
      }
    }
    return r;
  });
}

// --------------------------------------------------------------- soundness

Word random_word(CounterRng& rng, int maxLength) {
  Word w(static_cast<std::size_t>(rng.uniform_int(0, maxLength)));
  for (auto& l : w) l = rng.coin() ? Letter::V : Letter::VStar;
  return w;
}

void suite_soundness(SuiteContext& ctx) {
  ctx.check("universal.soundness_grid", "Prop. spanningset", 1e-10, [&] {
    const Evaluator ev(Assignment::grid(ctx.config().gridN));
    CounterRng rng(ctx.config().seed, 2);
    double r = 0.0;
    for (int trial = 0; trial < 500; ++trial) {
      const Word w = random_word(rng, 12);
      SparseImage direct = ev.evaluate_word_sparse(w);
      if (ctx.config().perturb != 0.0) direct.matrix.coeffRef(0, 0) += ctx.config().perturb;
      r = std::max(r, sparse_residual(direct, ev.evaluate_sparse(normalize(w)), *ev.basis()));
    }
    return r;
  });
  ctx.check("universal.symbol_band", "Prop. spanningset", 1e-8, [&] {
    const Evaluator ev(Assignment::toeplitz(90));
    CounterRng rng(ctx.config().seed, 3);
    double r = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const Word w = random_word(rng, 10);
      const LaurentPoly band = band_symbol(ctx.perturb(ev.evaluate_word(w)), 10);
      r = std::max(r, LaurentPoly::distance(band, symbol(normalize(w))));
    }
    return r;
  });
}

// ---------------------------------------------------------------- gram_rank

void suite_gram_rank(SuiteContext& ctx) {
  ctx.check("universal.gram_rank", "Example excNtau", 0.0, [&] {
    const Evaluator ev(Assignment::grid(ctx.config().gridN));
    std::vector<Evaluator::IndexMap> maps;
    for (int s = 0; s <= 4; ++s) {
      for (int t = 0; t <= 4; ++t) {
        for (int m = std::max(s, t); m <= 6; ++m) maps.push_back(ev.monomial_map({s, m, t}));
      }
    }
    const auto n = static_cast<Eigen::Index>(maps.size());
    ComplexMatrix gram(n, n);
    for (Eigen::Index a = 0; a < n; ++a) {
      for (Eigen::Index b = 0; b < n; ++b) {
        int hits = 0;
        const auto& x = maps[static_cast<std::size_t>(a)].target;
        const auto& y = maps[static_cast<std::size_t>(b)].target;
        for (std::size_t c = 0; c < x.size(); ++c) {
          if (x[c] >= 0 && x[c] == y[c]) ++hits;
        }
        gram(a, b) = static_cast<double>(hits);
      }
    }
    gram = ctx.perturb(gram);
    return static_cast<double>(n - linalg::norm_rank(gram, ctx.tol()).rank);
  });
}

// ---------------------------------------------------------------- essential

void suite_essential(SuiteContext& ctx) {
  ctx.check("universal.essential_witness", "Lemma Iess", 0.0, [&] {
    const int n = ctx.config().gridN;
    const Evaluator ev(Assignment::grid(n));
    double r = 0.0;
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; i + j + 1 <= n; ++j) {
        const SparseImage img = ev.evaluate_sparse(element_f(i, i, i + j) - element_f(i, i, i + j + 1));
        const auto col = *ev.basis()->index_of(GridIndex{i, j});
        ComplexVector v = ComplexVector(img.matrix.col(col));
        v(col) -= 1.0 - ctx.config().perturb;
        r = std::max(r, v.norm());
      }
    }
    return r;
  });
  ctx.check("universal.kernel_flags", "Lemma splitexactisom", 0.0, [&] {
    double wrong = 0.0;
    const int size = 40;
    for (int m = 0; m <= 4; ++m) {
      for (int i = 0; i <= m; ++i) {
        for (int j = 0; j <= m; ++j) {
          const auto f = kernel_flags(element_f(i, j, m), size, ctx.tol());
          const auto g = kernel_flags(element_g(i, j, m), size, ctx.tol());
          const auto e = kernel_flags(element_e(i, j, m), size, ctx.tol());
          if (!f.inKerPhiTstar || f.inKerPhiT) wrong += 1.0;
          if (!g.inKerPhiT || g.inKerPhiTstar) wrong += 1.0;
          if (!e.inI) wrong += 1.0;
        }
      }
    }
    const auto v = kernel_flags(normalize({Letter::V}), size, ctx.tol());
    if (v.inKerPhiT || v.inKerPhiTstar) wrong += 1.0;
    return wrong;
  });
  ctx.check("universal.split_lemma", "Lemma splitexactisom", 0.0, [&] {
    double wrong = 0.0;
    const NormalForm vs = normalize({Letter::VStar});
    for (int m = 0; m <= 6; ++m) {
      for (int i = 0; i <= 6; ++i) {
        for (int j = 0; j <= 6; ++j) {
          const NormalForm lhs = vs * element_f(i, j, m);
          const NormalForm rhs = i == 0 ? NormalForm() : element_f(i - 1, j, std::max(i, m));
          if (!(lhs == rhs)) wrong += 1.0;
        }
      }
    }
    return wrong;
  });
}

// ------------------------------------------------------------ sigma_system

void suite_sigma_system(SuiteContext& ctx) {
  const int n = 16;
  const CoisometricSystem sys = egsigma_system(n, n);
  const std::vector<Operator> pi = build_pi_all(sys);
  const auto grid = sys.V.basis_ptr();
  ctx.check("sigma.egsigma_roundtrip", "Prop. repcoisometry", 0.0, [&] {
    const std::vector<Operator> q = extract_q(pi, ctx.perturb(sys.V));
    double r = 0.0;
    for (std::size_t k = 0; k < q.size(); ++k) r = std::max(r, nonvacuous(guarded_residual(q[k], sys.Q[k])));
    CoisometricSystem back{sys.V, q};
    const auto pi2 = build_pi_all(back);
    for (std::size_t k = 0; k < pi.size(); ++k) r = std::max(r, nonvacuous(guarded_residual(pi2[k], pi[k])));
    return r;
  });
  ctx.check("sigma.egsigma_pi_projections", "Example egsigma", 0.0, [&] {
    double r = 0.0;
    for (int m = 0; m <= n; ++m) {
      ComplexMatrix expected = ComplexMatrix::Zero(grid->size(), grid->size());
      for (int k = 0; k <= n; ++k) {
        for (int l = 0; l <= n; ++l) {
          if (k + l >= m) {
            const auto i = *grid->index_of(GridIndex{k, l});
            expected(i, i) = 1.0;
          }
        }
      }
      r = std::max(r, nonvacuous(guarded_residual(ctx.perturb(pi[static_cast<std::size_t>(m)]),
                                                  Operator(expected, grid))));
    }
    return r;
  });
  ctx.check("sigma.egsigma_invariants", "Prop. repcoisometry", 1e-12, [&] {
    CoisometricSystem s = sys;
    s.V = ctx.perturb(s.V);
    const auto inv = check_system(s);
    const auto piInv = check_pi(s, pi);
    return std::max({inv.worst(), piInv.projection, piInv.monotonicity, piInv.difference});
  });
  ctx.check("sigma.egsigma_covariance", "Prop. repcoisometry", 1e-12, [&] {
    const auto rep = covariance_check_sigma(pi, ctx.perturb(sys.V), 4, ctx.tol());
    return rep.covariance.cases == 0 ? kInf : rep.worst();
  });
  ctx.check("sigma.egsigma_faithfulness", "Prop. coisfaithful", 1e-12, [&] {
    CoisometricSystem s = sys;
    for (auto& q : s.Q) q = ctx.perturb(q);
    const auto f = faithfulness_sigma(s, ctx.tol());
    return f.ok ? std::abs(f.minGap - 1.0) : kInf;
  });
  ctx.check("sigma.model_faithfulness", "Prop. coisfaithful", 0.0, [&] {
    CoisometricSystem s = model_system(8, 24, 6);
    for (auto& q : s.Q) q = ctx.perturb(q);
    const auto inv = check_system(s);
    return flag(faithfulness_sigma(s, ctx.tol()).ok && inv.worst() <= ctx.tol().eqTol);
  });
  ctx.check("sigma.unitary_degenerate", "Prop. repcoisometry", 1e-12, [&] {
    const int d = 6;
    const auto basis = Basis::plain(d);
    ComplexMatrix cyc = ComplexMatrix::Zero(d, d);
    for (int k = 0; k < d; ++k) cyc((k + 1) % d, k) = 1.0;
    const CoisometricSystem u{ctx.perturb(Operator(cyc, basis)),
                              std::vector<Operator>(5, Operator::zero(basis))};
    const auto p = build_pi_all(u);
    double r = 0.0;
    for (const auto& pk : p) r = std::max(r, guarded_residual(pk, Operator::identity(basis)).residual);
    return std::max(r, covariance_check_sigma(p, u.V, 3, ctx.tol()).worst());
  });
  ctx.check("sigma.perturbed_q_detected", "Prop. repcoisometry", 0.0, [&] {
    CoisometricSystem bad = sys;
    std::swap(bad.Q[2], bad.Q[3]);
    const auto inv = check_system(bad);
    return flag(inv.monotonicity > ctx.tol().eqTol);
  });
}

// ----------------------------------------------------------- csigman_symbol

Operator model_oracle_sample(std::optional<int> n, int i, int j, int m, const Operator& t) {
  const int shift = n && *n <= m ? m - *n : 0;
  return power(t, i + shift) * power(t.adjoint(), j + shift);
}

void suite_csigman_symbol(SuiteContext& ctx) {
  const int samples = 9;
  const int dim = 40;
  std::vector<SemigroupElement> labels;
  for (int r = 0; r < dim; ++r) labels.emplace_back(r);
  const auto line = Basis::line(labels, dim - 1);
  const Operator t = toeplitz_shift(line, 1);
  std::map<std::array<int, 3>, OperatorSequence> images;
  auto image = [&](int i, int j, int m) -> const OperatorSequence& {
    auto it = images.find({i, j, m});
    if (it == images.end()) it = images.emplace(std::array<int, 3>{i, j, m}, model_image(i, j, m, samples, dim)).first;
    return it->second;
  };

  ctx.check("sigma.model_image_oracle", "Equation pin", 0.0, [&] {
    double r = 0.0;
    for (int m = 0; m <= 6; ++m) {
      for (int i = 0; i <= 6; ++i) {
        for (int j = 0; j <= 6; ++j) {
          OperatorSequence seq = image(i, j, m);
          seq.tail = ctx.perturb(seq.tail);
          OperatorSequence oracle{{}, model_oracle_sample(std::nullopt, i, j, m, t)};
          for (int n = 0; n < samples; ++n) oracle.samples.push_back(model_oracle_sample(n, i, j, m, t));
          r = std::max(r, sequence_residual(seq, oracle));
        }
      }
    }
    return r;
  });
  ctx.check("sigma.symbol_constancy", "Theorem csigmaN", 0.0, [&] {
    double r = 0.0;
    for (int m = 0; m <= 6; ++m) {
      for (int i = 0; i <= 6; ++i) {
        for (int j = 0; j <= 6; ++j) {
          OperatorSequence seq = image(i, j, m);
          seq.samples[0] = ctx.perturb(seq.samples[0]);
          const auto c = symbol_constancy(seq, 12, 0.0);
          r = std::max(r, c.maxDeviation);
          LaurentPoly expected;
          expected.add(i - j, 1.0);
          r = std::max(r, LaurentPoly::distance(c.tailSymbol, expected));
        }
      }
    }
    return r;
  });
  ctx.check("sigma.matrix_unit_combination", "Equation pinon2", 0.0, [&] {
    double r = 0.0;
    const Operator range = Operator::identity(line) - t * t.adjoint();
    for (int m = 0; m <= 6; ++m) {
      for (int i = 0; i <= m; ++i) {
        for (int j = 0; j <= m; ++j) {
          SigmaCombination x{{{i, m, j}, 1.0}, {{i, m + 1, j}, -1.0}};
          if (m > 0) {
            x[{i + 1, m - 1, j + 1}] -= 1.0;
            x[{i + 1, m, j + 1}] += 1.0;
          }
          OperatorSequence seq = model_evaluate(x, samples, dim);
          seq.tail = ctx.perturb(seq.tail);
          OperatorSequence expected{{}, Operator::zero(line)};
          for (int n = 0; n < samples; ++n) {
            expected.samples.push_back(n == m ? power(t, i) * range * power(t.adjoint(), j) : Operator::zero(line));
          }
          r = std::max(r, sequence_residual(seq, expected));
          const auto c = symbol_constancy(seq, 12, 0.0);
          r = std::max(r, c.maxDeviation + (c.tailSymbol.is_zero() ? 0.0 : 1.0));
        }
      }
    }
    return r;
  });
  ctx.check("sigma.symbol_span", "Corollary exseqcsigma", 0.0, [&] {
    const int d = 4;
    std::map<int, bool> seen;
    for (int i = 0; i <= d; ++i) {
      for (int j = 0; j <= d; ++j) {
        const OperatorSequence seq = model_image(i, j, 0, 2, dim);
        const LaurentPoly sym = band_symbol(ctx.perturb(seq.tail), 2 * d);
        for (const auto& [deg, c] : sym.coefficients()) {
          if (std::abs(c) > 0.5) seen[deg] = true;
        }
      }
    }
    double missing = 0.0;
    for (int deg = -d; deg <= d; ++deg) missing += seen.count(deg) ? 0.0 : 1.0;
    return missing + static_cast<double>(seen.size()) - static_cast<double>(2 * d + 1);
  });
}

}  // namespace

const std::vector<SuiteEntry>& suite_registry() {
  static const std::vector<SuiteEntry> registry{
      {"automorphism", "pi*_n images of f-differences are the reindexed pi_n images", "Theorem pipi*onto",
       suite_automorphism},
      {"commprojs", "initial and range projections commute and multiply by the join", "Prop. commprojs",
       suite_commprojs},
      {"commutator_ideal", "commutator ideal spanning set and its six product cases", "Lemma comideal",
       suite_commutator_ideal},
      {"covariance", "both covariance formulations agree on constructed and perturbed pairs",
       "Lemma equivalence", suite_covariance},
      {"csigman_symbol", "model images of the backward-shift algebra have constant symbol", "Theorem csigmaN",
       suite_csigman_symbol},
      {"dirsum", "dimensions of the algebras generated by J_k and their direct sums", "Lemma dirsumJk",
       suite_dirsum},
      {"essential", "essentiality witness, kernel membership and the v* reduction", "Lemma Iess",
       suite_essential},
      {"faithfulness", "faithfulness witnesses for grid, isometric and direct-sum families",
       "Prop. faithgammatau", suite_faithfulness},
      {"gram_rank", "linear independence of monomial images in the grid representation", "Example excNtau",
       suite_gram_rank},
      {"jk_decomposition", "J^s = K^s + rank one, vanishing beyond s, compression of T_t", "Prop. C*Js",
       suite_jk_decomposition},
      {"jk_dimension", "dimension of the algebra generated by J^s on [0, s]", "Prop. C*Js", suite_jk_dimension},
      {"matrix_units", "matrix units as words in truncated shifts", "Example ppisometryJk",
       suite_matrix_units},
      {"noncompact", "rank growth of K^s_t over dense and discrete cones", "Prop. kerRs", suite_noncompact},
      {"pimform", "images of f-elements under pi_n and the subquotient dimensions", "Equation pimform",
       suite_pimform},
      {"rform", "f/g difference identity and the g.f product formula", "Lemma Rform", suite_rform},
      {"sigma_system", "coisometric systems: Q_n/P_n roundtrip, covariance, faithfulness",
       "Prop. repcoisometry", suite_sigma_system},
      {"soundness", "normal forms evaluate like their words; symbols match band extraction",
       "Prop. spanningset", suite_soundness},
      {"toeplitz", "truncated Toeplitz shifts, indicators and shift partial isometries", "Toeplitz shifts T_s",
       suite_toeplitz},
      {"tool_criterion", "a product of partial isometries is one iff S*S commutes with TT*", "Prop. tool",
       suite_tool_criterion},
  };
  return registry;
}

}  // namespace picross::detail
