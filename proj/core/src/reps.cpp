#include "picross/reps.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace picross {

bool Action::in_interval(const SemigroupElement& t) const {
  return closed ? t <= bound : t < bound;
}

GeneratorImage act(const Action& action, const SemigroupElement& s, const SemigroupElement& t) {
  switch (action.kind) {
    case Action::Kind::Tau:
      return {GeneratorImage::Kind::Indicator, s + t};
    case Action::Kind::TauI:
      if (action.in_interval(s + t)) return {GeneratorImage::Kind::Indicator, s + t};
      return {GeneratorImage::Kind::Zero, {}};
    case Action::Kind::Sigma:
      if (t >= s) return {GeneratorImage::Kind::Indicator, t - s};
      return {GeneratorImage::Kind::Unit, {}};
  }
  return {};
}

double guarded_norm(const Operator& a) {
  const auto cols = a.basis().guard(a.budget());
  return residual_on(a, Operator::zero(a.basis_ptr()), cols);
}

namespace {

double projection_defect(const Operator& p) {
  return std::max(guarded_residual(p * p, p).residual, guarded_residual(p.adjoint(), p).residual);
}

}  // namespace

Operator RepFromProjections::apply(const std::map<SemigroupElement, Complex>& combination) const {
  if (family.P.empty()) throw std::out_of_range("empty projection family");
  Operator out = Operator::zero(family.P.begin()->second.basis_ptr());
  for (const auto& [r, c] : combination) out = out + c * family.P.at(r);
  return out;
}

RepFromProjections rep_from_projections(const ProjectionFamily& fam, const Tolerance& tol) {
  RepFromProjections out;
  out.family = fam;
  for (const auto& [r, p] : fam.P) {
    if (projection_defect(p) > tol.eqTol) {
      throw std::invalid_argument("P_" + r.to_string() + " is not a projection");
    }
  }
  out.minGap = std::numeric_limits<double>::infinity();
  for (auto it = fam.P.begin(); it != fam.P.end(); ++it) {
    for (auto jt = std::next(it); jt != fam.P.end(); ++jt) {
      const Operator& pr = it->second;
      const Operator& pt = jt->second;
      out.monotonicity = std::max(out.monotonicity, guarded_residual(pt * pr, pt).residual);
      out.minGap = std::min(out.minGap, guarded_residual(pr, pt).residual);
    }
  }
  if (out.monotonicity > tol.eqTol) {
    throw std::invalid_argument("projection family is not decreasing");
  }
  if (fam.P.size() < 2) out.minGap = 0.0;
  out.faithful = fam.P.size() < 2 || out.minGap > tol.eqTol;
  return out;
}

CovariantPair pi_from_V(const OperatorFamily& V, const SemigroupElement& s, bool closed,
                        const Tolerance& tol) {
  CovariantPair pair;
  pair.action = Action::tau_interval(s, closed);
  pair.V = V;
  for (const auto& [r, vr] : V) {
    if (pair.action.in_interval(r)) {
      pair.piImages.emplace(r, vr * vr.adjoint());
    } else if (guarded_norm(vr) > tol.eqTol) {
      throw std::invalid_argument("V_" + r.to_string() + " is nonzero outside the interval");
    }
  }
  return pair;
}

namespace {

std::optional<Operator> image_of(const CovariantPair& pair, const GeneratorImage& g,
                                 const std::shared_ptr<const Basis>& basis) {
  switch (g.kind) {
    case GeneratorImage::Kind::Zero:
      return Operator::zero(basis);
    case GeneratorImage::Kind::Unit: {
      const auto it = pair.piImages.find(SemigroupElement(0));
      if (it == pair.piImages.end()) return std::nullopt;
      return it->second;
    }
    case GeneratorImage::Kind::Indicator: {
      const auto it = pair.piImages.find(g.label);
      if (it == pair.piImages.end()) return std::nullopt;
      return it->second;
    }
  }
  return std::nullopt;
}

}  // namespace

CovarianceReport check_covariance(const CovariantPair& pair, const Tolerance& tol) {
  CovarianceReport out;
  for (const auto& [s, vs] : pair.V) {
    const auto basis = vs.basis_ptr();
    const Operator vsAdj = vs.adjoint();
    const Operator initial = vsAdj * vs;
    const Operator range = vs * vsAdj;
    if (s.is_zero()) out.unitV0 = guarded_residual(vs, Operator::identity(basis)).residual;
    const auto unitImage = image_of(pair, act(pair.action, s, SemigroupElement(0)), basis);
    for (const auto& [t, pa] : pair.piImages) {
      const auto lhs = image_of(pair, act(pair.action, s, t), basis);
      if (!lhs) continue;
      ++out.cases;
      out.covrep = std::max({out.covrep, guarded_residual(*lhs, vs * pa * vsAdj).residual,
                             guarded_residual(initial * pa, pa * initial).residual});
      out.altcov = std::max(out.altcov, guarded_residual(*lhs * vs, vs * pa).residual);
      if (unitImage) out.altcov = std::max(out.altcov, guarded_residual(*unitImage, range).residual);
    }
  }
  out.covrepPass = out.covrep <= tol.eqTol;
  out.altcovPass = out.altcov <= tol.eqTol;
  out.agree = out.covrepPass == out.altcovPass;
  return out;
}

DiagonalRep point_characters(std::vector<SemigroupElement> points) {
  return [points = std::move(points)](const SemigroupElement& t) {
    std::vector<int> diag;
    diag.reserve(points.size());
    for (const auto& x : points) diag.push_back(t <= x ? 1 : 0);
    return diag;
  };
}

CovariantPair induced_rep(const DiagonalRep& pi0, const IndexSet& set, int innerDim) {
  std::vector<std::shared_ptr<const Basis>> parts;
  std::map<std::pair<std::size_t, int>, Eigen::Index> position;
  for (std::size_t ri = 0; ri < set.size(); ++ri) {
    const auto fibre = pi0(set[ri]);
    if (static_cast<int>(fibre.size()) != innerDim) {
      throw DimensionError("induced_rep: pi0 returned " + std::to_string(fibre.size()) +
                           " slots, expected " + std::to_string(innerDim));
    }
    for (int j = 0; j < innerDim; ++j) {
      if (fibre[static_cast<std::size_t>(j)] == 0) continue;
      position.emplace(std::make_pair(ri, j), static_cast<Eigen::Index>(parts.size()));
      parts.push_back(Basis::line({set[ri]}, set.cutoff()));
    }
  }
  const auto basis = Basis::concat(parts);
  const auto n = basis->size();

  CovariantPair pair;
  pair.action = Action::tau();
  for (const auto& t : set.elements()) {
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    for (const auto& [key, idx] : position) {
      if (pi0(t + set[key.first])[static_cast<std::size_t>(key.second)] != 0) m(idx, idx) = 1.0;
    }
    pair.piImages.emplace(t, Operator(std::move(m), basis));
  }
  for (const auto& s : set.elements()) {
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    for (const auto& [key, idx] : position) {
      const auto source = set.index_of(set[key.first] + s);
      if (!source) continue;
      const auto col = position.find({*source, key.second});
      if (col != position.end()) m(idx, col->second) = 1.0;
    }
    pair.V.emplace(s, Operator(std::move(m), basis, Budget::shift(-s.value()),
                               Budget::shift(s.value())));
  }
  return pair;
}

FaithfulnessWitness faithfulness_witness(const OperatorFamily& V,
                                         const std::vector<SemigroupElement>& rRange,
                                         const std::vector<SemigroupElement>& uvRange,
                                         const Tolerance& tol) {
  FaithfulnessWitness out;
  out.minNorm = std::numeric_limits<double>::infinity();
  for (const auto& r : rRange) {
    if (r.is_zero()) continue;
    const Operator& vr = V.at(r);
    const Operator kernelPart = Operator::identity(vr.basis_ptr()) - vr.adjoint() * vr;
    for (std::size_t a = 0; a < uvRange.size(); ++a) {
      for (std::size_t b = 0; b < uvRange.size(); ++b) {
        if (!(uvRange[a] < uvRange[b])) continue;
        const Operator& vu = V.at(uvRange[a]);
        const Operator& vt = V.at(uvRange[b]);
        const Operator w = kernelPart * (vu * vu.adjoint() - vt * vt.adjoint());
        out.minNorm = std::min(out.minNorm, guarded_norm(w));
        ++out.cases;
      }
    }
  }
  if (out.cases == 0) out.minNorm = 0.0;
  out.ok = out.cases > 0 && out.minNorm > tol.eqTol;
  return out;
}

}  // namespace picross
