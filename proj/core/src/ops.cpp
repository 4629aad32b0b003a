#include "picross/ops.hpp"

#include <algorithm>
#include <stdexcept>

#include <Eigen/SparseCore>

#include "picross/random.hpp"

namespace picross {

Budget Budget::shift(const QuadraticNumber& d0, const QuadraticNumber& d1) {
  Budget b;
  b.axes_[0] = {max(QuadraticNumber(0), d0), d0};
  b.axes_[1] = {max(QuadraticNumber(0), d1), d1};
  return b;
}

Budget Budget::then(const Budget& next) const {
  Budget out;
  for (std::size_t i = 0; i < axes_.size(); ++i) {
    out.axes_[i].excursion = max(axes_[i].excursion, axes_[i].net + next.axes_[i].excursion);
    out.axes_[i].net = axes_[i].net + next.axes_[i].net;
  }
  return out;
}

Budget Budget::join(const Budget& other) const {
  Budget out;
  for (std::size_t i = 0; i < axes_.size(); ++i) {
    out.axes_[i].excursion = max(axes_[i].excursion, other.axes_[i].excursion);
    out.axes_[i].net = max(axes_[i].net, other.axes_[i].net);
  }
  return out;
}

bool Budget::is_zero() const {
  return std::all_of(axes_.begin(), axes_.end(), [](const AxisBudget& a) {
    return a.excursion.sign() == 0 && a.net.sign() == 0;
  });
}

std::shared_ptr<const Basis> Basis::plain(Eigen::Index n) {
  auto b = std::make_shared<Basis>();
  b->labels_.assign(static_cast<std::size_t>(n), std::monostate{});
  b->headroom_.resize(static_cast<std::size_t>(n));
  return b;
}

std::shared_ptr<const Basis> Basis::line(std::vector<SemigroupElement> labels,
                                         const SemigroupElement& cutoff) {
  std::sort(labels.begin(), labels.end());
  auto b = std::make_shared<Basis>();
  b->shape_ = Shape::Line;
  b->cutoff_ = cutoff;
  for (const auto& r : labels) {
    b->labels_.emplace_back(r);
    b->headroom_.push_back({cutoff.value() - r.value(), QuadraticNumber(0)});
  }
  b->lineLabels_ = std::move(labels);
  return b;
}

std::shared_ptr<const Basis> Basis::grid(int n) {
  if (n < 1) throw std::invalid_argument("grid size must be at least 1");
  auto b = std::make_shared<Basis>();
  b->shape_ = Shape::Grid;
  b->gridN_ = n;
  for (int k = 0; k <= n; ++k) {
    for (int l = 0; l <= n; ++l) {
      b->labels_.emplace_back(GridIndex{k, l});
      b->headroom_.push_back({QuadraticNumber(n - k), QuadraticNumber(n - l)});
    }
  }
  return b;
}

std::shared_ptr<const Basis> Basis::concat(const std::vector<std::shared_ptr<const Basis>>& parts) {
  auto b = std::make_shared<Basis>();
  for (const auto& p : parts) {
    b->labels_.insert(b->labels_.end(), p->labels_.begin(), p->labels_.end());
    b->headroom_.insert(b->headroom_.end(), p->headroom_.begin(), p->headroom_.end());
  }
  return b;
}

std::shared_ptr<const Basis> Basis::subset(const Basis& parent,
                                           const std::vector<Eigen::Index>& keep) {
  auto b = std::make_shared<Basis>();
  for (const auto i : keep) {
    b->labels_.push_back(parent.label(i));
    b->headroom_.push_back(parent.headroom_[static_cast<std::size_t>(i)]);
  }
  if (parent.shape_ == Shape::Line) {
    b->shape_ = Shape::Line;
    b->cutoff_ = parent.cutoff_;
    for (const auto& l : b->labels_) b->lineLabels_.push_back(std::get<SemigroupElement>(l));
  }
  return b;
}

std::optional<Eigen::Index> Basis::index_of(const SemigroupElement& x) const {
  if (shape_ != Shape::Line) return std::nullopt;
  const auto it = std::lower_bound(lineLabels_.begin(), lineLabels_.end(), x);
  if (it == lineLabels_.end() || !(*it == x)) return std::nullopt;
  return static_cast<Eigen::Index>(it - lineLabels_.begin());
}

std::optional<Eigen::Index> Basis::index_of(const GridIndex& g) const {
  if (shape_ != Shape::Grid || g.k < 0 || g.l < 0 || g.k > gridN_ || g.l > gridN_) {
    return std::nullopt;
  }
  return static_cast<Eigen::Index>(g.k) * (gridN_ + 1) + g.l;
}

std::vector<Eigen::Index> Basis::guard(const Budget& budget) const {
  std::vector<Eigen::Index> out;
  for (Eigen::Index i = 0; i < size(); ++i) {
    bool ok = true;
    for (int a = 0; a < Budget::kAxes && ok; ++a) {
      ok = headroom(i, a) >= budget.axis(a).excursion;
    }
    if (ok) out.push_back(i);
  }
  return out;
}

Operator::Operator(ComplexMatrix matrix, std::shared_ptr<const Basis> basis, Budget budget,
                   Budget adjointBudget)
    : matrix_(std::move(matrix)),
      basis_(std::move(basis)),
      budget_(std::move(budget)),
      adjointBudget_(std::move(adjointBudget)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() != basis_->size()) {
    throw DimensionError("operator matrix " + std::to_string(matrix_.rows()) + "x" +
                         std::to_string(matrix_.cols()) + " does not fit a basis of size " +
                         std::to_string(basis_->size()));
  }
}

Operator Operator::identity(std::shared_ptr<const Basis> basis) {
  const auto n = basis->size();
  return Operator(linalg::identity(n), std::move(basis));
}

Operator Operator::zero(std::shared_ptr<const Basis> basis) {
  const auto n = basis->size();
  return Operator(linalg::zeros(n, n), std::move(basis));
}

Operator Operator::adjoint() const {
  return Operator(matrix_.adjoint(), basis_, adjointBudget_, budget_);
}

Operator Operator::as_exact() const { return Operator(matrix_, basis_); }

namespace {

void require_same_basis(const Operator& a, const Operator& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(what) + ": operators of size " + std::to_string(a.dim()) +
                         " and " + std::to_string(b.dim()));
  }
}

bool mostly_zero(const ComplexMatrix& m) {
  return (m.array() != Complex(0.0)).count() * 16 <= m.size();
}

// Shift-built operators are partial permutations, so large products go
// through a sparse kernel when both factors allow it.
ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() < 24 || !mostly_zero(a) || !mostly_zero(b)) return a * b;
  const Eigen::SparseMatrix<Complex> sa = a.sparseView();
  const Eigen::SparseMatrix<Complex> sb = b.sparseView();
  return ComplexMatrix(sa * sb);
}

}  // namespace

Operator operator*(const Operator& a, const Operator& b) {
  require_same_basis(a, b, "product");
  return Operator(multiply(a.matrix_, b.matrix_), a.basis_, b.budget_.then(a.budget_),
                  a.adjointBudget_.then(b.adjointBudget_));
}

Operator operator+(const Operator& a, const Operator& b) {
  require_same_basis(a, b, "sum");
  return Operator(a.matrix_ + b.matrix_, a.basis_, a.budget_.join(b.budget_),
                  a.adjointBudget_.join(b.adjointBudget_));
}

Operator operator-(const Operator& a, const Operator& b) {
  require_same_basis(a, b, "difference");
  return Operator(a.matrix_ - b.matrix_, a.basis_, a.budget_.join(b.budget_),
                  a.adjointBudget_.join(b.adjointBudget_));
}

Operator operator*(Complex c, const Operator& a) {
  return Operator(c * a.matrix_, a.basis_, a.budget_, a.adjointBudget_);
}

Operator power(const Operator& a, int n) {
  if (n < 0) throw std::invalid_argument("negative operator power");
  Operator out = Operator::identity(a.basis_ptr());
  for (int i = 0; i < n; ++i) out = a * out;
  return out;
}

double residual_on(const Operator& a, const Operator& b, const std::vector<Eigen::Index>& cols) {
  require_same_basis(a, b, "residual");
  if (cols.empty()) return 0.0;
  ComplexMatrix diff(a.dim(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    diff.col(static_cast<Eigen::Index>(c)) = a.matrix().col(cols[c]) - b.matrix().col(cols[c]);
  }
  return linalg::spectral_norm(diff);
}

GuardedResidual guarded_residual(const Operator& a, const Operator& b) {
  const auto cols = a.basis().guard(a.budget().join(b.budget()));
  return {residual_on(a, b, cols), cols.size()};
}

std::shared_ptr<const Basis> line_basis(const IndexSet& set) {
  return Basis::line(set.elements(), set.cutoff());
}

Operator toeplitz_shift(const std::shared_ptr<const Basis>& line, const SemigroupElement& s) {
  if (line->shape() != Basis::Shape::Line) throw std::invalid_argument("toeplitz_shift needs a line basis");
  if (s > line->cutoff()) {
    throw std::out_of_range("shift " + s.to_string() + " exceeds cutoff " + line->cutoff().to_string());
  }
  const auto n = line->size();
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto j = line->index_of(std::get<SemigroupElement>(line->label(i)) + s);
    if (j) m(*j, i) = 1.0;
  }
  return Operator(std::move(m), line, Budget::shift(s.value()), Budget::shift(-s.value()));
}

Operator toeplitz_shift(const IndexSet& set, const SemigroupElement& s) {
  return toeplitz_shift(line_basis(set), s);
}

namespace {

Operator truncated_shift(const IndexSet& set, const SemigroupElement& s, const SemigroupElement& t,
                         bool closed) {
  const auto labels = interval(set, s, closed);
  auto basis = Basis::line(labels, s);
  const auto n = basis->size();
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const SemigroupElement target = std::get<SemigroupElement>(basis->label(i)) + t;
    if (target > s || (!closed && target == s)) continue;
    if (const auto j = basis->index_of(target)) m(*j, i) = 1.0;
  }
  return Operator(std::move(m), std::move(basis));
}

}  // namespace

Operator truncated_J(const IndexSet& set, const SemigroupElement& s, const SemigroupElement& t) {
  return truncated_shift(set, s, t, true);
}

Operator truncated_K(const IndexSet& set, const SemigroupElement& s, const SemigroupElement& t) {
  return truncated_shift(set, s, t, false);
}

Operator indicator_projection(const std::shared_ptr<const Basis>& line, const SemigroupElement& s) {
  if (line->shape() != Basis::Shape::Line) {
    throw std::invalid_argument("indicator_projection needs a line basis");
  }
  const auto n = line->size();
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::get<SemigroupElement>(line->label(i)) >= s) m(i, i) = 1.0;
  }
  return Operator(std::move(m), line);
}

Operator indicator_projection(const IndexSet& set, const SemigroupElement& s) {
  return indicator_projection(line_basis(set), s);
}

Operator grid_shift(const std::shared_ptr<const Basis>& grid, GridMode mode, int power) {
  if (grid->shape() != Basis::Shape::Grid) throw std::invalid_argument("grid_shift needs a grid basis");
  if (power < 0) throw std::invalid_argument("grid_shift power must be nonnegative");
  const int n = grid->grid_n();
  const auto dim = grid->size();
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  const int dk = mode == GridMode::Tau ? power : 0;
  for (int k = 0; k <= n; ++k) {
    for (int l = power; l <= n; ++l) {
      const auto to = grid->index_of(GridIndex{k + dk, l - power});
      if (to) m(*to, *grid->index_of(GridIndex{k, l})) = 1.0;
    }
  }
  return Operator(std::move(m), grid, Budget::shift(dk, -power), Budget::shift(-dk, power));
}

Operator grid_shift(int n, GridMode mode, int power) {
  return grid_shift(Basis::grid(n), mode, power);
}

Operator shift_matrix(int k) {
  if (k < 0) throw std::invalid_argument("shift_matrix size must be nonnegative");
  std::vector<SemigroupElement> labels;
  for (int j = 0; j <= k; ++j) labels.emplace_back(j);
  auto basis = Basis::line(labels, k);
  ComplexMatrix m = ComplexMatrix::Zero(k + 1, k + 1);
  for (int j = 0; j < k; ++j) m(j + 1, j) = 1.0;
  return Operator(std::move(m), std::move(basis));
}

Operator matrix_unit(const std::shared_ptr<const Basis>& basis, Eigen::Index i, Eigen::Index j) {
  const auto n = basis->size();
  if (i < 0 || j < 0 || i >= n || j >= n) throw std::out_of_range("matrix_unit index out of range");
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  m(i, j) = 1.0;
  return Operator(std::move(m), basis);
}

Operator direct_sum(const std::vector<Operator>& parts) {
  std::vector<ComplexMatrix> blocks;
  std::vector<std::shared_ptr<const Basis>> bases;
  Budget b;
  Budget adj;
  for (const auto& p : parts) {
    blocks.push_back(p.matrix());
    bases.push_back(p.basis_ptr());
    b = b.join(p.budget());
    adj = adj.join(p.adjoint_budget());
  }
  return Operator(linalg::direct_sum(blocks), Basis::concat(bases), b, adj);
}

Operator compress(const Operator& p, const Operator& a, const Tolerance& tol) {
  const ComplexMatrix& pm = p.matrix();
  const double idem = linalg::residual(pm * pm, pm);
  const double herm = linalg::residual(pm.adjoint(), pm);
  if (idem > tol.eqTol || herm > tol.eqTol) {
    throw std::invalid_argument("compress: P is not a projection (residual " +
                                std::to_string(std::max(idem, herm)) + ")");
  }
  const Operator pap = p * a * p;
  bool diagonal01 = true;
  std::vector<Eigen::Index> keep;
  for (Eigen::Index j = 0; j < pm.cols() && diagonal01; ++j) {
    for (Eigen::Index i = 0; i < pm.rows(); ++i) {
      const Complex x = pm(i, j);
      if (i != j && x != Complex(0.0)) diagonal01 = false;
      if (i == j) {
        if (x == Complex(1.0)) {
          keep.push_back(i);
        } else if (x != Complex(0.0)) {
          diagonal01 = false;
        }
      }
    }
  }
  if (!diagonal01) return pap;
  const auto k = static_cast<Eigen::Index>(keep.size());
  ComplexMatrix sub(k, k);
  for (Eigen::Index r = 0; r < k; ++r) {
    for (Eigen::Index c = 0; c < k; ++c) sub(r, c) = pap.matrix()(keep[r], keep[c]);
  }
  return Operator(std::move(sub), Basis::subset(p.basis(), keep), pap.budget(),
                  pap.adjoint_budget());
}

PartialIsometryCheck is_partial_isometry(const Operator& a, const Tolerance& tol) {
  const ComplexMatrix& m = a.matrix();
  PartialIsometryCheck out;
  out.residual = linalg::residual(m * m.adjoint() * m, m);
  out.ok = out.residual <= tol.eqTol;
  return out;
}

ProductCriterion product_pi_criterion(const Operator& s, const Operator& t, const Tolerance& tol) {
  const auto cs = is_partial_isometry(s, tol);
  const auto ct = is_partial_isometry(t, tol);
  if (!cs.ok || !ct.ok) {
    throw std::invalid_argument("product_pi_criterion: inputs must be partial isometries");
  }
  const ComplexMatrix& sm = s.matrix();
  const ComplexMatrix& tm = t.matrix();
  if (sm.cols() != tm.rows()) throw DimensionError("product_pi_criterion: size mismatch");
  const ComplexMatrix st = sm * tm;
  ProductCriterion out;
  out.productResidual = linalg::residual(st * st.adjoint() * st, st);
  out.productIsPI = out.productResidual <= tol.eqTol;
  out.commNorm = linalg::spectral_norm(linalg::commutator(sm.adjoint() * sm, tm * tm.adjoint()));
  out.agree = out.productIsPI == (out.commNorm <= tol.eqTol);
  return out;
}

double SemigroupRepReport::worst() const {
  return std::max({multiplicativity, commutators, initialJoin, rangeJoin});
}

SemigroupRepReport semigroup_rep_check(const OperatorFamily& family) {
  if (family.empty()) throw std::invalid_argument("semigroup_rep_check: empty family");
  SemigroupRepReport out;
  std::map<SemigroupElement, Operator> initial;
  std::map<SemigroupElement, Operator> range;
  for (const auto& [s, v] : family) {
    initial.emplace(s, v.adjoint() * v);
    range.emplace(s, v * v.adjoint());
  }
  for (const auto& [s, vs] : family) {
    for (const auto& [t, vt] : family) {
      ++out.pairs;
      const auto sum = family.find(s + t);
      if (sum != family.end()) {
        out.multiplicativity =
            std::max(out.multiplicativity, guarded_residual(vs * vt, sum->second).residual);
      }
      const Operator& is = initial.at(s);
      const Operator& it = initial.at(t);
      const Operator& rs = range.at(s);
      const Operator& rt = range.at(t);
      for (const auto* pair : {&is, &rs}) {
        for (const auto* other : {&it, &rt}) {
          out.commutators = std::max(
              out.commutators, guarded_residual((*pair) * (*other), (*other) * (*pair)).residual);
        }
      }
      const SemigroupElement j = max(s, t);
      out.initialJoin = std::max(out.initialJoin, guarded_residual(is * it, initial.at(j)).residual);
      out.rangeJoin = std::max(out.rangeJoin, guarded_residual(rs * rt, range.at(j)).residual);
    }
  }
  return out;
}

ComplexMatrix random_partial_isometry(int dim, CounterRng& rng) {
  if (dim < 1) throw std::invalid_argument("random_partial_isometry: dim must be positive");
  ComplexMatrix g(dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) g(i, j) = Complex(rng.normal(), rng.normal());
  }
  Eigen::BDCSVD<ComplexMatrix> svd(g, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::VectorXd snapped(dim);
  for (int i = 0; i < dim; ++i) snapped(i) = rng.coin() ? 1.0 : 0.0;
  return svd.matrixU() * snapped.asDiagonal() * svd.matrixV().adjoint();
}

}  // namespace picross
