#include "picross/universal.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace picross {

Word parse_word(const std::string& text) {
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "v") {
      w.push_back(Letter::V);
    } else if (tok == "v*") {
      w.push_back(Letter::VStar);
    } else {
      throw std::invalid_argument("unknown letter '" + tok + "'");
    }
  }
  return w;
}

std::string to_string(const Word& w) {
  std::string out;
  for (const auto l : w) {
    if (!out.empty()) out += ' ';
    out += l == Letter::V ? "v" : "v*";
  }
  return out;
}

void validate(const Monomial& x) {
  if (x.s < 0 || x.t < 0 || x.m < std::max(x.s, x.t)) {
    throw std::invalid_argument("monomial (" + std::to_string(x.s) + "," + std::to_string(x.m) + "," +
                                std::to_string(x.t) + ") needs m >= max(s, t) >= 0");
  }
}

// M(s, m, t) acts on the standard model as a partial shift by t - s whose
// domain is cut out by m. Composing two such shifts gives another one, and
// the constants below read off its parameters.
Monomial monomial_product(const Monomial& x, const Monomial& y) {
  const int lower = std::max(y.m - y.t, x.m - x.t - y.t + y.s);
  const int t = y.t + std::max(0, x.t - y.s);
  const int delta = (x.t - x.s) + (y.t - y.s);
  return {t - delta, lower + t, t};
}

NormalForm NormalForm::monomial(const Monomial& x, Complex c) {
  validate(x);
  NormalForm out;
  out.add(x, c);
  return out;
}

int NormalForm::degree() const {
  int d = 0;
  for (const auto& [x, c] : terms_) d = std::max(d, x.m);
  return d;
}

void NormalForm::add(const Monomial& x, Complex c) {
  if (c == Complex(0.0)) return;
  auto [it, inserted] = terms_.emplace(x, c);
  if (inserted) return;
  it->second += c;
  if (it->second == Complex(0.0)) terms_.erase(it);
}

NormalForm operator+(const NormalForm& x, const NormalForm& y) {
  NormalForm out = x;
  for (const auto& [m, c] : y.terms_) out.add(m, c);
  return out;
}

NormalForm operator-(const NormalForm& x, const NormalForm& y) {
  NormalForm out = x;
  for (const auto& [m, c] : y.terms_) out.add(m, -c);
  return out;
}

NormalForm operator*(const NormalForm& x, const NormalForm& y) {
  NormalForm out;
  for (const auto& [a, ca] : x.terms_) {
    for (const auto& [b, cb] : y.terms_) out.add(monomial_product(a, b), ca * cb);
  }
  return out;
}

NormalForm operator*(Complex c, const NormalForm& x) {
  NormalForm out;
  for (const auto& [m, cm] : x.terms_) out.add(m, c * cm);
  return out;
}

namespace {

const Monomial kV{0, 1, 1};
const Monomial kVStar{1, 1, 0};

NormalForm letter_form(Letter l) { return NormalForm::monomial(l == Letter::V ? kV : kVStar); }

NormalForm repeat(Letter l, int k) {
  NormalForm out = NormalForm::unit();
  for (int i = 0; i < k; ++i) out = out * letter_form(l);
  return out;
}

}  // namespace

NormalForm normalize(const Word& w) {
  Monomial acc{0, 0, 0};
  for (const auto l : w) acc = monomial_product(acc, l == Letter::V ? kV : kVStar);
  return NormalForm::monomial(acc);
}

NormalForm nf_multiply(const NormalForm& x, const NormalForm& y) { return x * y; }

NormalForm nf_adjoint(const NormalForm& x) {
  NormalForm out;
  for (const auto& [m, c] : x.terms()) out.add({m.t, m.m, m.s}, std::conj(c));
  return out;
}

NormalForm element_f(int i, int j, int m) {
  if (i < 0 || j < 0 || m < 0) throw std::invalid_argument("element_f: indices must be natural");
  const NormalForm range = NormalForm::unit() - letter_form(Letter::V) * letter_form(Letter::VStar);
  return repeat(Letter::V, i) * repeat(Letter::VStar, m) * repeat(Letter::V, m) * range *
         repeat(Letter::VStar, j);
}

NormalForm element_g(int i, int j, int m) {
  if (i < 0 || j < 0 || m < 0) throw std::invalid_argument("element_g: indices must be natural");
  const NormalForm initial = NormalForm::unit() - letter_form(Letter::VStar) * letter_form(Letter::V);
  return repeat(Letter::VStar, i) * repeat(Letter::V, m) * repeat(Letter::VStar, m) * initial *
         repeat(Letter::V, j);
}

NormalForm element_e(int i, int j, int m) {
  if (i > m || j > m) throw std::invalid_argument("element_e: needs i, j <= m");
  return element_f(i, j, m) - element_f(i, j, m + 1);
}

SigmaCombination element_q(int n) {
  if (n < 0) throw std::invalid_argument("element_q: n must be natural");
  return {{{0, n, 0}, 1.0}, {{1, std::max(n - 1, 0), 1}, -1.0}};
}

void LaurentPoly::add(int degree, Complex c) {
  auto& slot = coeffs_[degree];
  slot += c;
  if (slot == Complex(0.0)) coeffs_.erase(degree);
}

Complex LaurentPoly::coefficient(int degree) const {
  const auto it = coeffs_.find(degree);
  return it == coeffs_.end() ? Complex(0.0) : it->second;
}

double LaurentPoly::distance(const LaurentPoly& a, const LaurentPoly& b) {
  double d = 0.0;
  for (const auto& [k, c] : a.coeffs_) d = std::max(d, std::abs(c - b.coefficient(k)));
  for (const auto& [k, c] : b.coeffs_) d = std::max(d, std::abs(c - a.coefficient(k)));
  return d;
}

LaurentPoly symbol(const NormalForm& x, bool star) {
  LaurentPoly out;
  for (const auto& [m, c] : x.terms()) out.add(star ? m.s - m.t : m.t - m.s, c);
  return out;
}

namespace {

using IndexMap = Evaluator::IndexMap;

IndexMap compose(const IndexMap& first, const IndexMap& second) {
  IndexMap out;
  out.target.resize(first.target.size());
  for (std::size_t c = 0; c < first.target.size(); ++c) {
    const int mid = first.target[c];
    out.target[c] = mid < 0 ? -1 : second.target[static_cast<std::size_t>(mid)];
  }
  out.budget = first.budget.then(second.budget);
  out.adjointBudget = second.adjointBudget.then(first.adjointBudget);
  return out;
}

IndexMap inverse(const IndexMap& a) {
  IndexMap out;
  out.target.assign(a.target.size(), -1);
  for (std::size_t c = 0; c < a.target.size(); ++c) {
    if (a.target[c] >= 0) out.target[static_cast<std::size_t>(a.target[c])] = static_cast<int>(c);
  }
  out.budget = a.adjointBudget;
  out.adjointBudget = a.budget;
  return out;
}

std::shared_ptr<const Basis> line_upto(int size) {
  std::vector<SemigroupElement> labels;
  for (int r = 0; r <= size; ++r) labels.emplace_back(r);
  return Basis::line(std::move(labels), size);
}

}  // namespace

Evaluator::Evaluator(const Assignment& assignment) : assignment_(assignment) {
  const int size = assignment.size;
  const bool finite = assignment.kind == Assignment::Kind::Pn || assignment.kind == Assignment::Kind::PnStar;
  if (size < (finite ? 0 : 1)) throw std::invalid_argument("assignment size must be positive");
  if (finite && (assignment.n < 0 || assignment.n > size)) {
    throw std::invalid_argument("assignment needs 0 <= n <= size");
  }
  if (assignment.kind == Assignment::Kind::Grid) {
    basis_ = Basis::grid(size);
  } else {
    basis_ = line_upto(size);
  }
  const auto dim = static_cast<std::size_t>(basis_->size());
  IndexMap forward;
  forward.target.assign(dim, -1);
  unit_.target.resize(dim);
  for (std::size_t c = 0; c < dim; ++c) unit_.target[c] = static_cast<int>(c);

  switch (assignment.kind) {
    case Assignment::Kind::T:
    case Assignment::Kind::Tstar:
      for (int r = 0; r < size; ++r) forward.target[static_cast<std::size_t>(r)] = r + 1;
      forward.budget = Budget::shift(1);
      forward.adjointBudget = Budget::shift(-1);
      break;
    case Assignment::Kind::Pn:
    case Assignment::Kind::PnStar:
      for (int r = 0; r < assignment.n; ++r) forward.target[static_cast<std::size_t>(r)] = r + 1;
      for (int r = assignment.n + 1; r <= size; ++r) unit_.target[static_cast<std::size_t>(r)] = -1;
      break;
    case Assignment::Kind::Grid:
      for (int k = 0; k < size; ++k) {
        for (int l = 1; l <= size; ++l) {
          forward.target[static_cast<std::size_t>(*basis_->index_of(GridIndex{k, l}))] =
              static_cast<int>(*basis_->index_of(GridIndex{k + 1, l - 1}));
        }
      }
      forward.budget = Budget::shift(1, -1);
      forward.adjointBudget = Budget::shift(-1, 1);
      break;
  }
  const bool swapped =
      assignment.kind == Assignment::Kind::Tstar || assignment.kind == Assignment::Kind::PnStar;
  v_ = swapped ? inverse(forward) : forward;
  vStar_ = swapped ? forward : inverse(forward);
}

IndexMap Evaluator::letter(Letter l) const { return l == Letter::V ? v_ : vStar_; }

IndexMap Evaluator::unit() const { return unit_; }

const IndexMap& Evaluator::power(Letter l, int k) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto& slot = powers_[{l, k}];
  if (!slot) {
    IndexMap p = unit_;
    const IndexMap& step = l == Letter::V ? v_ : vStar_;
    for (int i = 0; i < k; ++i) p = compose(p, step);
    slot = std::make_unique<IndexMap>(std::move(p));
  }
  return *slot;
}

IndexMap Evaluator::monomial_map(const Monomial& x) const {
  validate(x);
  IndexMap out = power(Letter::V, x.t);
  out = compose(out, power(Letter::VStar, x.m));
  out = compose(out, power(Letter::V, x.m));
  return compose(out, power(Letter::VStar, x.s));
}

namespace {

SparseImage assemble(const std::vector<std::pair<IndexMap, Complex>>& parts, Eigen::Index dim) {
  SparseImage out;
  std::vector<Eigen::Triplet<Complex>> triplets;
  for (const auto& [map, c] : parts) {
    for (std::size_t col = 0; col < map.target.size(); ++col) {
      if (map.target[col] >= 0) {
        triplets.emplace_back(map.target[col], static_cast<int>(col), c);
      }
    }
    out.budget = out.budget.join(map.budget);
    out.adjointBudget = out.adjointBudget.join(map.adjointBudget);
  }
  out.matrix.resize(dim, dim);
  out.matrix.setFromTriplets(triplets.begin(), triplets.end());
  out.matrix.prune([](Eigen::Index, Eigen::Index, const Complex& v) { return v != Complex(0.0); });
  return out;
}

Operator to_operator(const SparseImage& img, const std::shared_ptr<const Basis>& basis) {
  return Operator(ComplexMatrix(img.matrix), basis, img.budget, img.adjointBudget);
}

}  // namespace

SparseImage Evaluator::evaluate_sparse(const NormalForm& x) const {
  std::vector<std::pair<IndexMap, Complex>> parts;
  for (const auto& [m, c] : x.terms()) parts.emplace_back(monomial_map(m), c);
  return assemble(parts, basis_->size());
}

SparseImage Evaluator::evaluate_word_sparse(const Word& w) const {
  IndexMap acc = unit_;
  for (auto it = w.rbegin(); it != w.rend(); ++it) acc = compose(acc, letter(*it));
  return assemble({{acc, 1.0}}, basis_->size());
}

Operator Evaluator::evaluate(const NormalForm& x) const { return to_operator(evaluate_sparse(x), basis_); }

Operator Evaluator::evaluate_word(const Word& w) const {
  return to_operator(evaluate_word_sparse(w), basis_);
}

Operator evaluate(const NormalForm& x, const Assignment& a) { return Evaluator(a).evaluate(x); }

Operator evaluate_word(const Word& w, const Assignment& a) { return Evaluator(a).evaluate_word(w); }

double guarded_residual(const SparseImage& a, const SparseImage& b, const Basis& basis) {
  const auto cols = basis.guard(a.budget.join(b.budget));
  const SparseMatrix diff = a.matrix - b.matrix;
  std::vector<Eigen::Index> dirty;
  for (const auto c : cols) {
    for (SparseMatrix::InnerIterator it(diff, c); it; ++it) {
      if (it.value() != Complex(0.0)) {
        dirty.push_back(c);
        break;
      }
    }
  }
  if (dirty.empty()) return 0.0;
  ComplexMatrix block = ComplexMatrix::Zero(diff.rows(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) {
    for (SparseMatrix::InnerIterator it(diff, cols[k]); it; ++it) {
      block(it.row(), static_cast<Eigen::Index>(k)) = it.value();
    }
  }
  return linalg::spectral_norm(block);
}

LaurentPoly band_symbol(const Operator& a, int maxDegree) {
  const auto n = a.dim();
  const Eigen::Index lo = n / 3;
  const Eigen::Index hi = 2 * n / 3;
  LaurentPoly out;
  for (int d = -maxDegree; d <= maxDegree; ++d) {
    Complex sum = 0.0;
    int count = 0;
    for (Eigen::Index k = lo; k < hi; ++k) {
      const Eigen::Index row = k + d;
      if (row < 0 || row >= n) continue;
      sum += a.matrix()(row, k);
      ++count;
    }
    if (count == 0) continue;
    const Complex mean = sum / static_cast<double>(count);
    if (std::abs(mean) >= 1e-14) out.add(d, mean);
  }
  return out;
}

KernelFlags kernel_flags(const NormalForm& x, int size, const Tolerance& tol) {
  KernelFlags out;
  const SparseImage zero;
  for (const bool star : {false, true}) {
    const Evaluator ev(star ? Assignment::toeplitz_star(size) : Assignment::toeplitz(size));
    const SparseImage img = ev.evaluate_sparse(x);
    SparseImage none = zero;
    none.matrix.resize(img.matrix.rows(), img.matrix.cols());
    const auto cols = ev.basis()->guard(img.budget);
    if (cols.empty()) throw std::out_of_range("kernel_flags: truncation too small for the budget");
    const double norm = guarded_residual(img, none, *ev.basis());
    (star ? out.normTstar : out.normT) = norm;
  }
  out.inKerPhiT = out.normT <= tol.eqTol;
  out.inKerPhiTstar = out.normTstar <= tol.eqTol;
  out.inI = out.inKerPhiT && out.inKerPhiTstar;
  return out;
}

std::string to_json(const NormalForm& x) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [m, c] : x.terms()) arr.push_back({m.s, m.m, m.t, c.real(), c.imag()});
  return arr.dump();
}

NormalForm normal_form_from_json(const std::string& text) {
  const auto arr = nlohmann::json::parse(text);
  if (!arr.is_array()) throw std::invalid_argument("normal form JSON must be an array");
  NormalForm out;
  for (const auto& term : arr) {
    if (!term.is_array() || term.size() != 5) {
      throw std::invalid_argument("normal form terms must be [s, m, t, re, im]");
    }
    const Monomial x{term[0].get<int>(), term[1].get<int>(), term[2].get<int>()};
    validate(x);
    out.add(x, {term[3].get<double>(), term[4].get<double>()});
  }
  return out;
}

}  // namespace picross
