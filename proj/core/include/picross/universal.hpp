#pragma once

// Symbolic model of the universal algebra generated by a power partial
// isometry v: canonical monomials M(s, m, t) = v*^s v^m v*^m v^t with
// m >= max(s, t), their linear combinations, and the concrete
// representations used to evaluate them.

#include <array>
#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include <Eigen/SparseCore>

#include "picross/ops.hpp"

namespace picross {

enum class Letter { V, VStar };
using Word = std::vector<Letter>;

/// Parses "v", "v*" tokens separated by spaces, e.g. "v* v v". The empty
/// string is the empty word (the unit).
Word parse_word(const std::string& text);
std::string to_string(const Word& w);

struct Monomial {
  int s = 0;
  int m = 0;
  int t = 0;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Throws std::invalid_argument unless m >= max(s, t) >= 0.
void validate(const Monomial& x);

/// Exact product x * y (y acts first) as a single monomial.
Monomial monomial_product(const Monomial& x, const Monomial& y);

class NormalForm {
 public:
  NormalForm() = default;
  static NormalForm unit() { return monomial({0, 0, 0}); }
  static NormalForm monomial(const Monomial& x, Complex c = 1.0);

  const std::map<Monomial, Complex>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Largest index appearing in any term.
  int degree() const;

  void add(const Monomial& x, Complex c);

  friend NormalForm operator+(const NormalForm& x, const NormalForm& y);
  friend NormalForm operator-(const NormalForm& x, const NormalForm& y);
  friend NormalForm operator*(const NormalForm& x, const NormalForm& y);
  friend NormalForm operator*(Complex c, const NormalForm& x);
  friend bool operator==(const NormalForm& x, const NormalForm& y) { return x.terms_ == y.terms_; }

 private:
  std::map<Monomial, Complex> terms_;
};

/// Left fold of the word through exact monomial products. Each step
/// consumes one letter, so the reduction terminates after |w| steps.
NormalForm normalize(const Word& w);
NormalForm nf_multiply(const NormalForm& x, const NormalForm& y);
/// (s, m, t) -> (t, m, s) with conjugated coefficients.
NormalForm nf_adjoint(const NormalForm& x);

/// v^i v*^m v^m (1 - vv*) v*^j.
NormalForm element_f(int i, int j, int m);
/// v*^i v^m v*^m (1 - v*v) v^j.
NormalForm element_g(int i, int j, int m);
/// f^m_{ij} - f^{m+1}_{ij}, the preimage of the matrix unit e^m_{ij}.
NormalForm element_e(int i, int j, int m);

/// Combination of k(i)^* k_c(1_m) k(j) in the backward-shift system, keyed
/// by (i, m, j). Evaluated by the sigma module.
using SigmaCombination = std::map<std::array<int, 3>, Complex>;
/// q_0 = 1 - k(1)^*k(1); q_n = k_c(1_n) - k(1)^* k_c(1_{n-1}) k(1).
SigmaCombination element_q(int n);

/// Finite Laurent polynomial; zero coefficients are dropped.
class LaurentPoly {
 public:
  void add(int degree, Complex c);
  const std::map<int, Complex>& coefficients() const { return coeffs_; }
  Complex coefficient(int degree) const;
  bool is_zero() const { return coeffs_.empty(); }
  /// max over degrees of |a_d - b_d|.
  static double distance(const LaurentPoly& a, const LaurentPoly& b);

 private:
  std::map<int, Complex> coeffs_;
};

/// M(s, m, t) -> z^{t-s}, or z^{s-t} for the star variant.
LaurentPoly symbol(const NormalForm& x, bool star = false);

struct Assignment {
  enum class Kind { T, Tstar, Pn, PnStar, Grid };
  Kind kind = Kind::T;
  int n = 0;     // Pn, PnStar: the index n
  int size = 0;  // T, Tstar, Pn, PnStar: largest line label; Grid: N

  static Assignment toeplitz(int size) { return {Kind::T, 0, size}; }
  static Assignment toeplitz_star(int size) { return {Kind::Tstar, 0, size}; }
  static Assignment pn(int n, int size) { return {Kind::Pn, n, size}; }
  static Assignment pn(int n) { return {Kind::Pn, n, n}; }
  static Assignment pnstar(int n, int size) { return {Kind::PnStar, n, size}; }
  static Assignment pnstar(int n) { return {Kind::PnStar, n, n}; }
  static Assignment grid(int n) { return {Kind::Grid, 0, n}; }
};

using SparseMatrix = Eigen::SparseMatrix<Complex>;

struct SparseImage {
  SparseMatrix matrix;
  Budget budget;
  Budget adjointBudget;
};

/// Evaluates words and normal forms under one assignment. Every generator
/// image is a partial permutation, so monomials are evaluated as index maps
/// and cached. Safe for concurrent use.
class Evaluator {
 public:
  explicit Evaluator(const Assignment& assignment);

  const Assignment& assignment() const { return assignment_; }
  const std::shared_ptr<const Basis>& basis() const { return basis_; }

  SparseImage evaluate_sparse(const NormalForm& x) const;
  SparseImage evaluate_word_sparse(const Word& w) const;
  Operator evaluate(const NormalForm& x) const;
  Operator evaluate_word(const Word& w) const;

  /// Partial-permutation image of one monomial: column -> row or -1.
  struct IndexMap {
    std::vector<int> target;
    Budget budget;
    Budget adjointBudget;
  };
  IndexMap monomial_map(const Monomial& x) const;

 private:
  IndexMap letter(Letter l) const;
  IndexMap unit() const;
  const IndexMap& power(Letter l, int k) const;

  Assignment assignment_;
  std::shared_ptr<const Basis> basis_;
  IndexMap v_;
  IndexMap vStar_;
  IndexMap unit_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<Letter, int>, std::unique_ptr<IndexMap>> powers_;
};

Operator evaluate(const NormalForm& x, const Assignment& a);
Operator evaluate_word(const Word& w, const Assignment& a);

/// Guarded residual between two sparse images on the same basis.
double guarded_residual(const SparseImage& a, const SparseImage& b, const Basis& basis);

/// Coefficient of z^d is the mean of A(k + d, k) over k in the middle third
/// of a line basis, for |d| <= maxDegree. Entries below 1e-14 are dropped.
LaurentPoly band_symbol(const Operator& a, int maxDegree);

struct KernelFlags {
  bool inKerPhiT = false;
  bool inKerPhiTstar = false;
  bool inI = false;
  double normT = 0.0;
  double normTstar = 0.0;
};
/// Guarded norms of the images under T and T* on the line {0..size}.
KernelFlags kernel_flags(const NormalForm& x, int size, const Tolerance& tol = {});

/// [[s, m, t, re, im], ...] in term order.
std::string to_json(const NormalForm& x);
NormalForm normal_form_from_json(const std::string& text);

}  // namespace picross
