#pragma once

// Independent reference constructions used by the unit tests. They are
// written directly from index rules with plain loops so they share no code
// with the library.

#include <algorithm>
#include <set>
#include <vector>

#include "picross/linalg.hpp"

namespace oracle {

using picross::Complex;
using picross::ComplexMatrix;

inline ComplexMatrix naive_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix c(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      Complex sum = 0.0;
      for (Eigen::Index k = 0; k < a.cols(); ++k) sum += a(i, k) * b(k, j);
      c(i, j) = sum;
    }
  }
  return c;
}

// e_j -> e_{j+1} on C^{k+1}.
inline ComplexMatrix shift(int k) {
  ComplexMatrix m = ComplexMatrix::Zero(k + 1, k + 1);
  for (int j = 0; j < k; ++j) m(j + 1, j) = 1.0;
  return m;
}

inline ComplexMatrix unit(Eigen::Index n, Eigen::Index i, Eigen::Index j) {
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  m(i, j) = 1.0;
  return m;
}

inline ComplexMatrix mpow(const ComplexMatrix& a, int p) {
  ComplexMatrix out = ComplexMatrix::Identity(a.rows(), a.cols());
  for (int i = 0; i < p; ++i) out = naive_product(out, a);
  return out;
}

inline double max_abs(const ComplexMatrix& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

// All a*g1 + b*g2 (integers, a, b in [0, bound]) not exceeding cutoff.
inline std::vector<long long> int_cone(long long g1, long long g2, long long cutoff, int bound) {
  std::set<long long> out;
  for (int a = 0; a <= bound; ++a) {
    for (int b = 0; b <= bound; ++b) {
      const long long v = a * g1 + b * g2;
      if (v <= cutoff) out.insert(v);
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace oracle
