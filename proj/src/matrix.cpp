#include "attralign/matrix.hpp"

#include <cmath>

namespace attralign {

bool lu_factor(Matrix& a, std::vector<int>& piv) {
  const int n = a.n_rows;
  piv.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    int p = k;
    double best = std::fabs(a(k, k));
    for (int i = k + 1; i < n; ++i) {
      const double v = std::fabs(a(i, k));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    if (best < 1e-300) return false;
    piv[static_cast<std::size_t>(k)] = p;
    if (p != k) {
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
    }
    const double inv = 1.0 / a(k, k);
    for (int i = k + 1; i < n; ++i) {
      const double m = a(i, k) * inv;
      a(i, k) = m;
      if (m != 0.0) {
        for (int j = k + 1; j < n; ++j) a(i, j) -= m * a(k, j);
      }
    }
  }
  return true;
}

void lu_solve(const Matrix& lu, const std::vector<int>& piv, Matrix& b) {
  const int n = lu.n_rows;
  const int k_cols = b.n_cols;
  // Apply row permutation.
  for (int k = 0; k < n; ++k) {
    const int p = piv[static_cast<std::size_t>(k)];
    if (p != k) {
      for (int c = 0; c < k_cols; ++c) std::swap(b(k, c), b(p, c));
    }
  }
  // Forward substitution (unit lower triangle).
  for (int i = 1; i < n; ++i) {
    for (int k = 0; k < i; ++k) {
      const double m = lu(i, k);
      if (m != 0.0) {
        for (int c = 0; c < k_cols; ++c) b(i, c) -= m * b(k, c);
      }
    }
  }
  // Back substitution.
  for (int i = n - 1; i >= 0; --i) {
    for (int k = i + 1; k < n; ++k) {
      const double m = lu(i, k);
      if (m != 0.0) {
        for (int c = 0; c < k_cols; ++c) b(i, c) -= m * b(k, c);
      }
    }
    const double inv = 1.0 / lu(i, i);
    for (int c = 0; c < k_cols; ++c) b(i, c) *= inv;
  }
}

}  // namespace attralign
