#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace attralign {

// Dense row-major matrix of doubles.
struct Matrix {
  int n_rows = 0;
  int n_cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0)
      : n_rows(rows),
        n_cols(cols),
        data(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {}

  double& operator()(int i, int j) {
    return data[static_cast<std::size_t>(i) * n_cols + j];
  }
  double operator()(int i, int j) const {
    return data[static_cast<std::size_t>(i) * n_cols + j];
  }

  int rows() const { return n_rows; }
  int cols() const { return n_cols; }
};

// N x p node features; row i belongs to node i.
using AttributeMatrix = Matrix;

// rows x K class-probability (or one-hot indicator) matrix.
using LabelDistribution = Matrix;

// Row-major sparse matrix; each row holds (column, value) pairs sorted by
// column index.
struct SparseMatrix {
  int n_rows = 0;
  int n_cols = 0;
  std::vector<std::vector<std::pair<int, double>>> entries;

  SparseMatrix() = default;
  SparseMatrix(int rows, int cols)
      : n_rows(rows), n_cols(cols), entries(static_cast<std::size_t>(rows)) {}

  const std::vector<std::pair<int, double>>& row(int i) const {
    return entries[static_cast<std::size_t>(i)];
  }
};

// In-place LU factorization with partial pivoting. Returns false when a pivot
// is numerically zero (singular matrix).
bool lu_factor(Matrix& a, std::vector<int>& piv);

// Solves LU x = b for each column of b in place, using a factorization from
// lu_factor.
void lu_solve(const Matrix& lu, const std::vector<int>& piv, Matrix& b);

}  // namespace attralign
