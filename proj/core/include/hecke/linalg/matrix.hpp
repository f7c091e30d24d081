#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hecke/exact/scalar.hpp"

namespace hecke {

/// Dense matrix over one Scalar field. Modules act on row vectors: v -> v * A.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, int rows, int cols);
  static Matrix identity(Field f, int n);
  static Matrix from_rows(Field f, int cols, const std::vector<std::vector<Scalar>>& rows);

  Field field() const { return f_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
  std::vector<Scalar> row(int i) const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  Matrix transpose() const;
  Matrix pow(long e) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_zero() const;
  bool is_identity() const;
  Scalar trace() const;

  /// Rows listed in `r`, all columns.
  Matrix select_rows(const std::vector<int>& r) const;
  Matrix select_cols(const std::vector<int>& c) const;
  /// Stacks the rows of `o` below this matrix.
  Matrix stack(const Matrix& o) const;
  /// Places `o` to the right of this matrix.
  Matrix augment(const Matrix& o) const;
  /// Applies `fn` entrywise, producing a matrix over `g`.
  template <class Fn>
  Matrix map(Field g, Fn fn) const {
    Matrix m(g, rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = fn(a_[k]);
    return m;
  }

  std::vector<std::vector<std::string>> to_strings() const;
  std::string to_string() const;

 private:
  Field f_ = nullptr;
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

/// Reduced row echelon form; pivots[k] is the pivot column of row k.
struct RowEchelon {
  Matrix R;
  std::vector<int> pivots;
  int rank() const { return static_cast<int>(pivots.size()); }
};

/// Gauss-Jordan elimination. Pivot rows are chosen by smallest entry complexity.
RowEchelon rref(Matrix A);
int rank(const Matrix& A);
/// Basis (as rows) of { x : A x^T = 0 }.
Matrix right_kernel(const Matrix& A);
/// Basis (as rows) of { v : v A = 0 }.
Matrix left_kernel(const Matrix& A);
/// Solves X * A = B for X; returns false when no solution exists.
bool solve_left(const Matrix& A, const Matrix& B, Matrix& X);
Matrix inverse(const Matrix& A);
Scalar determinant(const Matrix& A);
/// Rows of A spanning its row space, in echelon form.
Matrix row_space(const Matrix& A);

using SparseVec = std::vector<std::pair<int, Scalar>>;

SparseVec sparse_from_dense(const std::vector<Scalar>& v);
std::vector<Scalar> dense_from_sparse(Field f, int dim, const SparseVec& v);

/// Incremental row echelon of sparse vectors in a space of fixed dimension.
/// With tracking enabled, every stored row remembers its expression in the inserted vectors.
class Echelon {
 public:
  Echelon(Field f, int dim, bool track = false);

  Field field() const { return f_; }
  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  /// Number of vectors offered to insert so far (the tracking index space).
  int inserted() const { return inserted_; }

  /// Reduces v; stores the residue if nonzero. Returns true when v was independent.
  bool insert(const SparseVec& v);
  /// Residue of v modulo the span. With tracking, coords receives c with v = residue + sum c_i * input_i.
  SparseVec reduce(const SparseVec& v, SparseVec* coords = nullptr) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  const std::vector<int>& pivots() const { return pivot_cols_; }

 private:
  struct Row {
    SparseVec v;       // pivot entry equals one
    SparseVec coords;  // only with tracking
  };
  Field f_;
  int dim_;
  bool track_;
  int inserted_ = 0;
  std::vector<Row> rows_;
  std::vector<int> pivot_cols_;
  std::vector<int> pivot_row_;  // column -> row index or -1
};

}  // namespace hecke
