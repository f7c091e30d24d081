#include "hecke/linalg/matrix.hpp"

#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

Matrix::Matrix(Field f, int rows, int cols)
    : f_(f), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(Field f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(Field f, int cols, const std::vector<std::vector<Scalar>>& rows) {
  Matrix m(f, static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows_; ++i) {
    if (static_cast<int>(rows[i].size()) != cols) fail(ErrorCode::ShapeMismatch, "ragged rows");
    for (int j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Scalar> Matrix::row(int i) const {
  return std::vector<Scalar>(a_.begin() + static_cast<long>(i) * cols_, a_.begin() + static_cast<long>(i + 1) * cols_);
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) fail(ErrorCode::ShapeMismatch, "matrix product shapes");
  Matrix m(f_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (!b.is_zero()) m.at(i, j) += a * b;
      }
    }
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorCode::ShapeMismatch, "matrix sum shapes");
  Matrix m = *this;
  for (size_t k = 0; k < a_.size(); ++k)
    if (!o.a_[k].is_zero()) m.a_[k] += o.a_[k];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorCode::ShapeMismatch, "matrix difference shapes");
  Matrix m = *this;
  for (size_t k = 0; k < a_.size(); ++k)
    if (!o.a_[k].is_zero()) m.a_[k] -= o.a_[k];
  return m;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix m = *this;
  for (auto& e : m.a_)
    if (!e.is_zero()) e *= s;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(f_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Matrix Matrix::pow(long e) const {
  if (rows_ != cols_) fail(ErrorCode::ShapeMismatch, "power of a non-square matrix");
  if (e < 0) return inverse(*this).pow(-e);
  Matrix acc = identity(f_, rows_), b = *this;
  while (e > 0) {
    if (e & 1) acc = acc * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return acc;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t k = 0; k < a_.size(); ++k)
    if (a_[k] != o.a_[k]) return false;
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& e : a_)
    if (!e.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
  return true;
}

Scalar Matrix::trace() const {
  Scalar s = Scalar::zero(f_);
  for (int i = 0; i < std::min(rows_, cols_); ++i) s += at(i, i);
  return s;
}

Matrix Matrix::select_rows(const std::vector<int>& r) const {
  Matrix m(f_, static_cast<int>(r.size()), cols_);
  for (size_t i = 0; i < r.size(); ++i)
    for (int j = 0; j < cols_; ++j) m.at(static_cast<int>(i), j) = at(r[i], j);
  return m;
}

Matrix Matrix::select_cols(const std::vector<int>& c) const {
  Matrix m(f_, rows_, static_cast<int>(c.size()));
  for (int i = 0; i < rows_; ++i)
    for (size_t j = 0; j < c.size(); ++j) m.at(i, static_cast<int>(j)) = at(i, c[j]);
  return m;
}

Matrix Matrix::stack(const Matrix& o) const {
  if (rows_ == 0) return o;
  if (o.rows_ == 0) return *this;
  if (cols_ != o.cols_) fail(ErrorCode::ShapeMismatch, "stack column counts");
  Matrix m(f_, rows_ + o.rows_, cols_);
  std::copy(a_.begin(), a_.end(), m.a_.begin());
  std::copy(o.a_.begin(), o.a_.end(), m.a_.begin() + static_cast<long>(a_.size()));
  return m;
}

Matrix Matrix::augment(const Matrix& o) const {
  if (rows_ != o.rows_) fail(ErrorCode::ShapeMismatch, "augment row counts");
  Matrix m(f_, rows_, cols_ + o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (int j = 0; j < o.cols_; ++j) m.at(i, cols_ + j) = o.at(i, j);
  }
  return m;
}

std::vector<std::vector<std::string>> Matrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[i].push_back(at(i, j).to_string());
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << "[";
    for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).to_string();
    os << "]\n";
  }
  return os.str();
}

RowEchelon rref(Matrix A) {
  RowEchelon out;
  int rows = A.rows(), cols = A.cols();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int best = -1;
    size_t best_cx = 0;
    for (int i = r; i < rows; ++i) {
      const Scalar& e = A.at(i, c);
      if (e.is_zero()) continue;
      size_t cx = e.complexity();
      if (best < 0 || cx < best_cx) {
        best = i;
        best_cx = cx;
      }
    }
    if (best < 0) continue;
    if (best != r)
      for (int j = 0; j < cols; ++j) std::swap(A.at(r, j), A.at(best, j));
    Scalar inv = A.at(r, c).inv();
    for (int j = c; j < cols; ++j)
      if (!A.at(r, j).is_zero()) A.at(r, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || A.at(i, c).is_zero()) continue;
      Scalar f = A.at(i, c);
      for (int j = c; j < cols; ++j)
        if (!A.at(r, j).is_zero()) A.at(i, j) -= f * A.at(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.R = std::move(A);
  return out;
}

int rank(const Matrix& A) { return rref(A).rank(); }

Matrix right_kernel(const Matrix& A) {
  RowEchelon e = rref(A);
  int cols = A.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (int fcol = 0; fcol < cols; ++fcol) {
    if (is_pivot[fcol]) continue;
    std::vector<Scalar> v(cols, Scalar::zero(A.field()));
    v[fcol] = Scalar::one(A.field());
    for (int k = 0; k < e.rank(); ++k) v[e.pivots[k]] = -e.R.at(k, fcol);
    basis.push_back(std::move(v));
  }
  return Matrix::from_rows(A.field(), cols, basis);
}

Matrix left_kernel(const Matrix& A) { return right_kernel(A.transpose()); }

bool solve_left(const Matrix& A, const Matrix& B, Matrix& X) {
  // X A = B  <=>  A^T X^T = B^T
  if (A.cols() != B.cols()) fail(ErrorCode::ShapeMismatch, "solve_left shapes");
  Matrix aug = A.transpose().augment(B.transpose());
  RowEchelon e = rref(aug);
  int n = A.rows();
  for (int p : e.pivots)
    if (p >= n) return false;
  X = Matrix(A.field(), B.rows(), n);
  for (int k = 0; k < e.rank(); ++k)
    for (int j = 0; j < B.rows(); ++j) X.at(j, e.pivots[k]) = e.R.at(k, n + j);
  return true;
}

Matrix inverse(const Matrix& A) {
  if (A.rows() != A.cols()) fail(ErrorCode::ShapeMismatch, "inverse of a non-square matrix");
  int n = A.rows();
  RowEchelon e = rref(A.augment(Matrix::identity(A.field(), n)));
  if (e.rank() < n || e.pivots[n - 1] >= n) fail(ErrorCode::DivisionByZero, "singular matrix");
  std::vector<int> cols;
  for (int j = n; j < 2 * n; ++j) cols.push_back(j);
  return e.R.select_cols(cols);
}

Scalar determinant(const Matrix& A) {
  if (A.rows() != A.cols()) fail(ErrorCode::ShapeMismatch, "determinant of a non-square matrix");
  Matrix M = A;
  int n = M.rows();
  Scalar det = Scalar::one(A.field());
  for (int c = 0; c < n; ++c) {
    int best = -1;
    size_t best_cx = 0;
    for (int i = c; i < n; ++i) {
      if (M.at(i, c).is_zero()) continue;
      size_t cx = M.at(i, c).complexity();
      if (best < 0 || cx < best_cx) {
        best = i;
        best_cx = cx;
      }
    }
    if (best < 0) return Scalar::zero(A.field());
    if (best != c) {
      for (int j = 0; j < n; ++j) std::swap(M.at(c, j), M.at(best, j));
      det = -det;
    }
    det *= M.at(c, c);
    Scalar inv = M.at(c, c).inv();
    for (int i = c + 1; i < n; ++i) {
      if (M.at(i, c).is_zero()) continue;
      Scalar f = M.at(i, c) * inv;
      for (int j = c; j < n; ++j)
        if (!M.at(c, j).is_zero()) M.at(i, j) -= f * M.at(c, j);
    }
  }
  return det;
}

Matrix row_space(const Matrix& A) {
  RowEchelon e = rref(A);
  std::vector<int> r;
  for (int k = 0; k < e.rank(); ++k) r.push_back(k);
  return e.R.select_rows(r);
}

SparseVec sparse_from_dense(const std::vector<Scalar>& v) {
  SparseVec s;
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.emplace_back(static_cast<int>(i), v[i]);
  return s;
}

std::vector<Scalar> dense_from_sparse(Field f, int dim, const SparseVec& v) {
  std::vector<Scalar> d(dim, Scalar::zero(f));
  for (const auto& [i, c] : v) d[i] = c;
  return d;
}

namespace {

// Laurent monomials are units of the polynomial ring the entries usually live in.
bool pivot_is_unit(const Scalar& c) {
  if (c.field()->kind != FieldKind::Function) return true;
  const RatFunc& f = c.ratfunc();
  return f.is_laurent() && f.num().is_monomial();
}

}  // namespace

Echelon::Echelon(Field f, int dim, bool track) : f_(f), dim_(dim), track_(track), pivot_row_(dim, -1) {}

SparseVec Echelon::reduce(const SparseVec& v, SparseVec* coords) const {
  std::vector<Scalar> buf = dense_from_sparse(f_, dim_, v);
  std::vector<Scalar> cbuf;
  if (coords && track_) cbuf.assign(inserted_ + 1, Scalar::zero(f_));
  for (size_t k = 0; k < rows_.size(); ++k) {
    const Scalar& lead = buf[pivot_cols_[k]];
    if (lead.is_zero()) continue;
    Scalar fct = lead;
    for (const auto& [j, c] : rows_[k].v) buf[j] -= fct * c;
    if (!cbuf.empty())
      for (const auto& [j, c] : rows_[k].coords) cbuf[j] += fct * c;
  }
  if (coords) {
    coords->clear();
    if (!cbuf.empty()) *coords = sparse_from_dense(cbuf);
  }
  return sparse_from_dense(buf);
}

bool Echelon::insert(const SparseVec& v) {
  SparseVec coords;
  SparseVec res = reduce(v, track_ ? &coords : nullptr);
  int idx = inserted_++;
  if (res.empty()) return false;
  size_t best = 0;
  auto score = [](const Scalar& c) { return std::make_pair(pivot_is_unit(c) ? 0 : 1, c.complexity()); };
  auto best_cx = score(res[0].second);
  for (size_t k = 1; k < res.size(); ++k) {
    auto cx = score(res[k].second);
    if (cx < best_cx) {
      best = k;
      best_cx = cx;
    }
  }
  int pc = res[best].first;
  Scalar inv = res[best].second.inv();
  Row row;
  for (auto& [j, c] : res) row.v.emplace_back(j, j == pc ? Scalar::one(f_) : c * inv);
  if (track_) {
    // residue = input_idx - sum coords_i * input_i
    for (auto& [j, c] : coords) row.coords.emplace_back(j, -(c * inv));
    row.coords.emplace_back(idx, inv);
  }
  pivot_row_[pc] = static_cast<int>(rows_.size());
  pivot_cols_.push_back(pc);
  rows_.push_back(std::move(row));
  return true;
}

}  // namespace hecke
