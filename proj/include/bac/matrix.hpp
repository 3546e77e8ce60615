#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "bac/field.hpp"

namespace bac {

// Dense matrix over an exact field.  Zero rows or columns are legal; empty
// matrices stand for maps to or from the zero object.
class Matrix {
 public:
  Matrix(const FieldDesc& f, std::size_t rows, std::size_t cols)
      : f_(f), rows_(rows), cols_(cols), e_(rows * cols, Scalar::zero(f)) {}

  static Matrix zero(const FieldDesc& f, std::size_t rows, std::size_t cols) {
    return Matrix(f, rows, cols);
  }

  static Matrix identity(const FieldDesc& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
  }

  static Matrix from_ints(const FieldDesc& f, std::initializer_list<std::initializer_list<long long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(f, r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw ShapeError("ragged matrix literal");
      std::size_t j = 0;
      for (long long v : row) m.at(i, j++) = Scalar::from_int(f, v);
      ++i;
    }
    return m;
  }

  static Matrix from_strings(std::initializer_list<std::initializer_list<const char*>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(FieldDesc::rationals(), r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw ShapeError("ragged matrix literal");
      std::size_t j = 0;
      for (const char* v : row) m.at(i, j++) = Scalar::parse_rational(v);
      ++i;
    }
    return m;
  }

  const FieldDesc& field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  bool is_zero() const {
    for (const auto& s : e_)
      if (!s.is_zero()) return false;
    return true;
  }

  bool is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.f_ == b.f_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same_field(a.f_, b.f_);
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("add: shape mismatch");
    Matrix m = a;
    for (std::size_t i = 0; i < m.e_.size(); ++i) m.e_[i] += b.e_[i];
    return m;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

  Matrix operator-() const {
    Matrix m = *this;
    for (auto& s : m.e_) s = -s;
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    check_same_field(a.f_, b.f_);
    if (a.cols_ != b.rows_) throw ShapeError("mul: inner dimension mismatch");
    Matrix m(a.f_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Scalar& bkj = b.at(k, j);
          if (!bkj.is_zero()) m.at(i, j) += aik * bkj;
        }
      }
    return m;
  }

  friend Matrix operator*(const Scalar& s, const Matrix& a) {
    check_same_field(s.field(), a.f_);
    Matrix m = a;
    for (auto& x : m.e_) x *= s;
    return m;
  }

  Matrix transpose() const {
    Matrix m(f_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  Matrix column(std::size_t j) const {
    Matrix m(f_, rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) m.at(i, 0) = at(i, j);
    return m;
  }

  Matrix columns(const std::vector<std::size_t>& idx) const {
    Matrix m(f_, rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j)
      for (std::size_t i = 0; i < rows_; ++i) m.at(i, j) = at(i, idx[j]);
    return m;
  }

  std::string str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      os << (i ? "; " : "");
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j).str();
    }
    os << "]";
    return os.str();
  }

 private:
  FieldDesc f_;
  std::size_t rows_, cols_;
  std::vector<Scalar> e_;
};

inline Matrix hstack(const std::vector<Matrix>& parts, const FieldDesc& f, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& p : parts) {
    check_same_field(p.field(), f);
    if (p.rows() != rows) throw ShapeError("hstack: row count mismatch");
    cols += p.cols();
  }
  Matrix m(f, rows, cols);
  std::size_t off = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < p.cols(); ++j) m.at(i, off + j) = p.at(i, j);
    off += p.cols();
  }
  return m;
}

inline Matrix vstack(const std::vector<Matrix>& parts, const FieldDesc& f, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& p : parts) {
    check_same_field(p.field(), f);
    if (p.cols() != cols) throw ShapeError("vstack: column count mismatch");
    rows += p.rows();
  }
  Matrix m(f, rows, cols);
  std::size_t off = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.rows(); ++i)
      for (std::size_t j = 0; j < cols; ++j) m.at(off + i, j) = p.at(i, j);
    off += p.rows();
  }
  return m;
}

// Assembles a block matrix from (block_row, block_col, matrix) entries.
// Unlisted blocks are zero.  Block shapes must match the given partitions.
inline Matrix assemble_blocks(const FieldDesc& f, const std::vector<std::size_t>& row_dims,
                              const std::vector<std::size_t>& col_dims,
                              const std::vector<std::tuple<std::size_t, std::size_t, Matrix>>& blocks) {
  std::vector<std::size_t> roff(row_dims.size() + 1, 0), coff(col_dims.size() + 1, 0);
  for (std::size_t i = 0; i < row_dims.size(); ++i) roff[i + 1] = roff[i] + row_dims[i];
  for (std::size_t j = 0; j < col_dims.size(); ++j) coff[j + 1] = coff[j] + col_dims[j];
  Matrix m(f, roff.back(), coff.back());
  for (const auto& [bi, bj, blk] : blocks) {
    if (bi >= row_dims.size() || bj >= col_dims.size()) throw ShapeError("block index out of range");
    if (blk.rows() != row_dims[bi] || blk.cols() != col_dims[bj]) throw ShapeError("block shape mismatch");
    check_same_field(blk.field(), f);
    for (std::size_t i = 0; i < blk.rows(); ++i)
      for (std::size_t j = 0; j < blk.cols(); ++j) m.at(roff[bi] + i, coff[bj] + j) = blk.at(i, j);
  }
  return m;
}

inline Matrix diag_blocks(const FieldDesc& f, const std::vector<Matrix>& parts) {
  std::vector<std::size_t> rd, cd;
  std::vector<std::tuple<std::size_t, std::size_t, Matrix>> blocks;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    rd.push_back(parts[i].rows());
    cd.push_back(parts[i].cols());
    blocks.emplace_back(i, i, parts[i]);
  }
  return assemble_blocks(f, rd, cd, blocks);
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  check_same_field(a.field(), b.field());
  Matrix m(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          m.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
    }
  return m;
}

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // strictly increasing pivot column indices
  Scalar row_ops_det;               // product of the determinants of the applied row operations
};

// Unique reduced row echelon form via exact Gauss-Jordan elimination.
// For square m with full rank, det(m) = row_ops_det^-1 (all reduced pivots are 1).
inline RrefResult rref(const Matrix& m) {
  Matrix r = m;
  Scalar ops = Scalar::one(m.field());
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    std::size_t sel = row;
    while (sel < r.rows() && r.at(sel, col).is_zero()) ++sel;
    if (sel == r.rows()) continue;
    if (sel != row) {
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r.at(sel, j), r.at(row, j));
      ops = -ops;
    }
    Scalar inv = r.at(row, col).inverse();
    if (!inv.is_one()) {
      for (std::size_t j = col; j < r.cols(); ++j) r.at(row, j) *= inv;
      ops *= inv;
    }
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == row || r.at(i, col).is_zero()) continue;
      Scalar factor = r.at(i, col);
      for (std::size_t j = col; j < r.cols(); ++j) r.at(i, j) -= factor * r.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return RrefResult{std::move(r), std::move(pivots), std::move(ops)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

inline bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

inline Scalar det(const Matrix& m) {
  if (!m.is_square()) throw ShapeError("det: matrix not square");
  if (m.rows() == 0) return Scalar::one(m.field());
  RrefResult r = rref(m);
  if (r.pivots.size() < m.rows()) return Scalar::zero(m.field());
  return r.row_ops_det.inverse();
}

// One solution X of a X = b, free variables set to 0 after rref; nullopt when
// the system is inconsistent.
inline std::optional<Matrix> solve_any(const Matrix& a, const Matrix& b) {
  check_same_field(a.field(), b.field());
  if (a.rows() != b.rows()) throw ShapeError("solve_any: row count mismatch");
  RrefResult r = rref(hstack({a, b}, a.field(), a.rows()));
  for (std::size_t p : r.pivots)
    if (p >= a.cols()) return std::nullopt;
  Matrix x(a.field(), a.cols(), b.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x.at(r.pivots[i], j) = r.reduced.at(i, a.cols() + j);
  return x;
}

// Pivot columns of m, with their original entries: a deterministic basis of im(m).
inline Matrix column_space_basis(const Matrix& m) { return m.columns(rref(m).pivots); }

// Standard basis of ker(m) read off the rref: one column per free variable.
inline Matrix kernel_basis(const Matrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  Matrix k(m.field(), m.cols(), m.cols() - r.pivots.size());
  std::size_t col = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    k.at(free, col) = Scalar::one(m.field());
    for (std::size_t i = 0; i < r.pivots.size(); ++i) k.at(r.pivots[i], col) = -r.reduced.at(i, free);
    ++col;
  }
  return k;
}

inline Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw ShapeError("inverse: matrix not square");
  auto x = solve_any(m, Matrix::identity(m.field(), m.rows()));
  if (!x) throw NotInvertible("matrix is singular");
  return *x;
}

}  // namespace bac
