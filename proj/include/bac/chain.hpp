#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "bac/matrix.hpp"

namespace bac {

// Graded object supported on [0, k]; trailing zero dimensions are permitted.
struct GradedObject {
  FieldDesc field;
  std::vector<std::size_t> dims;

  GradedObject(FieldDesc f, std::vector<std::size_t> d) : field(f), dims(std::move(d)) {
    if (dims.empty()) throw ShapeError("graded object needs at least degree 0");
  }

  std::size_t top_degree() const { return dims.size() - 1; }
  std::size_t dim(std::size_t n) const { return n < dims.size() ? dims[n] : 0; }
  bool operator==(const GradedObject&) const = default;
};

// Chain complex on [0, k] with differentials d_1 .. d_k, d_n : P_n -> P_{n-1}.
// Construction checks shapes and d_{n-1} d_n = 0.
class ChainComplex {
 public:
  ChainComplex(GradedObject graded, std::vector<Matrix> diffs)
      : graded_(std::move(graded)), diffs_(std::move(diffs)) {
    if (diffs_.size() != graded_.top_degree())
      throw ShapeError("complex needs exactly one differential per positive degree");
    for (std::size_t n = 1; n <= diffs_.size(); ++n) {
      const Matrix& d = diff(n);
      check_same_field(d.field(), graded_.field);
      if (d.rows() != graded_.dims[n - 1] || d.cols() != graded_.dims[n])
        throw ShapeError("differential shape does not match dims");
    }
    for (std::size_t n = 2; n <= diffs_.size(); ++n)
      if (!(diff(n - 1) * diff(n)).is_zero()) throw Error("d.d != 0");
  }

  const GradedObject& graded() const { return graded_; }
  const FieldDesc& field() const { return graded_.field; }
  std::size_t length() const { return graded_.top_degree(); }
  std::size_t dim(std::size_t n) const { return graded_.dim(n); }

  // d_n for 1 <= n <= length()
  const Matrix& diff(std::size_t n) const { return diffs_[n - 1]; }
  const std::vector<Matrix>& diffs() const { return diffs_; }

  bool operator==(const ChainComplex&) const = default;

 private:
  GradedObject graded_;
  std::vector<Matrix> diffs_;
};

// Exactness at every degree: dim ker d_n = rank d_{n+1} for 0 <= n <= k,
// with d_0 the map to the zero object.  Over a field this is the rank
// condition m_n = rank d_n + rank d_{n+1}.
inline bool is_acyclic(const ChainComplex& c) {
  std::size_t k = c.length();
  std::vector<std::size_t> r(k + 2, 0);
  for (std::size_t n = 1; n <= k; ++n) r[n] = rank(c.diff(n));
  for (std::size_t n = 0; n <= k; ++n)
    if (c.dim(n) != r[n] + r[n + 1]) return false;
  return true;
}

// Image bases and sections witnessing the factorisations
// P_{n+1} ->> J_n >-> P_n of an acyclic complex.
struct Factorization {
  std::vector<Matrix> image_basis;  // J_0 .. J_{k-1}; columns a basis of im d_{n+1}
  std::vector<Matrix> section;      // s_1 .. s_k; d_{n+1} s_{n+1} = J_n
};

// Deterministic factorisation: pivot-column image bases, sections with free
// variables zeroed.
inline Factorization factorize(const ChainComplex& c) {
  if (!is_acyclic(c)) throw NotAcyclic("factorize: complex is not acyclic");
  Factorization f;
  for (std::size_t n = 1; n <= c.length(); ++n) {
    Matrix j = column_space_basis(c.diff(n));
    auto s = solve_any(c.diff(n), j);
    if (!s) throw Error("factorize: section solve failed");
    f.image_basis.push_back(std::move(j));
    f.section.push_back(std::move(*s));
  }
  return f;
}

// Shift away from degree 0: dims gain `by` leading zeros, differentials keep
// their signs.
inline ChainComplex shift(const ChainComplex& c, std::size_t by) {
  if (by == 0) return c;
  std::vector<std::size_t> dims(by, 0);
  dims.insert(dims.end(), c.graded().dims.begin(), c.graded().dims.end());
  std::vector<Matrix> diffs;
  for (std::size_t n = 1; n < by; ++n) diffs.push_back(Matrix::zero(c.field(), 0, 0));
  diffs.push_back(Matrix::zero(c.field(), 0, c.dim(0)));
  diffs.insert(diffs.end(), c.diffs().begin(), c.diffs().end());
  return ChainComplex(GradedObject(c.field(), std::move(dims)), std::move(diffs));
}

// Degreewise sum with block-diagonal differentials, order (a, b); shorter
// support is padded with zeros.
inline ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b) {
  check_same_field(a.field(), b.field());
  std::size_t k = std::max(a.length(), b.length());
  std::vector<std::size_t> dims(k + 1);
  for (std::size_t n = 0; n <= k; ++n) dims[n] = a.dim(n) + b.dim(n);
  std::vector<Matrix> diffs;
  for (std::size_t n = 1; n <= k; ++n) {
    Matrix da = n <= a.length() ? a.diff(n) : Matrix::zero(a.field(), a.dim(n - 1), 0);
    Matrix db = n <= b.length() ? b.diff(n) : Matrix::zero(b.field(), b.dim(n - 1), 0);
    diffs.push_back(assemble_blocks(a.field(), {da.rows(), db.rows()}, {da.cols(), db.cols()},
                                    {{0, 0, da}, {1, 1, db}}));
  }
  return ChainComplex(GradedObject(a.field(), std::move(dims)), std::move(diffs));
}

}  // namespace bac
