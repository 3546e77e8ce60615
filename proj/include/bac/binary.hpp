#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "bac/chain.hpp"

namespace bac {

// One graded object carrying two differential families, each acyclic.
// Acyclicity of both is asserted at construction.
class BinaryComplex {
 public:
  BinaryComplex(GradedObject graded, std::vector<Matrix> top, std::vector<Matrix> bot)
      : graded_(std::move(graded)), top_(std::move(top)), bot_(std::move(bot)) {
    ChainComplex t(graded_, top_);
    ChainComplex b(graded_, bot_);
    if (!is_acyclic(t)) throw NotAcyclic("top differential is not acyclic");
    if (!is_acyclic(b)) throw NotAcyclic("bottom differential is not acyclic");
  }

  const GradedObject& graded() const { return graded_; }
  const FieldDesc& field() const { return graded_.field; }
  std::size_t length() const { return graded_.top_degree(); }
  std::size_t dim(std::size_t n) const { return graded_.dim(n); }

  const Matrix& top(std::size_t n) const { return top_[n - 1]; }
  const Matrix& bot(std::size_t n) const { return bot_[n - 1]; }
  const std::vector<Matrix>& top_diffs() const { return top_; }
  const std::vector<Matrix>& bot_diffs() const { return bot_; }

  ChainComplex top_complex() const { return ChainComplex(graded_, top_); }
  ChainComplex bottom_complex() const { return ChainComplex(graded_, bot_); }

  bool is_diagonal() const { return top_ == bot_; }

  bool operator==(const BinaryComplex&) const = default;

 private:
  GradedObject graded_;
  std::vector<Matrix> top_, bot_;
};

// Two binary complexes joined degreewise by a top-to-top isomorphism sigma
// and a bottom-to-bottom isomorphism tau.
struct BinaryLadder {
  BinaryComplex source;       // P
  BinaryComplex target;       // Q
  std::vector<Matrix> sigma;  // sigma_0 .. sigma_k
  std::vector<Matrix> tau;
};

// Short exact sequence of binary complexes with explicit degreewise maps.
struct BinarySes {
  BinaryComplex sub;
  BinaryComplex total;
  BinaryComplex quot;
  std::vector<Matrix> incl;  // per degree, sub_n -> total_n
  std::vector<Matrix> proj;  // per degree, total_n -> quot_n
};

// Formal integer-weighted combination of binary complexes over one field.
struct RelationExpr {
  FieldDesc field = FieldDesc::rationals();
  std::vector<std::pair<long long, BinaryComplex>> terms;

  RelationExpr() = default;
  explicit RelationExpr(FieldDesc f) : field(f) {}
  RelationExpr(std::initializer_list<std::pair<long long, BinaryComplex>> ts) {
    for (const auto& t : ts) add(t.first, t.second);
  }

  RelationExpr& add(long long coeff, BinaryComplex c) {
    if (terms.empty()) field = c.field();
    check_same_field(field, c.field());
    terms.emplace_back(coeff, std::move(c));
    return *this;
  }
};

// The generator <alpha|beta>: dims (n, n), top d_1 = alpha, bottom d_1 = beta.
inline BinaryComplex two_term(const Matrix& alpha, const Matrix& beta) {
  check_same_field(alpha.field(), beta.field());
  if (!alpha.is_square() || !beta.is_square() || alpha.rows() != beta.rows())
    throw ShapeError("two_term: maps must be square of equal size");
  if (!is_invertible(alpha) || !is_invertible(beta)) throw NotInvertible("two_term: maps must be isomorphisms");
  GradedObject g(alpha.field(), {alpha.rows(), alpha.cols()});
  return BinaryComplex(std::move(g), {alpha}, {beta});
}

// <id_{P+P} | swap>, the class tau_P of an object of dimension p_dim.
inline BinaryComplex tau_swap(const FieldDesc& f, std::size_t p_dim) {
  Matrix id = Matrix::identity(f, 2 * p_dim);
  Matrix sw = assemble_blocks(f, {p_dim, p_dim}, {p_dim, p_dim},
                              {{0, 1, Matrix::identity(f, p_dim)}, {1, 0, Matrix::identity(f, p_dim)}});
  return two_term(id, sw);
}

inline BinaryComplex swap_top_bottom(const BinaryComplex& p) {
  return BinaryComplex(p.graded(), p.bot_diffs(), p.top_diffs());
}

inline BinaryComplex diagonal_of(const ChainComplex& c) {
  if (!is_acyclic(c)) throw NotAcyclic("diagonal_of: complex is not acyclic");
  return BinaryComplex(c.graded(), c.diffs(), c.diffs());
}

inline BinaryComplex shift_binary(const BinaryComplex& p, std::size_t by) {
  ChainComplex t = shift(p.top_complex(), by);
  ChainComplex b = shift(p.bottom_complex(), by);
  return BinaryComplex(t.graded(), t.diffs(), b.diffs());
}

inline BinaryComplex direct_sum_binary(const BinaryComplex& a, const BinaryComplex& b) {
  ChainComplex t = direct_sum(a.top_complex(), b.top_complex());
  ChainComplex bo = direct_sum(a.bottom_complex(), b.bottom_complex());
  return BinaryComplex(t.graded(), t.diffs(), bo.diffs());
}

inline bool validate_ladder(const BinaryLadder& l) {
  const BinaryComplex& p = l.source;
  const BinaryComplex& q = l.target;
  if (!(p.field() == q.field())) return false;
  std::size_t k = std::max(p.length(), q.length());
  if (l.sigma.size() != k + 1 || l.tau.size() != k + 1) return false;
  for (std::size_t n = 0; n <= k; ++n) {
    if (p.dim(n) != q.dim(n)) return false;
    if (l.sigma[n].rows() != q.dim(n) || l.sigma[n].cols() != p.dim(n)) return false;
    if (l.tau[n].rows() != q.dim(n) || l.tau[n].cols() != p.dim(n)) return false;
    if (!is_invertible(l.sigma[n]) || !is_invertible(l.tau[n])) return false;
  }
  for (std::size_t n = 1; n <= k; ++n) {
    if (l.sigma[n - 1] * p.top(n) != q.top(n) * l.sigma[n]) return false;
    if (l.tau[n - 1] * p.bot(n) != q.bot(n) * l.tau[n]) return false;
  }
  return true;
}

// Ladder with Q_i = P_i obtained by conjugating the differentials of p with
// the given involutions: top_Q d = sigma_{n-1} d_top sigma_n^-1 and likewise
// for the bottom with tau.
inline BinaryLadder conjugated_ladder(const BinaryComplex& p, std::vector<Matrix> sigma,
                                      std::vector<Matrix> tau) {
  std::size_t k = p.length();
  if (sigma.size() != k + 1 || tau.size() != k + 1) throw ShapeError("conjugated_ladder: need one map per degree");
  for (std::size_t n = 0; n <= k; ++n) {
    for (const Matrix* m : {&sigma[n], &tau[n]}) {
      if (m->rows() != p.dim(n) || m->cols() != p.dim(n)) throw ShapeError("conjugated_ladder: map shape mismatch");
      if (!(*m * *m).is_identity()) throw NotInvolution("conjugated_ladder: map is not an involution");
    }
  }
  std::vector<Matrix> top, bot;
  for (std::size_t n = 1; n <= k; ++n) {
    top.push_back(sigma[n - 1] * p.top(n) * sigma[n]);  // involution: sigma^-1 = sigma
    bot.push_back(tau[n - 1] * p.bot(n) * tau[n]);
  }
  BinaryComplex q(p.graded(), std::move(top), std::move(bot));
  BinaryLadder l{p, std::move(q), std::move(sigma), std::move(tau)};
  if (!validate_ladder(l)) throw NotChainMap("conjugated_ladder: squares do not commute");
  return l;
}

inline bool validate_ses(const BinarySes& s) {
  const auto& a = s.sub;
  const auto& t = s.total;
  const auto& q = s.quot;
  if (!(a.field() == t.field()) || !(q.field() == t.field())) return false;
  std::size_t k = t.length();
  if (a.length() != k || q.length() != k) return false;
  if (s.incl.size() != k + 1 || s.proj.size() != k + 1) return false;
  for (std::size_t n = 0; n <= k; ++n) {
    if (s.incl[n].rows() != t.dim(n) || s.incl[n].cols() != a.dim(n)) return false;
    if (s.proj[n].rows() != q.dim(n) || s.proj[n].cols() != t.dim(n)) return false;
    if (rank(s.incl[n]) != a.dim(n)) return false;            // injective
    if (rank(s.proj[n]) != q.dim(n)) return false;            // surjective
    if (!(s.proj[n] * s.incl[n]).is_zero()) return false;     // composite zero
    if (a.dim(n) + q.dim(n) != t.dim(n)) return false;        // exact in the middle
  }
  for (std::size_t n = 1; n <= k; ++n) {
    if (s.incl[n - 1] * a.top(n) != t.top(n) * s.incl[n]) return false;
    if (s.incl[n - 1] * a.bot(n) != t.bot(n) * s.incl[n]) return false;
    if (s.proj[n - 1] * t.top(n) != q.top(n) * s.proj[n]) return false;
    if (s.proj[n - 1] * t.bot(n) != q.bot(n) * s.proj[n]) return false;
  }
  return true;
}

namespace detail {

inline BinaryComplex pad_binary(const BinaryComplex& p, std::size_t k) {
  if (p.length() >= k) return p;
  std::vector<std::size_t> dims = p.graded().dims;
  std::vector<Matrix> top = p.top_diffs(), bot = p.bot_diffs();
  while (dims.size() <= k) {
    top.push_back(Matrix::zero(p.field(), dims.back(), 0));
    bot.push_back(Matrix::zero(p.field(), dims.back(), 0));
    dims.push_back(0);
  }
  return BinaryComplex(GradedObject(p.field(), std::move(dims)), std::move(top), std::move(bot));
}

}  // namespace detail

// Extension of quot by sub determined by per-degree maps g_n : quot_n -> sub_n.
// The total complex has P_n = sub_n + quot_n with block-triangular
// differentials whose off-diagonal part eps_n = d_n g_n - g_{n-1} d''_n
// satisfies the chain condition identically.
inline BinarySes make_ses(const BinaryComplex& sub_in, const BinaryComplex& quot_in,
                          const std::vector<Matrix>& g_top, const std::vector<Matrix>& g_bot) {
  check_same_field(sub_in.field(), quot_in.field());
  const FieldDesc f = sub_in.field();
  std::size_t k = std::max(sub_in.length(), quot_in.length());
  BinaryComplex sub = detail::pad_binary(sub_in, k);
  BinaryComplex quot = detail::pad_binary(quot_in, k);
  if (g_top.size() != k + 1 || g_bot.size() != k + 1) throw ShapeError("make_ses: need one g per degree");
  for (std::size_t n = 0; n <= k; ++n)
    if (g_top[n].rows() != sub.dim(n) || g_top[n].cols() != quot.dim(n) ||
        g_bot[n].rows() != sub.dim(n) || g_bot[n].cols() != quot.dim(n))
      throw ShapeError("make_ses: g shape mismatch");

  std::vector<std::size_t> dims(k + 1);
  for (std::size_t n = 0; n <= k; ++n) dims[n] = sub.dim(n) + quot.dim(n);
  std::vector<Matrix> top, bot, incl, proj;
  for (std::size_t n = 1; n <= k; ++n) {
    Matrix eps_top = sub.top(n) * g_top[n] - g_top[n - 1] * quot.top(n);
    Matrix eps_bot = sub.bot(n) * g_bot[n] - g_bot[n - 1] * quot.bot(n);
    top.push_back(assemble_blocks(f, {sub.dim(n - 1), quot.dim(n - 1)}, {sub.dim(n), quot.dim(n)},
                                  {{0, 0, sub.top(n)}, {0, 1, eps_top}, {1, 1, quot.top(n)}}));
    bot.push_back(assemble_blocks(f, {sub.dim(n - 1), quot.dim(n - 1)}, {sub.dim(n), quot.dim(n)},
                                  {{0, 0, sub.bot(n)}, {0, 1, eps_bot}, {1, 1, quot.bot(n)}}));
  }
  for (std::size_t n = 0; n <= k; ++n) {
    incl.push_back(assemble_blocks(f, {sub.dim(n), quot.dim(n)}, {sub.dim(n)},
                                   {{0, 0, Matrix::identity(f, sub.dim(n))}}));
    proj.push_back(assemble_blocks(f, {quot.dim(n)}, {sub.dim(n), quot.dim(n)},
                                   {{0, 1, Matrix::identity(f, quot.dim(n))}}));
  }
  BinaryComplex total(GradedObject(f, std::move(dims)), std::move(top), std::move(bot));
  BinarySes s{std::move(sub), std::move(total), std::move(quot), std::move(incl), std::move(proj)};
  if (!validate_ses(s)) throw InvalidSes("make_ses: validation failed");
  return s;
}

}  // namespace bac
