#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "bac/binary.hpp"
#include "bac/torsion.hpp"

namespace bac {

// Image data of the second differentials of a binary complex: bases J, K of
// im d_2 and im d'_2 inside P_1, and the induced epimorphisms P_2 -> J,
// P_2 -> K in those coordinates.  The composite basis * epi recovers d_2.
// J and K always have equal rank over a field, and the fixed isomorphism
// between them is the coordinate identity.
struct ShorteningData {
  Matrix j_basis;  // m_1 x j, columns a basis of im d_2
  Matrix k_basis;  // m_1 x j, columns a basis of im d'_2
  Matrix epi_j;    // j x m_2 with j_basis * epi_j = d_2
  Matrix epi_k;
};

inline ShorteningData shortening_data_from_bases(const BinaryComplex& p, Matrix j_basis, Matrix k_basis) {
  if (p.length() < 2) throw TooShort("shortening data needs support of length >= 2");
  const Matrix& d2 = p.top(2);
  const Matrix& d2b = p.bot(2);
  if (j_basis.rows() != p.dim(1) || k_basis.rows() != p.dim(1)) throw ShapeError("image basis row mismatch");
  if (rank(j_basis) != j_basis.cols() || rank(k_basis) != k_basis.cols())
    throw ShapeError("image basis columns are dependent");
  auto ej = solve_any(j_basis, d2);
  auto ek = solve_any(k_basis, d2b);
  if (!ej || !ek) throw ShapeError("columns do not span the image");
  if (j_basis.cols() != rank(d2) || k_basis.cols() != rank(d2b)) throw ShapeError("image basis rank mismatch");
  return ShorteningData{std::move(j_basis), std::move(k_basis), std::move(*ej), std::move(*ek)};
}

inline ShorteningData make_shortening_data(const BinaryComplex& p) {
  if (p.length() < 2) throw TooShort("shortening data needs support of length >= 2");
  return shortening_data_from_bases(p, column_space_basis(p.top(2)), column_space_basis(p.bot(2)));
}

namespace detail {

// d_n of the input addressed as a possibly-absent block (absent above the support).
inline Matrix top_or_empty(const BinaryComplex& p, std::size_t n) {
  return n <= p.length() ? p.top(n) : Matrix::zero(p.field(), p.dim(n - 1), p.dim(n));
}
inline Matrix bot_or_empty(const BinaryComplex& p, std::size_t n) {
  return n <= p.length() ? p.bot(n) : Matrix::zero(p.field(), p.dim(n - 1), p.dim(n));
}

}  // namespace detail

// The Grayson shortening with a prescribed choice of image bases.  For input
// supported on [0, L] (L >= 2) the output lives on [0, max(L-1, 2)]:
//   degree 0:  J + K + P_0
//   degree 1:  P_2 + K + J + P_1
//   degree 2:  P_3 + J + K
//   degree n:  P_{n+1}            (n >= 3)
// Both components use this summand order.  The top differential splices the
// bottom factorisation into low degrees and vice versa.
inline BinaryComplex shorten_with(const BinaryComplex& p, const ShorteningData& sd) {
  std::size_t L = p.length();
  if (L < 2) throw TooShort("shorten_with: support too short");
  const FieldDesc f = p.field();
  std::size_t j = sd.j_basis.cols();
  std::size_t kk = sd.k_basis.cols();
  Matrix ij = Matrix::identity(f, j);
  Matrix ik = Matrix::identity(f, kk);

  std::size_t out_k = std::max<std::size_t>(L - 1, 2);
  std::vector<std::size_t> dims(out_k + 1);
  dims[0] = j + kk + p.dim(0);
  dims[1] = p.dim(2) + kk + j + p.dim(1);
  dims[2] = p.dim(3) + j + kk;
  for (std::size_t n = 3; n <= out_k; ++n) dims[n] = p.dim(n + 1);

  std::vector<std::size_t> deg0{j, kk, p.dim(0)};
  std::vector<std::size_t> deg1{p.dim(2), kk, j, p.dim(1)};
  std::vector<std::size_t> deg2{p.dim(3), j, kk};

  std::vector<Matrix> top, bot;
  top.push_back(assemble_blocks(f, deg0, deg1,
                                {{0, 0, sd.epi_j}, {1, 1, ik}, {2, 3, p.bot(1)}}));
  bot.push_back(assemble_blocks(f, deg0, deg1,
                                {{0, 2, ij}, {1, 0, sd.epi_k}, {2, 3, p.top(1)}}));
  top.push_back(assemble_blocks(f, deg1, deg2,
                                {{0, 0, detail::top_or_empty(p, 3)}, {2, 1, ij}, {3, 2, sd.k_basis}}));
  bot.push_back(assemble_blocks(f, deg1, deg2,
                                {{0, 0, detail::bot_or_empty(p, 3)}, {1, 2, ik}, {3, 1, sd.j_basis}}));
  if (out_k >= 3) {
    top.push_back(assemble_blocks(f, deg2, {p.dim(4)}, {{0, 0, detail::top_or_empty(p, 4)}}));
    bot.push_back(assemble_blocks(f, deg2, {p.dim(4)}, {{0, 0, detail::bot_or_empty(p, 4)}}));
  }
  for (std::size_t n = 4; n <= out_k; ++n) {
    top.push_back(p.top(n + 1));
    bot.push_back(p.bot(n + 1));
  }
  return BinaryComplex(GradedObject(f, std::move(dims)), std::move(top), std::move(bot));
}

// Grayson shortening with the deterministic pivot bases.  Support [0,1]
// degenerates to swapping the differentials; [0,0] is rejected.
inline BinaryComplex shorten(const BinaryComplex& p) {
  if (p.length() == 0) throw TooShort("shorten: nothing to shorten on [0,0]");
  if (p.length() == 1) return swap_top_bottom(p);
  return shorten_with(p, make_shortening_data(p));
}

// tau_P of a binary complex: the swap class of its image object J.
inline BinaryComplex tau_of(const BinaryComplex& p) {
  if (p.length() < 2) throw TooShort("tau_of: support too short");
  return tau_swap(p.field(), rank(p.top(2)));
}

// Upper truncation ... P_3 => P_2 => J, reindexed to start at degree 0.
inline BinaryComplex truncate_ge1_with(const BinaryComplex& p, const ShorteningData& sd) {
  std::size_t L = p.length();
  if (L < 2) throw TooShort("truncate_ge1: support too short");
  const FieldDesc f = p.field();
  std::vector<std::size_t> dims(L);
  dims[0] = sd.j_basis.cols();
  for (std::size_t n = 1; n < L; ++n) dims[n] = p.dim(n + 1);
  std::vector<Matrix> top{sd.epi_j}, bot{sd.epi_k};
  for (std::size_t n = 2; n < L; ++n) {
    top.push_back(p.top(n + 1));
    bot.push_back(p.bot(n + 1));
  }
  return BinaryComplex(GradedObject(f, std::move(dims)), std::move(top), std::move(bot));
}

// Lower truncation J => P_1 => P_0.
inline BinaryComplex truncate_le2_with(const BinaryComplex& p, const ShorteningData& sd) {
  if (p.length() < 2) throw TooShort("truncate_le2: support too short");
  GradedObject g(p.field(), {p.dim(0), p.dim(1), sd.j_basis.cols()});
  return BinaryComplex(std::move(g), {p.top(1), sd.j_basis}, {p.bot(1), sd.k_basis});
}

inline BinaryComplex truncate_ge1(const BinaryComplex& p) {
  return truncate_ge1_with(p, make_shortening_data(p));
}

inline BinaryComplex truncate_le2(const BinaryComplex& p) {
  return truncate_le2_with(p, make_shortening_data(p));
}

// Regards a complex supported on [0,k] as one supported on [0,k+1].
inline BinaryComplex extend_support(const BinaryComplex& p) {
  return detail::pad_binary(p, p.length() + 1);
}

// The formal inverse of extend_support: P |-> -shorten(P) - tau_P.
inline RelationExpr shortening_inverse(const BinaryComplex& p) {
  RelationExpr e(p.field());
  e.add(-1, shorten(p));
  e.add(-1, tau_of(p));
  return e;
}

// Shortening of a ladder.  The image bases on the target side are transported
// through sigma_1 and tau_1, so the induced maps on J and K coordinates are
// identities and involutive ladders shorten to involutive ladders.  Block
// assignments per degree:
//   short(sigma)_0 = sJ + tK + tau_0        short(tau)_0 = sJ + tK + sigma_0
//   short(sigma)_1 = sigma_2 + tK + sJ + tau_1
//   short(tau)_1   = tau_2 + tK + sJ + sigma_1
//   short(sigma)_2 = sigma_3 + sJ + tK      short(tau)_2 = tau_3 + sJ + tK
//   short(sigma)_i = sigma_{i+1}            short(tau)_i = tau_{i+1}   (i >= 3)
inline BinaryLadder shorten_ladder(const BinaryLadder& l) {
  if (!validate_ladder(l)) throw InvalidLadder("shorten_ladder: input does not validate");
  const BinaryComplex& p = l.source;
  const BinaryComplex& q = l.target;
  std::size_t L = p.length();
  if (L < 2) throw TooShort("shorten_ladder: support too short");
  const FieldDesc f = p.field();

  ShorteningData dp = make_shortening_data(p);
  ShorteningData dq = shortening_data_from_bases(q, l.sigma[1] * dp.j_basis, l.tau[1] * dp.k_basis);

  auto sj = solve_any(dq.j_basis, l.sigma[1] * dp.j_basis);
  auto tk = solve_any(dq.k_basis, l.tau[1] * dp.k_basis);
  if (!sj || !tk || !is_invertible(*sj) || !is_invertible(*tk))
    throw InvalidLadder("shorten_ladder: induced image maps are not isomorphisms");

  std::size_t out_k = std::max<std::size_t>(L - 1, 2);
  auto s_at = [&](std::size_t n) {
    return n <= L ? l.sigma[n] : Matrix::zero(f, 0, 0);
  };
  auto t_at = [&](std::size_t n) {
    return n <= L ? l.tau[n] : Matrix::zero(f, 0, 0);
  };
  std::vector<Matrix> sigma, tau;
  sigma.push_back(diag_blocks(f, {*sj, *tk, l.tau[0]}));
  tau.push_back(diag_blocks(f, {*sj, *tk, l.sigma[0]}));
  sigma.push_back(diag_blocks(f, {l.sigma[2], *tk, *sj, l.tau[1]}));
  tau.push_back(diag_blocks(f, {l.tau[2], *tk, *sj, l.sigma[1]}));
  sigma.push_back(diag_blocks(f, {s_at(3), *sj, *tk}));
  tau.push_back(diag_blocks(f, {t_at(3), *sj, *tk}));
  for (std::size_t n = 3; n <= out_k; ++n) {
    sigma.push_back(l.sigma[n + 1]);
    tau.push_back(l.tau[n + 1]);
  }

  BinaryLadder out{shorten_with(p, dp), shorten_with(q, dq), std::move(sigma), std::move(tau)};
  if (!validate_ladder(out)) throw InvalidLadder("shorten_ladder: shortened ladder does not validate");
  return out;
}

// Shortening of a short exact sequence: image bases of the total complex are
// assembled from a basis of the sub-image and lifted quotient-image columns,
// so the shortened pieces inherit degreewise inclusion and projection maps.
inline BinarySes ses_shorten(const BinarySes& s) {
  if (!validate_ses(s)) throw InvalidSes("ses_shorten: input does not validate");
  std::size_t L = s.total.length();
  if (L < 2) throw TooShort("ses_shorten: support too short");
  const FieldDesc f = s.total.field();

  ShorteningData da = make_shortening_data(s.sub);
  ShorteningData dq = make_shortening_data(s.quot);

  auto lift_image = [&](const Matrix& sub_basis, const Matrix& quot_section, const Matrix& d2_total) {
    // preimage of the quotient section in the total complex
    auto x = solve_any(s.proj[2], quot_section);
    if (!x) throw InvalidSes("ses_shorten: projection is not surjective");
    return hstack({s.incl[1] * sub_basis, d2_total * *x}, f, s.total.dim(1));
  };
  auto sec_j = solve_any(s.quot.top(2), dq.j_basis);
  auto sec_k = solve_any(s.quot.bot(2), dq.k_basis);
  if (!sec_j || !sec_k) throw InvalidSes("ses_shorten: quotient sections failed");
  ShorteningData dt = shortening_data_from_bases(s.total, lift_image(da.j_basis, *sec_j, s.total.top(2)),
                                                 lift_image(da.k_basis, *sec_k, s.total.bot(2)));

  std::size_t ja = da.j_basis.cols(), jq = dq.j_basis.cols();
  std::size_t ka = da.k_basis.cols(), kq = dq.k_basis.cols();
  Matrix inc_j = assemble_blocks(f, {ja, jq}, {ja}, {{0, 0, Matrix::identity(f, ja)}});
  Matrix prj_j = assemble_blocks(f, {jq}, {ja, jq}, {{0, 1, Matrix::identity(f, jq)}});
  Matrix inc_k = assemble_blocks(f, {ka, kq}, {ka}, {{0, 0, Matrix::identity(f, ka)}});
  Matrix prj_k = assemble_blocks(f, {kq}, {ka, kq}, {{0, 1, Matrix::identity(f, kq)}});

  auto map_at = [&](const std::vector<Matrix>& maps, std::size_t n, std::size_t r, std::size_t c) {
    return n < maps.size() ? maps[n] : Matrix::zero(f, r, c);
  };
  std::size_t out_k = std::max<std::size_t>(L - 1, 2);
  std::vector<Matrix> incl, proj;
  incl.push_back(diag_blocks(f, {inc_j, inc_k, s.incl[0]}));
  proj.push_back(diag_blocks(f, {prj_j, prj_k, s.proj[0]}));
  incl.push_back(diag_blocks(f, {s.incl[2], inc_k, inc_j, s.incl[1]}));
  proj.push_back(diag_blocks(f, {s.proj[2], prj_k, prj_j, s.proj[1]}));
  incl.push_back(diag_blocks(f, {map_at(s.incl, 3, s.total.dim(3), s.sub.dim(3)), inc_j, inc_k}));
  proj.push_back(diag_blocks(f, {map_at(s.proj, 3, s.quot.dim(3), s.total.dim(3)), prj_j, prj_k}));
  for (std::size_t n = 3; n <= out_k; ++n) {
    incl.push_back(s.incl[n + 1]);
    proj.push_back(s.proj[n + 1]);
  }

  BinarySes out{shorten_with(s.sub, da), shorten_with(s.total, dt), shorten_with(s.quot, dq),
                std::move(incl), std::move(proj)};
  if (!validate_ses(out)) throw InvalidSes("ses_shorten: shortened sequence does not validate");
  return out;
}

}  // namespace bac
