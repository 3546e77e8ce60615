#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "bac/binary.hpp"
#include "bac/chain.hpp"

namespace bac {

// Total complex of a ladder viewed as a two-row double complex, rows Q
// (row 0) and P (row 1).  T_n = P_{n-1} + Q_n; the horizontal differential of
// the shifted row carries the sign -1, vertical maps are unsigned:
//   (p, q) |-> (-d p, sigma(p) + d q).
inline BinaryComplex ladder_total(const BinaryLadder& l) {
  if (!validate_ladder(l)) throw InvalidLadder("ladder_total: ladder does not validate");
  const BinaryComplex& p = l.source;
  const BinaryComplex& q = l.target;
  const FieldDesc f = p.field();
  std::size_t k = p.length();

  std::vector<std::size_t> dims(k + 2);
  for (std::size_t n = 0; n <= k + 1; ++n) dims[n] = (n >= 1 ? p.dim(n - 1) : 0) + q.dim(n);

  auto layer = [&](std::size_t n, bool top) {
    // block rows (P_{n-2}, Q_{n-1}), block cols (P_{n-1}, Q_n)
    std::vector<std::size_t> rd{n >= 2 ? p.dim(n - 2) : 0, q.dim(n - 1)};
    std::vector<std::size_t> cd{p.dim(n - 1), q.dim(n)};
    std::vector<std::tuple<std::size_t, std::size_t, Matrix>> blocks;
    if (n >= 2) blocks.emplace_back(0, 0, -(top ? p.top(n - 1) : p.bot(n - 1)));
    blocks.emplace_back(1, 0, top ? l.sigma[n - 1] : l.tau[n - 1]);
    if (n <= k) blocks.emplace_back(1, 1, top ? q.top(n) : q.bot(n));
    return assemble_blocks(f, rd, cd, blocks);
  };
  std::vector<Matrix> top, bot;
  for (std::size_t n = 1; n <= k + 1; ++n) {
    top.push_back(layer(n, true));
    bot.push_back(layer(n, false));
  }
  return BinaryComplex(GradedObject(f, std::move(dims)), std::move(top), std::move(bot));
}

// 3x3 double complex whose rows M, N, P and columns M_i => N_i => P_i are all
// binary acyclic, with top squares and bottom squares commuting separately.
struct NenashevDiagram {
  BinaryComplex row_m;  // column degree 2 objects M_0, M_1, M_2
  BinaryComplex row_n;
  BinaryComplex row_p;
  std::array<Matrix, 3> mn_top, mn_bot;  // vertical maps M_i -> N_i
  std::array<Matrix, 3> np_top, np_bot;  // vertical maps N_i -> P_i
};

// Column i as the binary complex M_i => N_i => P_i.
inline BinaryComplex column_complex(const NenashevDiagram& d, std::size_t i) {
  GradedObject g(d.row_m.field(), {d.row_p.dim(i), d.row_n.dim(i), d.row_m.dim(i)});
  return BinaryComplex(std::move(g), {d.np_top[i], d.mn_top[i]}, {d.np_bot[i], d.mn_bot[i]});
}

inline bool validate_nenashev(const NenashevDiagram& d) {
  const FieldDesc f = d.row_m.field();
  if (!(d.row_n.field() == f) || !(d.row_p.field() == f)) return false;
  if (d.row_m.length() != 2 || d.row_n.length() != 2 || d.row_p.length() != 2) return false;
  for (std::size_t i = 0; i < 3; ++i) {
    if (d.mn_top[i].rows() != d.row_n.dim(i) || d.mn_top[i].cols() != d.row_m.dim(i)) return false;
    if (d.mn_bot[i].rows() != d.row_n.dim(i) || d.mn_bot[i].cols() != d.row_m.dim(i)) return false;
    if (d.np_top[i].rows() != d.row_p.dim(i) || d.np_top[i].cols() != d.row_n.dim(i)) return false;
    if (d.np_bot[i].rows() != d.row_p.dim(i) || d.np_bot[i].cols() != d.row_n.dim(i)) return false;
  }
  try {
    for (std::size_t i = 0; i < 3; ++i) column_complex(d, i);
  } catch (const Error&) {
    return false;
  }
  for (std::size_t i = 1; i < 3; ++i) {
    if (d.mn_top[i - 1] * d.row_m.top(i) != d.row_n.top(i) * d.mn_top[i]) return false;
    if (d.mn_bot[i - 1] * d.row_m.bot(i) != d.row_n.bot(i) * d.mn_bot[i]) return false;
    if (d.np_top[i - 1] * d.row_n.top(i) != d.row_p.top(i) * d.np_top[i]) return false;
    if (d.np_bot[i - 1] * d.row_n.bot(i) != d.row_p.bot(i) * d.np_bot[i]) return false;
  }
  return true;
}

// Total complex of the diagram, length 4:
//   T_4 = M_2, T_3 = M_1 + N_2, T_2 = M_0 + N_1 + P_2, T_1 = N_0 + P_1, T_0 = P_0.
// Horizontal differentials of row r carry the sign (-1)^r (rows P, N, M are
// rows 0, 1, 2); vertical maps are unsigned.
inline BinaryComplex nenashev_total(const NenashevDiagram& d) {
  if (!validate_nenashev(d)) throw InvalidDiagram("nenashev_total: diagram does not validate");
  const FieldDesc f = d.row_m.field();
  const BinaryComplex &M = d.row_m, &N = d.row_n, &P = d.row_p;
  std::vector<std::size_t> dims{P.dim(0), N.dim(0) + P.dim(1), M.dim(0) + N.dim(1) + P.dim(2),
                                M.dim(1) + N.dim(2), M.dim(2)};

  auto build = [&](bool top) {
    auto mh = [&](std::size_t n) { return top ? M.top(n) : M.bot(n); };
    auto nh = [&](std::size_t n) { return top ? N.top(n) : N.bot(n); };
    auto ph = [&](std::size_t n) { return top ? P.top(n) : P.bot(n); };
    auto mn = [&](std::size_t i) { return top ? d.mn_top[i] : d.mn_bot[i]; };
    auto np = [&](std::size_t i) { return top ? d.np_top[i] : d.np_bot[i]; };
    std::vector<Matrix> diffs;
    diffs.push_back(assemble_blocks(f, {P.dim(0)}, {N.dim(0), P.dim(1)},
                                    {{0, 0, np(0)}, {0, 1, ph(1)}}));
    diffs.push_back(assemble_blocks(f, {N.dim(0), P.dim(1)}, {M.dim(0), N.dim(1), P.dim(2)},
                                    {{0, 0, mn(0)}, {0, 1, -nh(1)}, {1, 1, np(1)}, {1, 2, ph(2)}}));
    diffs.push_back(assemble_blocks(f, {M.dim(0), N.dim(1), P.dim(2)}, {M.dim(1), N.dim(2)},
                                    {{0, 0, mh(1)}, {1, 0, mn(1)}, {1, 1, -nh(2)}, {2, 1, np(2)}}));
    diffs.push_back(assemble_blocks(f, {M.dim(1), N.dim(2)}, {M.dim(2)},
                                    {{0, 0, mh(2)}, {1, 0, mn(2)}}));
    return diffs;
  };
  return BinaryComplex(GradedObject(f, std::move(dims)), build(true), build(false));
}

// Length-2 complex obtained from a row X on [0,2] by adjoining swap-trivial
// copies of the degree-2 object:
//   degree 2: X_2^a + X_2,  degree 1: X_2^c + X_2^e + X_2^f + X_1,
//   degree 0: X_2^g + X_2^h + X_0.
inline BinaryComplex pad_degree2(const BinaryComplex& x) {
  if (x.length() != 2) throw ShapeError("pad_degree2: input must live on [0,2]");
  const FieldDesc f = x.field();
  std::size_t c = x.dim(2);
  Matrix id = Matrix::identity(f, c);
  GradedObject g(f, {2 * c + x.dim(0), 3 * c + x.dim(1), 2 * c});
  std::vector<std::size_t> d2{c, c}, d1{c, c, c, x.dim(1)}, d0{c, c, x.dim(0)};
  Matrix top2 = assemble_blocks(f, d1, d2, {{2, 0, id}, {3, 1, x.top(2)}});
  Matrix top1 = assemble_blocks(f, d0, d1, {{0, 0, id}, {1, 1, id}, {2, 3, x.top(1)}});
  Matrix bot2 = assemble_blocks(f, d1, d2, {{1, 1, id}, {3, 0, x.bot(2)}});
  Matrix bot1 = assemble_blocks(f, d0, d1, {{0, 2, id}, {1, 0, id}, {2, 3, x.bot(1)}});
  return BinaryComplex(std::move(g), {top1, top2}, {bot1, bot2});
}

// Dual padding by copies of the degree-0 object:
//   degree 2: X_2 + X_0^u + X_0^v,  degree 1: X_1 + X_0^w + X_0^x + X_0^y,
//   degree 0: X_0 + X_0^t.
inline BinaryComplex pad_degree0(const BinaryComplex& x) {
  if (x.length() != 2) throw ShapeError("pad_degree0: input must live on [0,2]");
  const FieldDesc f = x.field();
  std::size_t c = x.dim(0);
  Matrix id = Matrix::identity(f, c);
  GradedObject g(f, {2 * c, x.dim(1) + 3 * c, x.dim(2) + 2 * c});
  std::vector<std::size_t> d2{x.dim(2), c, c}, d1{x.dim(1), c, c, c}, d0{c, c};
  Matrix top2 = assemble_blocks(f, d1, d2, {{0, 0, x.top(2)}, {2, 1, id}, {3, 2, id}});
  Matrix top1 = assemble_blocks(f, d0, d1, {{0, 0, x.top(1)}, {1, 1, id}});
  Matrix bot2 = assemble_blocks(f, d1, d2, {{0, 0, x.bot(2)}, {1, 2, id}, {3, 1, id}});
  Matrix bot1 = assemble_blocks(f, d0, d1, {{0, 2, id}, {1, 0, x.bot(1)}});
  return BinaryComplex(std::move(g), {top1, top2}, {bot1, bot2});
}

// Both paddings at once.
inline BinaryComplex pad_both(const BinaryComplex& x) {
  if (x.length() != 2) throw ShapeError("pad_both: input must live on [0,2]");
  const FieldDesc f = x.field();
  std::size_t c2 = x.dim(2), c0 = x.dim(0);
  Matrix id2 = Matrix::identity(f, c2);
  Matrix id0 = Matrix::identity(f, c0);
  GradedObject g(f, {2 * c2 + 2 * c0, 3 * c2 + x.dim(1) + 3 * c0, 2 * c2 + 2 * c0});
  std::vector<std::size_t> d2{c2, c2, c0, c0};                  // a, X_2, u, v
  std::vector<std::size_t> d1{c2, c2, c2, x.dim(1), c0, c0, c0};  // c, e, f, X_1, w, x, y
  std::vector<std::size_t> d0{c2, c2, c0, c0};                  // g, h, X_0, t
  Matrix top2 = assemble_blocks(f, d1, d2, {{2, 0, id2}, {3, 1, x.top(2)}, {5, 2, id0}, {6, 3, id0}});
  Matrix top1 = assemble_blocks(f, d0, d1, {{0, 0, id2}, {1, 1, id2}, {2, 3, x.top(1)}, {3, 4, id0}});
  Matrix bot2 = assemble_blocks(f, d1, d2, {{1, 1, id2}, {3, 0, x.bot(2)}, {4, 3, id0}, {6, 2, id0}});
  Matrix bot1 = assemble_blocks(f, d0, d1, {{0, 2, id2}, {1, 0, id2}, {2, 5, id0}, {3, 3, x.bot(1)}});
  return BinaryComplex(std::move(g), {top1, top2}, {bot1, bot2});
}

// The reduced total complex T' of length 2 together with the three pieces it
// decomposes into and the column complexes.
struct NenashevDecomposition {
  BinaryComplex total;         // length-4 total complex T
  BinaryComplex reduced;       // T'
  BinaryComplex bottom_piece;  // pad_degree2 of row P
  BinaryComplex front_piece;   // pad_degree0 of row M
  BinaryComplex middle_piece;  // pad_both of sw(row N)
  std::array<BinaryComplex, 3> columns;
};

inline NenashevDecomposition nenashev_decomposition(const NenashevDiagram& d) {
  BinaryComplex t = nenashev_total(d);
  const FieldDesc f = t.field();

  // factorisations of the second and third differentials of T, top and bottom
  Matrix j3 = column_space_basis(t.top(3));
  Matrix j2 = column_space_basis(t.top(2));
  Matrix k3 = column_space_basis(t.bot(3));
  Matrix k2 = column_space_basis(t.bot(2));
  auto ej3 = solve_any(j3, t.top(3));
  auto ej2 = solve_any(j2, t.top(2));
  auto ek3 = solve_any(k3, t.bot(3));
  auto ek2 = solve_any(k2, t.bot(2));
  if (!ej3 || !ej2 || !ek3 || !ek2) throw InvalidDiagram("nenashev_decomposition: image solve failed");
  std::size_t nj3 = j3.cols(), nj2 = j2.cols(), nk3 = k3.cols(), nk2 = k2.cols();

  std::vector<std::size_t> d2{t.dim(4), nj3, nk3, nk2, nj2};
  std::vector<std::size_t> d1{t.dim(3), nk3, nj3, t.dim(2), nj2, nk2, t.dim(1)};
  std::vector<std::size_t> d0{nj3, nk3, nk2, nj2, t.dim(0)};
  auto total_of = [](const std::vector<std::size_t>& v) {
    std::size_t s = 0;
    for (std::size_t x : v) s += x;
    return s;
  };
  GradedObject g(f, {total_of(d0), total_of(d1), total_of(d2)});

  Matrix top2 = assemble_blocks(f, d1, d2,
                                {{0, 0, t.top(4)}, {2, 1, Matrix::identity(f, nj3)}, {3, 2, k3},
                                 {5, 3, Matrix::identity(f, nk2)}, {6, 4, j2}});
  Matrix top1 = assemble_blocks(f, d0, d1,
                                {{0, 0, *ej3}, {1, 1, Matrix::identity(f, nk3)}, {2, 3, *ek2},
                                 {3, 4, Matrix::identity(f, nj2)}, {4, 6, t.top(1)}});
  Matrix bot2 = assemble_blocks(f, d1, d2,
                                {{0, 0, t.bot(4)}, {1, 2, Matrix::identity(f, nk3)}, {3, 1, j3},
                                 {4, 4, Matrix::identity(f, nj2)}, {6, 3, k2}});
  Matrix bot1 = assemble_blocks(f, d0, d1,
                                {{0, 2, Matrix::identity(f, nj3)}, {1, 0, *ek3}, {2, 5, Matrix::identity(f, nk2)},
                                 {3, 3, *ej2}, {4, 6, t.bot(1)}});
  BinaryComplex reduced(std::move(g), {top1, top2}, {bot1, bot2});

  NenashevDecomposition out{std::move(t),
                            std::move(reduced),
                            pad_degree2(d.row_p),
                            pad_degree0(d.row_m),
                            pad_both(swap_top_bottom(d.row_n)),
                            {column_complex(d, 0), column_complex(d, 1), column_complex(d, 2)}};
  return out;
}

}  // namespace bac
