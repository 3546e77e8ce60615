#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

#include "bac/binary.hpp"
#include "bac/chain.hpp"
#include "bac/total.hpp"

namespace bac {

// SplitMix64 (Steele, Lea, Flood 2014).  Fixed algorithm so that one seed
// reproduces one instance byte for byte on every platform.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  SplitMix64 split() { return SplitMix64(next()); }

  // uniform in [0, bound), rejection-sampled
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) return 0;
    std::uint64_t limit = ~0ull - ~0ull % bound;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

  long long in_range(long long lo, long long hi) {  // inclusive
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
};

struct GenConfig {
  std::uint64_t seed = 1;
  FieldDesc field = FieldDesc::prime(101);
  std::size_t max_rank = 2;    // bound on the image ranks b_n
  std::size_t length = 3;      // support bound k
  long long entry_bound = 3;   // magnitude bound for rational entries
};

inline Scalar random_scalar(const FieldDesc& f, SplitMix64& rng, long long entry_bound) {
  if (f.is_rational()) return Scalar::from_int(f, rng.in_range(-entry_bound, entry_bound));
  return Scalar::residue(f, rng.below(f.p));
}

// Invertible matrix.  Over F_p: rejection sampling on the determinant.  Over
// Q: a product of elementary row operations with small integer multipliers,
// so the inverse has exactly representable, small entries.
inline Matrix random_invertible(const FieldDesc& f, std::size_t n, SplitMix64& rng, long long entry_bound = 3) {
  if (n == 0) return Matrix::identity(f, 0);
  if (!f.is_rational()) {
    for (;;) {
      Matrix m(f, n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = random_scalar(f, rng, entry_bound);
      if (!det(m).is_zero()) return m;
    }
  }
  Matrix m = Matrix::identity(f, n);
  std::size_t ops = 2 * n + 2;
  for (std::size_t t = 0; t < ops; ++t) {
    std::size_t kind = rng.below(3);
    std::size_t i = rng.below(n), j = rng.below(n);
    if (kind == 0 && i != j) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m.at(i, c), m.at(j, c));
    } else if (kind == 1) {
      for (std::size_t c = 0; c < n; ++c) m.at(i, c) = -m.at(i, c);
    } else if (i != j) {
      Scalar mult = Scalar::from_int(f, rng.in_range(-entry_bound, entry_bound));
      for (std::size_t c = 0; c < n; ++c) m.at(i, c) += mult * m.at(j, c);
    }
  }
  return m;
}

// Exact involution A diag(+-1) A^-1.
inline Matrix random_involution(const FieldDesc& f, std::size_t n, SplitMix64& rng, long long entry_bound = 3) {
  Matrix a = random_invertible(f, n, rng, entry_bound);
  Matrix d(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    d.at(i, i) = rng.below(2) ? Scalar::one(f) : -Scalar::one(f);
  return a * d * inverse(a);
}

namespace detail {

// Standard acyclic complex for ranks b_0..b_{k-1}: P_n = F^{b_n} + F^{b_{n-1}}
// with d_n(x, y) = (y, 0).
inline std::vector<Matrix> standard_diffs(const FieldDesc& f, const std::vector<std::size_t>& b) {
  std::size_t k = b.size();
  auto bk = [&](std::size_t n) -> std::size_t { return n < k ? b[n] : 0; };
  auto bkm = [&](std::size_t n) -> std::size_t { return n >= 1 && n - 1 < k ? b[n - 1] : 0; };
  std::vector<Matrix> diffs;
  for (std::size_t n = 1; n <= k; ++n) {
    diffs.push_back(assemble_blocks(f, {bkm(n), n >= 2 ? bkm(n - 1) : 0}, {bk(n), bkm(n)},
                                    {{0, 1, Matrix::identity(f, bkm(n))}}));
  }
  return diffs;
}

inline std::vector<std::size_t> standard_dims(const std::vector<std::size_t>& b) {
  std::size_t k = b.size();
  std::vector<std::size_t> dims(k + 1);
  for (std::size_t n = 0; n <= k; ++n)
    dims[n] = (n < k ? b[n] : 0) + (n >= 1 ? b[n - 1] : 0);
  return dims;
}

inline std::vector<std::size_t> random_ranks(const GenConfig& cfg, SplitMix64& rng) {
  std::vector<std::size_t> b(cfg.length);
  for (auto& x : b) x = rng.below(cfg.max_rank + 1);
  return b;
}

inline std::vector<Matrix> conjugate_diffs(const std::vector<Matrix>& diffs,
                                           const std::vector<Matrix>& bases) {
  std::vector<Matrix> out;
  for (std::size_t n = 1; n <= diffs.size(); ++n)
    out.push_back(bases[n - 1] * diffs[n - 1] * inverse(bases[n]));
  return out;
}

inline std::vector<Matrix> random_bases(const FieldDesc& f, const std::vector<std::size_t>& dims,
                                        SplitMix64& rng, long long entry_bound) {
  std::vector<Matrix> bs;
  for (std::size_t d : dims) bs.push_back(random_invertible(f, d, rng, entry_bound));
  return bs;
}

}  // namespace detail

// Random acyclic complex: the standard complex for random ranks, conjugated
// degreewise by random invertibles.
inline ChainComplex gen_acyclic(const GenConfig& cfg) {
  SplitMix64 rng(cfg.seed);
  auto b = detail::random_ranks(cfg, rng);
  auto dims = detail::standard_dims(b);
  auto bases = detail::random_bases(cfg.field, dims, rng, cfg.entry_bound);
  return ChainComplex(GradedObject(cfg.field, dims),
                      detail::conjugate_diffs(detail::standard_diffs(cfg.field, b), bases));
}

// Random binary complex: two independent conjugations of one standard
// complex, so both differentials share the graded object.
inline BinaryComplex gen_binary(const GenConfig& cfg) {
  SplitMix64 rng(cfg.seed);
  auto b = detail::random_ranks(cfg, rng);
  auto dims = detail::standard_dims(b);
  auto std_diffs = detail::standard_diffs(cfg.field, b);
  auto top_bases = detail::random_bases(cfg.field, dims, rng, cfg.entry_bound);
  auto bot_bases = detail::random_bases(cfg.field, dims, rng, cfg.entry_bound);
  return BinaryComplex(GradedObject(cfg.field, dims), detail::conjugate_diffs(std_diffs, top_bases),
                       detail::conjugate_diffs(std_diffs, bot_bases));
}

// Random involutive ladder over gen_binary.  With identity_maps the maps are
// identities and the target equals the source.
inline BinaryLadder gen_ladder(const GenConfig& cfg, bool identity_maps = false) {
  SplitMix64 rng(cfg.seed);
  BinaryComplex p = gen_binary({rng.next(), cfg.field, cfg.max_rank, cfg.length, cfg.entry_bound});
  std::vector<Matrix> sigma, tau;
  for (std::size_t n = 0; n <= p.length(); ++n) {
    if (identity_maps) {
      sigma.push_back(Matrix::identity(cfg.field, p.dim(n)));
      tau.push_back(Matrix::identity(cfg.field, p.dim(n)));
    } else {
      sigma.push_back(random_involution(cfg.field, p.dim(n), rng, cfg.entry_bound));
      tau.push_back(random_involution(cfg.field, p.dim(n), rng, cfg.entry_bound));
    }
  }
  return conjugated_ladder(p, std::move(sigma), std::move(tau));
}

// Random short exact sequence via make_ses; split = zero connecting maps.
inline BinarySes gen_ses(const GenConfig& cfg, bool split = false) {
  SplitMix64 rng(cfg.seed);
  BinaryComplex sub = gen_binary({rng.next(), cfg.field, cfg.max_rank, cfg.length, cfg.entry_bound});
  BinaryComplex quot = gen_binary({rng.next(), cfg.field, cfg.max_rank, cfg.length, cfg.entry_bound});
  std::size_t k = std::max(sub.length(), quot.length());
  std::vector<Matrix> g_top, g_bot;
  for (std::size_t n = 0; n <= k; ++n) {
    Matrix gt(cfg.field, sub.dim(n), quot.dim(n));
    Matrix gb(cfg.field, sub.dim(n), quot.dim(n));
    if (!split) {
      for (std::size_t i = 0; i < gt.rows(); ++i)
        for (std::size_t j = 0; j < gt.cols(); ++j) {
          gt.at(i, j) = random_scalar(cfg.field, rng, cfg.entry_bound);
          gb.at(i, j) = random_scalar(cfg.field, rng, cfg.entry_bound);
        }
    }
    g_top.push_back(std::move(gt));
    g_bot.push_back(std::move(gb));
  }
  return make_ses(sub, quot, g_top, g_bot);
}

// Random Nenashev diagram: the tensor-product bicomplex of two standard
// length-2 acyclic complexes (rows and columns exact by flatness), with every
// object conjugated by a random invertible, independently for the top and the
// bottom structure.
inline NenashevDiagram gen_nenashev(const GenConfig& cfg) {
  SplitMix64 rng(cfg.seed);
  const FieldDesc f = cfg.field;
  GenConfig c2{0, f, cfg.max_rank, 2, cfg.entry_bound};
  auto ra = detail::random_ranks(c2, rng);
  auto rb = detail::random_ranks(c2, rng);
  auto a_dims = detail::standard_dims(ra);
  auto b_dims = detail::standard_dims(rb);
  auto a_diffs = detail::standard_diffs(f, ra);
  auto b_diffs = detail::standard_diffs(f, rb);

  // object at column i, row j is F^{a_i} (x) F^{b_j}
  auto obj_dim = [&](std::size_t i, std::size_t j) { return a_dims[i] * b_dims[j]; };
  std::vector<std::vector<Matrix>> g_top(3), g_bot(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      g_top[i].push_back(random_invertible(f, obj_dim(i, j), rng, cfg.entry_bound));
      g_bot[i].push_back(random_invertible(f, obj_dim(i, j), rng, cfg.entry_bound));
    }
  auto horizontal = [&](std::size_t i, std::size_t j, bool top) {
    // d^A_i (x) id : X_{i,j} -> X_{i-1,j}
    Matrix h = kron(a_diffs[i - 1], Matrix::identity(f, b_dims[j]));
    const auto& g = top ? g_top : g_bot;
    return g[i - 1][j] * h * inverse(g[i][j]);
  };
  auto vertical = [&](std::size_t i, std::size_t j, bool top) {
    // id (x) d^B_j : X_{i,j} -> X_{i,j-1}
    Matrix v = kron(Matrix::identity(f, a_dims[i]), b_diffs[j - 1]);
    const auto& g = top ? g_top : g_bot;
    return g[i][j - 1] * v * inverse(g[i][j]);
  };
  auto row = [&](std::size_t j) {
    GradedObject g(f, {obj_dim(0, j), obj_dim(1, j), obj_dim(2, j)});
    return BinaryComplex(std::move(g), {horizontal(1, j, true), horizontal(2, j, true)},
                         {horizontal(1, j, false), horizontal(2, j, false)});
  };
  NenashevDiagram d{row(2), row(1), row(0),
                    {vertical(0, 2, true), vertical(1, 2, true), vertical(2, 2, true)},
                    {vertical(0, 2, false), vertical(1, 2, false), vertical(2, 2, false)},
                    {vertical(0, 1, true), vertical(1, 1, true), vertical(2, 1, true)},
                    {vertical(0, 1, false), vertical(1, 1, false), vertical(2, 1, false)}};
  if (!validate_nenashev(d)) throw InvalidDiagram("gen_nenashev: generated diagram does not validate");
  return d;
}

// Factorisation with randomly re-chosen image bases and sections; used to
// check that torsion does not depend on these choices.
inline Factorization random_factorization(const ChainComplex& c, SplitMix64& rng, long long entry_bound = 3) {
  Factorization f = factorize(c);
  for (std::size_t n = 1; n <= c.length(); ++n) {
    Matrix change = random_invertible(c.field(), f.image_basis[n - 1].cols(), rng, entry_bound);
    f.image_basis[n - 1] = f.image_basis[n - 1] * change;
    auto s = solve_any(c.diff(n), f.image_basis[n - 1]);
    if (!s) throw Error("random_factorization: section solve failed");
    Matrix ker = kernel_basis(c.diff(n));
    Matrix mix(c.field(), ker.cols(), s->cols());
    for (std::size_t i = 0; i < mix.rows(); ++i)
      for (std::size_t j = 0; j < mix.cols(); ++j) mix.at(i, j) = random_scalar(c.field(), rng, entry_bound);
    f.section[n - 1] = *s + ker * mix;
  }
  return f;
}

}  // namespace bac
