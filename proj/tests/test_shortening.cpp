#include <catch2/catch_amalgamated.hpp>

#include "bac/randgen.hpp"
#include "bac/shortening.hpp"
#include "bac/torsion.hpp"
#include "bac/verify.hpp"

using namespace bac;

namespace {
const FieldDesc Q = FieldDesc::rationals();
const FieldDesc F101 = FieldDesc::prime(101);

BinaryComplex gen23() {
  return two_term(Matrix::from_ints(Q, {{2}}), Matrix::from_ints(Q, {{3}}));
}
}  // namespace

TEST_CASE("shorten on short supports") {
  CHECK(shorten(gen23()) == swap_top_bottom(gen23()));
  BinaryComplex zero(GradedObject(Q, {0}), {}, {});
  CHECK_THROWS_AS(shorten(zero), TooShort);
}

TEST_CASE("shorten dims and validity") {
  BinaryComplex p = gen_binary({3, FieldDesc::prime(101), 2, 3, 3});
  BinaryComplex s = shorten(p);  // construction asserts both differentials acyclic
  std::size_t j = rank(p.top(2));
  CHECK(s.length() == 2);
  CHECK(s.dim(0) == 2 * j + p.dim(0));
  CHECK(s.dim(1) == p.dim(2) + 2 * j + p.dim(1));
  CHECK(s.dim(2) == p.dim(3) + 2 * j);

  BinaryComplex p4 = gen_binary({4, F101, 2, 4, 3});
  CHECK(shorten(p4).length() == 3);
}

TEST_CASE("shortening relation and diagonal special case") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const FieldDesc& f = seed % 2 ? Q : F101;
    BinaryComplex p = gen_binary({seed, f, 2, 3 + seed % 3, 2});
    CHECK((binary_torsion(p) * binary_torsion(shorten(p)) * binary_torsion(tau_of(p))).is_one());
  }
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    BinaryComplex d = diagonal_of(gen_acyclic({seed, Q, 2, 3, 2}));
    CHECK(binary_torsion(shorten(d)) == binary_torsion(tau_of(d)).inverse());
  }
}

TEST_CASE("shorten torsion does not depend on the image bases") {
  SplitMix64 rng(77);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const FieldDesc& f = seed % 2 ? Q : F101;
    BinaryComplex p = gen_binary({seed, f, 2, 3, 2});
    ShorteningData pivot = make_shortening_data(p);
    Scalar base = binary_torsion(shorten_with(p, pivot));
    for (int re = 0; re < 3; ++re) {
      Matrix cj = random_invertible(f, pivot.j_basis.cols(), rng, 2);
      Matrix ck = random_invertible(f, pivot.k_basis.cols(), rng, 2);
      ShorteningData other =
          shortening_data_from_bases(p, pivot.j_basis * cj, pivot.k_basis * ck);
      CHECK(binary_torsion(shorten_with(p, other)) == base);
    }
  }
}

TEST_CASE("tau_of depends only on the image rank") {
  BinaryComplex p = gen_binary({5, F101, 2, 3, 3});
  CHECK(tau_of(p) == tau_swap(F101, rank(p.top(2))));
  CHECK(binary_torsion(tau_swap(Q, 1)) == Scalar::from_int(Q, -1));
  CHECK(binary_torsion(tau_swap(Q, 2)).is_one());
  BinaryComplex q = gen_binary({6, F101, 2, 3, 3});
  if (rank(p.top(2)) == rank(q.top(2))) CHECK(tau_of(p) == tau_of(q));
  CHECK_THROWS_AS(tau_of(gen23()), TooShort);
}

TEST_CASE("truncations") {
  SECTION("P_0 = 0 gives back the complex and a based image piece") {
    Matrix a = Matrix::from_ints(Q, {{1, 2}, {1, 3}});
    Matrix b = Matrix::from_ints(Q, {{3, 1}, {5, 2}});
    BinaryComplex p = shift_binary(two_term(a, b), 1);
    ShorteningData sd = make_shortening_data(p);
    BinaryComplex up = truncate_ge1_with(p, sd);
    BinaryComplex low = truncate_le2_with(p, sd);
    // with pivot coordinates the lower truncation is <J-basis|K-basis>[1]
    CHECK(low == shift_binary(two_term(column_space_basis(a), column_space_basis(b)), 1));
    CHECK(binary_torsion(up) * binary_torsion(low) == binary_torsion(p));
    // basis-independent form: short(p) = p[-1] - tau_p
    CHECK(binary_torsion(shorten(p)) ==
          binary_torsion(two_term(a, b)) / binary_torsion(tau_of(p)));
  }
  SECTION("diagonal complexes truncate to diagonal complexes") {
    BinaryComplex d = diagonal_of(gen_acyclic({9, Q, 2, 3, 2}));
    CHECK(truncate_ge1(d).is_diagonal());
    CHECK(truncate_le2(d).is_diagonal());
  }
  SECTION("truncation identity on random complexes") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
      const FieldDesc& f = seed % 2 ? Q : F101;
      BinaryComplex p = gen_binary({seed, f, 2, 3 + seed % 2, 2});
      ShorteningData sd = make_shortening_data(p);
      CHECK(binary_torsion(shorten_with(p, sd)) ==
            binary_torsion(truncate_ge1_with(p, sd)) / binary_torsion(truncate_le2_with(p, sd)) /
                binary_torsion(tau_of(p)));
    }
  }
}

TEST_CASE("shorten does not depend on trailing zero support") {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    BinaryComplex p = gen_binary({seed, F101, 2, 3, 3});
    CHECK(shorten(extend_support(p)) == extend_support(shorten(p)));
  }
  // padded two-term input: tau is the empty swap class, so short inverts
  BinaryComplex q = extend_support(gen23());
  CHECK(tau_of(q).dim(0) == 0);
  CHECK(binary_torsion(shorten(q)) == binary_torsion(q).inverse());
}

TEST_CASE("support extension and the formal inverse") {
  BinaryComplex p = gen_binary({12, F101, 2, 3, 3});
  BinaryComplex wide = extend_support(p);
  CHECK(wide.length() == p.length() + 1);
  CHECK(wide.dim(wide.length()) == 0);
  CHECK(binary_torsion(wide) == binary_torsion(p));

  RelationExpr e = shortening_inverse(p);
  REQUIRE(e.terms.size() == 2);
  CHECK(e.terms[0].first == -1);
  CHECK(e.terms[1].first == -1);
  CHECK(eval_torsion(e) == binary_torsion(p));
  CHECK(eval_torsion(shortening_inverse(wide)) == binary_torsion(p));
}

TEST_CASE("shorten_ladder") {
  SECTION("identity ladder shortens to a valid ladder") {
    BinaryLadder l = gen_ladder({21, F101, 2, 3, 3}, true);
    BinaryLadder s = shorten_ladder(l);
    CHECK(validate_ladder(s));
    CHECK(s.source == s.target);
  }
  SECTION("involutive ladders shorten to involutive ladders, product inverts") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      const FieldDesc& f = seed % 2 ? Q : F101;
      BinaryLadder l = gen_ladder({seed, f, 2, 2 + seed % 3, 2});
      BinaryLadder s = shorten_ladder(l);
      CHECK(s.source.length() == std::max<std::size_t>(l.source.length() - 1, 2));
      for (std::size_t n = 0; n < s.sigma.size(); ++n) {
        CHECK((s.sigma[n] * s.sigma[n]).is_identity());
        CHECK((s.tau[n] * s.tau[n]).is_identity());
      }
      CHECK((detail::ladder_generator_product(s) * detail::ladder_generator_product(l)).is_one());
    }
  }
  SECTION("rejects a broken ladder") {
    BinaryLadder l = gen_ladder({30, Q, 2, 3, 2});
    l.sigma[1] = Matrix::zero(Q, l.source.dim(1), l.source.dim(1));
    CHECK_THROWS_AS(shorten_ladder(l), InvalidLadder);
  }
}

TEST_CASE("ses_shorten") {
  SECTION("split sequences stay split in torsion") {
    BinarySes s = gen_ses({41, Q, 2, 3, 2}, true);
    BinarySes out = ses_shorten(s);
    CHECK(validate_ses(out));
    CHECK(binary_torsion(out.total) == binary_torsion(out.sub) * binary_torsion(out.quot));
  }
  SECTION("random sequences shorten to valid sequences with multiplicative torsion") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      const FieldDesc& f = seed % 2 ? Q : F101;
      BinarySes s = gen_ses({seed, f, 2, 2 + seed % 2, 2});
      BinarySes out = ses_shorten(s);
      CHECK(validate_ses(out));
      CHECK(binary_torsion(out.total) == binary_torsion(out.sub) * binary_torsion(out.quot));
      CHECK(binary_torsion(out.sub) == binary_torsion(shorten(s.sub)));
      CHECK(binary_torsion(out.quot) == binary_torsion(shorten(s.quot)));
    }
  }
}
