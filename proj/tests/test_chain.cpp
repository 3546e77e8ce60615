#include <catch2/catch_amalgamated.hpp>

#include "bac/chain.hpp"
#include "bac/randgen.hpp"
#include "oracles.hpp"

using namespace bac;

namespace {

const FieldDesc Q = FieldDesc::rationals();
const FieldDesc F7 = FieldDesc::prime(7);

ChainComplex two_term_chain(const FieldDesc& f, long long a) {
  return ChainComplex(GradedObject(f, {1, 1}), {Matrix::from_ints(f, {{a}})});
}

// dims (1,2,1), d_2 = (1,0)^t, d_1 = (0,1); exact by the rank count
// dim ker d_1 = 1 = rank d_2.
ChainComplex witness_121(const FieldDesc& f) {
  return ChainComplex(GradedObject(f, {1, 2, 1}),
                      {Matrix::from_ints(f, {{0, 1}}), Matrix::from_ints(f, {{1}, {0}})});
}

}  // namespace

TEST_CASE("construction validates shapes and d.d = 0") {
  CHECK_THROWS_AS(ChainComplex(GradedObject(Q, {1, 1}), {}), ShapeError);
  CHECK_THROWS_AS(ChainComplex(GradedObject(Q, {1, 1}), {Matrix::zero(Q, 2, 1)}), ShapeError);
  CHECK_THROWS_AS(ChainComplex(GradedObject(Q, {1, 1, 1}),
                               {Matrix::from_ints(Q, {{1}}), Matrix::from_ints(Q, {{1}})}),
                  Error);
}

TEST_CASE("acyclicity") {
  CHECK(is_acyclic(two_term_chain(Q, 1)));
  CHECK_FALSE(is_acyclic(ChainComplex(GradedObject(Q, {2}), {})));
  CHECK(is_acyclic(ChainComplex(GradedObject(Q, {0}), {})));  // the zero complex
  CHECK(is_acyclic(witness_121(Q)));
  CHECK(is_acyclic(witness_121(F7)));
  // single object with zero differential: homology equals the object
  CHECK_FALSE(is_acyclic(ChainComplex(GradedObject(Q, {1, 1}), {Matrix::zero(Q, 1, 1)})));
  // ranks cross-checked against the minor-enumeration oracle
  ChainComplex w = witness_121(Q);
  CHECK(testing::rank_by_minors(w.diff(1)) == 1);
  CHECK(testing::rank_by_minors(w.diff(2)) == 1);
  CHECK(w.dim(1) == testing::rank_by_minors(w.diff(1)) + testing::rank_by_minors(w.diff(2)));
}

TEST_CASE("factorize on the worked examples") {
  SECTION("two-term [2]") {
    Factorization f = factorize(two_term_chain(Q, 2));
    CHECK(f.image_basis[0] == Matrix::from_ints(Q, {{2}}));
    CHECK(f.section[0] == Matrix::from_ints(Q, {{1}}));
  }
  SECTION("dims (1,2,1) pivot policy") {
    Factorization f = factorize(witness_121(Q));
    CHECK(f.image_basis[1] == Matrix::from_ints(Q, {{1}, {0}}));
    CHECK(f.image_basis[0] == Matrix::from_ints(Q, {{1}}));
    CHECK(f.section[0] == Matrix::from_ints(Q, {{0}, {1}}));
    CHECK(f.section[1] == Matrix::from_ints(Q, {{1}}));
  }
  SECTION("identity two-term over F7") {
    Factorization f = factorize(ChainComplex(GradedObject(F7, {2, 2}), {Matrix::identity(F7, 2)}));
    CHECK(f.image_basis[0] == Matrix::identity(F7, 2));
  }
  SECTION("not acyclic") {
    CHECK_THROWS_AS(factorize(ChainComplex(GradedObject(Q, {1, 1}), {Matrix::zero(Q, 1, 1)})),
                    NotAcyclic);
  }
}

TEST_CASE("factorize output satisfies its contracts on random instances") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    GenConfig cfg{seed, seed % 2 ? Q : F7, 2, 4, 3};
    ChainComplex c = gen_acyclic(cfg);
    Factorization f = factorize(c);
    for (std::size_t n = 1; n <= c.length(); ++n) {
      CHECK(c.diff(n) * f.section[n - 1] == f.image_basis[n - 1]);
      CHECK(rank(f.image_basis[n - 1]) == f.image_basis[n - 1].cols());
    }
    // [J_n | s_n] assembles to an invertible matrix in every degree
    for (std::size_t n = 0; n <= c.length(); ++n) {
      std::vector<Matrix> parts;
      if (n < c.length()) parts.push_back(f.image_basis[n]);
      if (n >= 1) parts.push_back(f.section[n - 1]);
      Matrix m = hstack(parts, c.field(), c.dim(n));
      REQUIRE(m.is_square());
      CHECK(is_invertible(m));
    }
  }
}

TEST_CASE("shift") {
  ChainComplex c = two_term_chain(Q, 2);
  ChainComplex s = shift(c, 1);
  CHECK(s.graded().dims == std::vector<std::size_t>{0, 1, 1});
  CHECK(s.diff(2) == Matrix::from_ints(Q, {{2}}));
  CHECK(shift(c, 0) == c);
  CHECK(is_acyclic(shift(witness_121(Q), 2)));
  CHECK(shift(witness_121(Q), 2).graded().dims == std::vector<std::size_t>{0, 0, 1, 2, 1});
}

TEST_CASE("direct sum") {
  ChainComplex sum = direct_sum(two_term_chain(Q, 2), two_term_chain(Q, 3));
  CHECK(sum.diff(1) == Matrix::from_ints(Q, {{2, 0}, {0, 3}}));

  ChainComplex zero(GradedObject(Q, {0}), {});
  CHECK(direct_sum(two_term_chain(Q, 5), zero).diff(1) == Matrix::from_ints(Q, {{5}}));

  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    ChainComplex a = gen_acyclic({seed, Q, 2, 3, 2});
    ChainComplex b = gen_acyclic({seed + 100, Q, 2, 4, 2});
    CHECK(is_acyclic(direct_sum(a, b)));
  }
  CHECK_THROWS_AS(direct_sum(two_term_chain(Q, 1), two_term_chain(F7, 1)), FieldMismatch);
}

TEST_CASE("alternating dimension sum vanishes for acyclic complexes") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    ChainComplex c = gen_acyclic({seed, F7, 3, 5, 3});
    long long alt = 0;
    for (std::size_t n = 0; n <= c.length(); ++n)
      alt += (n % 2 ? -1 : 1) * static_cast<long long>(c.dim(n));
    CHECK(alt == 0);
  }
}
