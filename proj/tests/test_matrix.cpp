#include <catch2/catch_amalgamated.hpp>

#include "bac/matrix.hpp"
#include "bac/randgen.hpp"
#include "oracles.hpp"

using namespace bac;

namespace {
const FieldDesc Q = FieldDesc::rationals();
const FieldDesc F5 = FieldDesc::prime(5);
const FieldDesc F101 = FieldDesc::prime(101);
}  // namespace

TEST_CASE("rref on the worked examples") {
  SECTION("proportional rows") {
    RrefResult r = rref(Matrix::from_ints(Q, {{1, 2}, {2, 4}}));
    CHECK(r.pivots == std::vector<std::size_t>{0});
    CHECK(r.reduced == Matrix::from_ints(Q, {{1, 2}, {0, 0}}));
  }
  SECTION("identity is already reduced") {
    RrefResult r = rref(Matrix::identity(Q, 3));
    CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});
    CHECK(r.reduced == Matrix::identity(Q, 3));
    CHECK(r.row_ops_det.is_one());
  }
  SECTION("permutation matrix over F5") {
    RrefResult r = rref(Matrix::from_ints(F5, {{0, 1}, {1, 0}}));
    CHECK(r.pivots == std::vector<std::size_t>{0, 1});
    CHECK(r.reduced == Matrix::identity(F5, 2));
  }
}

TEST_CASE("rref is idempotent and tracks the operation determinant") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const FieldDesc& f = trial % 2 ? Q : F101;
    std::size_t rows = rng.below(5), cols = rng.below(5);
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_scalar(f, rng, 4);
    RrefResult r = rref(m);
    CHECK(rref(r.reduced).reduced == r.reduced);
    if (rows == cols && r.pivots.size() == rows) CHECK(det(m) == r.row_ops_det.inverse());
  }
}

TEST_CASE("determinants on the worked examples") {
  CHECK(det(Matrix::from_ints(Q, {{2, 0}, {0, 3}})) == Scalar::from_int(Q, 6));
  CHECK(det(Matrix::from_ints(Q, {{0, 1}, {1, 0}})) == Scalar::from_int(Q, -1));
  CHECK(det(Matrix::from_ints(F5, {{2, 0}, {0, 3}})).is_one());  // 6 mod 5
  CHECK(det(Matrix::zero(Q, 0, 0)).is_one());
  CHECK_THROWS_AS(det(Matrix::zero(Q, 2, 3)), ShapeError);
  CHECK(det(Matrix::from_ints(Q, {{1, 2}, {2, 4}})).is_zero());
}

TEST_CASE("determinant agrees with Laplace expansion and is multiplicative") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const FieldDesc& f = trial % 2 ? Q : F101;
    std::size_t n = 1 + rng.below(4);
    Matrix a(f, n, n), b(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        a.at(i, j) = random_scalar(f, rng, 5);
        b.at(i, j) = random_scalar(f, rng, 5);
      }
    CHECK(det(a) == testing::det_laplace(a));
    CHECK(det(a * b) == det(a) * det(b));
  }
}

TEST_CASE("solve_any on the worked examples") {
  SECTION("scalar division") {
    auto x = solve_any(Matrix::from_ints(Q, {{2}}), Matrix::from_ints(Q, {{4}}));
    REQUIRE(x);
    CHECK(*x == Matrix::from_ints(Q, {{2}}));
  }
  SECTION("free variable zeroed") {
    auto x = solve_any(Matrix::from_ints(Q, {{1, -1}}), Matrix::from_ints(Q, {{1}}));
    REQUIRE(x);
    CHECK(*x == Matrix::from_ints(Q, {{1}, {0}}));
  }
  SECTION("inconsistent") {
    CHECK_FALSE(solve_any(Matrix::from_ints(Q, {{0}}), Matrix::from_ints(Q, {{1}})));
  }
  SECTION("row mismatch throws") {
    CHECK_THROWS_AS(solve_any(Matrix::zero(Q, 2, 1), Matrix::zero(Q, 3, 1)), ShapeError);
  }
}

TEST_CASE("column space basis on the worked examples") {
  CHECK(column_space_basis(Matrix::from_ints(Q, {{1, 2}, {2, 4}})) == Matrix::from_ints(Q, {{1}, {2}}));
  CHECK(column_space_basis(Matrix::identity(Q, 2)) == Matrix::identity(Q, 2));
  Matrix empty_image = column_space_basis(Matrix::zero(Q, 2, 3));
  CHECK(empty_image.rows() == 2);
  CHECK(empty_image.cols() == 0);
}

TEST_CASE("image and kernel properties on random matrices") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const FieldDesc& f = trial % 2 ? Q : F101;
    std::size_t rows = rng.below(5), cols = rng.below(5);
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        m.at(i, j) = rng.below(3) ? Scalar::zero(f) : random_scalar(f, rng, 4);
    Matrix basis = column_space_basis(m);
    auto x = solve_any(m, basis);
    REQUIRE(x);
    CHECK(m * *x == basis);
    CHECK(rank(basis) == basis.cols());
    Matrix ker = kernel_basis(m);
    CHECK((m * ker).is_zero());
    CHECK(rank(m) + ker.cols() == cols);
    if (std::min(rows, cols) <= 3) CHECK(rank(m) == testing::rank_by_minors(m));
  }
}

TEST_CASE("inverse") {
  Matrix m = Matrix::from_ints(Q, {{1, 2}, {3, 5}});
  CHECK(inverse(m) * m == Matrix::identity(Q, 2));
  CHECK_THROWS_AS(inverse(Matrix::from_ints(Q, {{1, 2}, {2, 4}})), NotInvertible);
  CHECK(inverse(Matrix::zero(Q, 0, 0)) == Matrix::zero(Q, 0, 0));
}

TEST_CASE("block assembly and kron") {
  Matrix a = Matrix::from_ints(Q, {{1, 2}});
  Matrix b = Matrix::from_ints(Q, {{3}, {4}});
  Matrix block = assemble_blocks(Q, {1, 2}, {2, 1}, {{0, 0, a}, {1, 1, b}});
  CHECK(block == Matrix::from_ints(Q, {{1, 2, 0}, {0, 0, 3}, {0, 0, 4}}));
  CHECK(hstack({a, Matrix::from_ints(Q, {{7, 8}})}, Q, 1) == Matrix::from_ints(Q, {{1, 2, 7, 8}}));
  CHECK(diag_blocks(Q, {Matrix::from_ints(Q, {{2}}), Matrix::from_ints(Q, {{3}})}) ==
        Matrix::from_ints(Q, {{2, 0}, {0, 3}}));
  CHECK_THROWS_AS(assemble_blocks(Q, {1}, {1}, {{0, 0, b}}), ShapeError);

  Matrix k = kron(Matrix::from_ints(Q, {{1, 2}, {0, 1}}), Matrix::identity(Q, 2));
  CHECK(k == Matrix::from_ints(Q, {{1, 0, 2, 0}, {0, 1, 0, 2}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
}

TEST_CASE("empty matrices are first-class") {
  Matrix e = Matrix::zero(Q, 0, 3);
  Matrix f = Matrix::zero(Q, 3, 0);
  CHECK((e * f).rows() == 0);
  CHECK((f * e) == Matrix::zero(Q, 3, 3));
  CHECK(rank(e) == 0);
  CHECK(kernel_basis(e).cols() == 3);
  CHECK(column_space_basis(f).cols() == 0);
}

TEST_CASE("matrix literals with rational entries") {
  Matrix m = Matrix::from_strings({{"1/2", "-2/3"}, {"0", "5"}});
  CHECK(m.at(0, 0) == Scalar::rational(1, 2));
  CHECK(m.at(0, 1) == Scalar::rational(-2, 3));
  CHECK(det(m) == Scalar::rational(5, 2));
}
