#include <doctest.h>

#include "../support/oracles.hpp"
#include "curvspace/linsolve.hpp"
#include "curvspace/scenario.hpp"

using namespace curvspace;

TEST_SUITE_BEGIN("linsolve");

TEST_CASE("rref fixed points") {
  Matrix id = Matrix::identity(3, Field::Q);
  RrefResult r = rref(id);
  CHECK(r.reduced == id);
  CHECK(r.rank == 3);
  CHECK(r.pivot_columns == std::vector<std::size_t>{0, 1, 2});

  Matrix zero(2, 3, Field::Q);
  r = rref(zero);
  CHECK(r.reduced == zero);
  CHECK(r.rank == 0);
  CHECK(r.pivot_columns.empty());
}

TEST_CASE("rank-one reduction") {
  Matrix m({{1, 2, 3}, {2, 4, 6}});
  RrefResult r = rref(m);
  CHECK(r.rank == 1);
  CHECK(r.pivot_columns == std::vector<std::size_t>{0});
  CHECK(r.reduced == Matrix({{1, 2, 3}, {0, 0, 0}}));
}

TEST_CASE("rref over the Gaussian rationals") {
  // second row is -i times the first
  Matrix m(2, 2, Field::QI);
  m.at(0, 0) = Scalar::i();
  m.at(0, 1) = Scalar(1L).promoted(Field::QI);
  m.at(1, 0) = Scalar(1L).promoted(Field::QI);
  m.at(1, 1) = -Scalar::i();
  RrefResult r = rref(m);
  CHECK(r.rank == 1);
  CHECK(r.reduced.at(0, 0).is_one());
  CHECK(r.reduced.at(0, 1) == -Scalar::i());
}

TEST_CASE("kernel dimensions") {
  CHECK(kernel_basis_matrix(Matrix::identity(4, Field::Q)).cols() == 0);
  CHECK(kernel_basis_matrix(Matrix(2, 3, Field::Q)).cols() == 3);
  CHECK(kernel_basis_matrix(Matrix({{1, 2, 3}, {2, 4, 6}})).cols() == 2);
}

TEST_CASE("solve") {
  Matrix id = Matrix::identity(3, Field::Q);
  Matrix b(3, 1, Field::Q);
  b.at(0, 0) = Scalar(2L);
  b.at(2, 0) = Scalar(-7L);
  auto x = solve(id, b);
  REQUIRE(x);
  CHECK(*x == b);

  Matrix zero(2, 2, Field::Q);
  Matrix nz(2, 1, Field::Q);
  nz.at(0, 0) = Scalar(1L);
  CHECK_FALSE(solve(zero, nz));

  Matrix m({{1, 1}, {1, -1}});
  Matrix rhs(2, 1, Field::Q);
  rhs.at(0, 0) = Scalar(2L);
  auto sol = solve(m, rhs);
  REQUIRE(sol);
  CHECK(sol->at(0, 0) == Scalar(1L));
  CHECK(sol->at(1, 0) == Scalar(1L));
}

TEST_CASE("rank + kernel dimension equals column count") {
  DetRng rng(11);
  for (int t = 0; t < 100; ++t) {
    std::size_t rows = 1 + rng.int_in(0, 5);
    std::size_t cols = 1 + rng.int_in(0, 5);
    Field f = t % 2 ? Field::QI : Field::Q;
    Matrix m = curvtest::random_matrix(rng, rows, cols, f, -4, 4);
    RrefResult r = rref(m);
    CHECK(r.rank + kernel_basis_matrix(m).cols() == cols);
    CHECK(r.rank == curvtest::naive_rank(m));
  }
}

TEST_CASE("rref is idempotent") {
  DetRng rng(13);
  for (int t = 0; t < 50; ++t) {
    Matrix m = curvtest::random_matrix(rng, 4, 5, Field::Q, -9, 9);
    Matrix once = rref(m).reduced;
    CHECK(rref(once).reduced == once);
  }
}

TEST_CASE("solve then substitute reproduces the right-hand side exactly") {
  DetRng rng(17);
  for (int t = 0; t < 1000; ++t) {
    std::size_t rows = 1 + rng.int_in(0, 3);
    std::size_t cols = 1 + rng.int_in(0, 3);
    Field f = t % 3 == 0 ? Field::QI : Field::Q;
    Matrix a = curvtest::random_matrix(rng, rows, cols, f, -9, 9);
    Matrix x0 = curvtest::random_matrix(rng, cols, 1, f, -9, 9);
    Matrix b = a * x0;
    auto x = solve(a, b);
    REQUIRE(x);
    CHECK(a * *x == b);
  }
}

TEST_CASE("field mismatch is rejected") {
  Matrix q = Matrix::identity(2, Field::Q);
  Matrix qi = Matrix::identity(2, Field::QI);
  CHECK_THROWS_AS(q + qi, FieldMismatchError);
  CHECK_THROWS_AS(hstack(q, qi), FieldMismatchError);
  CHECK_THROWS_AS(q * qi, FieldMismatchError);
}

TEST_SUITE_END();
