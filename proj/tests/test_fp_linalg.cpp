#include <algorithm>
#include <random>

#include <catch_amalgamated.hpp>

#include "largeness/fp_linalg.hpp"
#include "support.hpp"

using namespace largeness;

TEST_CASE("FpMatrix construction", "[fp_linalg]") {
  CHECK_THROWS_AS(FpMatrix(4, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(FpMatrix(1, 2, 2), std::invalid_argument);
  FpEntries e(1, 3);
  e << -1, 7, 3;
  FpMatrix m(5, e);
  CHECK(m(0, 0) == 4);
  CHECK(m(0, 1) == 2);
  CHECK(m(0, 2) == 3);
  CHECK(inverse_mod(3, 7) == 5);
  CHECK_THROWS(inverse_mod(0, 7));
}

TEST_CASE("rank", "[fp_linalg]") {
  CHECK(rank(FpMatrix::identity(2, 3)) == 3);
  CHECK(rank(FpMatrix(3, 4, 5)) == 0);
  FpEntries e(2, 2);
  e << 1, 1, 1, 1;
  CHECK(rank(FpMatrix(2, e)) == 1);
  // [[1,2],[2,1]] has determinant -3: singular mod 3 only.
  e << 1, 2, 2, 1;
  CHECK(rank(FpMatrix(3, e)) == 1);
  CHECK(rank(FpMatrix(5, e)) == 2);
}

TEST_CASE("kernel_basis", "[fp_linalg]") {
  CHECK(kernel_basis(FpMatrix::identity(3, 4)).empty());
  CHECK(kernel_basis(FpMatrix(2, 2, 3)).size() == 3);

  FpEntries e(1, 2);
  e << 1, 1;
  auto k = kernel_basis(FpMatrix(2, e));
  REQUIRE(k.size() == 1);
  CHECK(k[0](0) == 1);
  CHECK(k[0](1) == 1);
}

TEST_CASE("induced_rank", "[fp_linalg]") {
  std::vector<FpVector> basis{FpVector::Unit(2, 0), FpVector::Unit(2, 1)};
  CHECK(induced_rank(FpMatrix::identity(3, 2), basis) == 2);
  CHECK(induced_rank(FpMatrix(3, 2, 2), basis) == 0);
  FpEntries e(2, 2);
  e << 1, 0, 0, 0;
  CHECK(induced_rank(FpMatrix(3, e), basis) == 1);

  std::vector<FpVector> wrong{FpVector::Unit(3, 0)};
  CHECK_THROWS_AS(induced_rank(FpMatrix::identity(3, 2), wrong),
                  std::invalid_argument);
}

TEST_CASE("rank agrees with row-space enumeration", "[fp_linalg][property]") {
  std::mt19937 rng(1);
  for (std::int64_t p : {2, 3, 5}) {
    for (int trial = 0; trial < 60; ++trial) {
      auto rows = std::uniform_int_distribution<Index>(1, p == 5 ? 3 : 4)(rng);
      auto cols = std::uniform_int_distribution<Index>(1, 5)(rng);
      auto m    = testing::random_matrix(rng, p, rows, cols);
      CHECK(rank(m) == testing::brute_force_rank(m));
    }
  }
}

TEST_CASE("linear algebra invariants on random matrices", "[fp_linalg][property]") {
  std::mt19937 rng(2);
  for (std::int64_t p : {2, 3, 7}) {
    for (int trial = 0; trial < 100; ++trial) {
      auto rows = std::uniform_int_distribution<Index>(0, 8)(rng);
      auto cols = std::uniform_int_distribution<Index>(0, 8)(rng);
      auto m    = testing::random_matrix(rng, p, rows, cols);
      // Bias toward rank deficiency.
      if (rows > 2 && trial % 2 == 0) {
        FpEntries e = m.entries();
        e.row(rows - 1) = e.row(0);
        m = FpMatrix(p, e);
      }
      auto const r = rank(m);
      CHECK(r == rank(m.transpose()));
      CHECK(r <= static_cast<std::size_t>(std::min(rows, cols)));

      auto const kernel = kernel_basis(m);
      CHECK(static_cast<std::size_t>(cols) == r + kernel.size());
      for (auto const& v : kernel) {
        CHECK((m * v).isZero());
      }

      std::vector<Index> order(static_cast<std::size_t>(rows));
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      FpEntries shuffled(rows, cols);
      for (Index i = 0; i < rows; ++i) {
        shuffled.row(i) = m.entries().row(order[static_cast<std::size_t>(i)]);
      }
      FpMatrix s(p, shuffled);
      CHECK(rank(s) == r);
      CHECK(kernel_basis(s).size() == kernel.size());

      // induced rank on a random subspace never exceeds either bound
      std::vector<FpVector> sub;
      for (int j = 0; j < 3 && cols > 0; ++j) {
        FpVector v(cols);
        for (Index i = 0; i < cols; ++i) {
          v(i) = std::uniform_int_distribution<std::int64_t>(0, p - 1)(rng);
        }
        sub.push_back(v);
      }
      CHECK(induced_rank(m, sub) <= std::min<std::size_t>(r, sub.size()));
    }
  }
}

TEST_CASE("pivoting is deterministic", "[fp_linalg]") {
  std::mt19937 rng(5);
  auto         m = testing::random_matrix(rng, 3, 6, 6);
  auto         a = row_reduce(m);
  auto         b = row_reduce(m);
  CHECK(a.pivot_cols == b.pivot_cols);
  CHECK(a.reduced == b.reduced);
}
