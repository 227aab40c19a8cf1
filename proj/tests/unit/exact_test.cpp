#include <random>

#include "doctest.h"
#include "szf/error.hpp"
#include "szf/exact.hpp"
#include "test_oracles.hpp"

using namespace szf;
using szf::testing::laplace_determinant;
using szf::testing::minor_rank;

namespace {

ExactMatrix random_matrix(int rows, int cols, int rank_hint, std::mt19937_64& rng) {
  // Product of random rows x k and k x cols factors, so the rank is at most k.
  std::uniform_int_distribution<long> entry(-3, 3);
  ExactMatrix left(rows, rank_hint), right(rank_hint, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < rank_hint; ++c) {
      left.at(r, c) = mpq_class(entry(rng), 1 + rng() % 3);
      left.at(r, c).canonicalize();
    }
  for (int r = 0; r < rank_hint; ++r)
    for (int c = 0; c < cols; ++c) right.at(r, c) = entry(rng);
  return left * right;
}

std::vector<std::vector<mpq_class>> rows_of(const ExactMatrix& m) {
  std::vector<std::vector<mpq_class>> out(static_cast<std::size_t>(m.rows()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out[static_cast<std::size_t>(r)].push_back(m.at(r, c));
  return out;
}

}  // namespace

TEST_CASE("identity and zero") {
  const auto id = exact_rank(ExactMatrix::identity(5));
  CHECK(id.rank == 5);
  CHECK(id.nullity == 0);
  CHECK(id.kernel_basis.empty());
  const auto zero = exact_rank(ExactMatrix(3, 4));
  CHECK(zero.rank == 0);
  CHECK(zero.nullity == 4);
  CHECK(zero.kernel_basis.size() == 4);
  CHECK(exact_rank(ExactMatrix(0, 0)).rank == 0);
}

TEST_CASE("a nonzero 3x3 minor of the unit octahedron form") {
  // Unit off-diagonal entries on K6 minus the matching {12, 34, 56}, zero diagonal.
  std::vector<std::vector<long>> rows(6, std::vector<long>(6, 1));
  for (int i = 0; i < 6; ++i) rows[i][i] = 0;
  for (auto [a, b] : {std::pair{0, 1}, {2, 3}, {4, 5}}) rows[a][b] = rows[b][a] = 0;
  const ExactMatrix m = ExactMatrix::from_integers(rows);
  const ExactMatrix minor = m.submatrix({0, 2, 4}, {1, 3, 5});
  CHECK(minor == ExactMatrix::from_integers({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
  CHECK(determinant(minor) == 2);
  CHECK(laplace_determinant(rows_of(minor)) == 2);
  CHECK(rank_of(m) >= 3);
}

TEST_CASE("Bareiss rank agrees with the largest nonzero minor") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 5);
    const int cols = 1 + static_cast<int>(rng() % 5);
    const int k = 1 + static_cast<int>(rng() % 4);
    const ExactMatrix m = random_matrix(rows, cols, k, rng);
    const auto report = exact_rank(m);
    CHECK(report.rank == minor_rank(m));
    CHECK(report.rank + report.nullity == cols);
    REQUIRE(static_cast<int>(report.kernel_basis.size()) == report.nullity);
    for (const auto& x : report.kernel_basis) {
      for (const auto& y : m.apply(x)) CHECK(sgn(y) == 0);
      CHECK(std::any_of(x.begin(), x.end(), [](const mpq_class& v) { return sgn(v) != 0; }));
    }
    if (report.nullity > 0) {
      // The basis is independent.
      ExactMatrix basis(report.nullity, cols);
      for (int i = 0; i < report.nullity; ++i)
        for (int c = 0; c < cols; ++c) basis.at(i, c) = report.kernel_basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
      CHECK(rank_of(basis) == report.nullity);
    }
    if (rows == cols) CHECK(determinant(m) == laplace_determinant(rows_of(m)));
  }
}

TEST_CASE("rank invariants") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    ExactMatrix m = random_matrix(6, 7, 1 + static_cast<int>(rng() % 6), rng);
    const int r = rank_of(m);
    CHECK(rank_of(m.transpose()) == r);
    for (int c = 0; c < m.cols(); ++c) m.at(2, c) *= mpq_class(-7, 3);
    CHECK(rank_of(m) == r);
    CHECK(rank_of(m.stacked(m)) == r);
  }
  CHECK(determinant(ExactMatrix::from_integers({{2, 1}, {7, 4}})) == 1);
  CHECK_THROWS_AS(determinant(ExactMatrix(2, 3)), ContractViolation);
  CHECK_THROWS_AS(ExactMatrix(2, 3) * ExactMatrix(2, 3), ContractViolation);
}

TEST_CASE("matrix text round trip") {
  ExactMatrix m(2, 3);
  m.at(0, 0) = mpq_class(1, 2);
  m.at(0, 2) = -4;
  m.at(1, 1) = mpq_class(-22, 7);
  const std::string text = dump_matrix(m);
  CHECK(text == "1/2\t0\t-4\n0\t-22/7\t0\n");
  CHECK(parse_matrix(text) == m);
  CHECK_THROWS_AS(parse_matrix("1\t2\n3\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("1\tx\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("1/0\n"), ParseError);
}
