#include <random>

#include "doctest.h"
#include "json.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tropdet/errors.hpp"
#include "tropdet/matrix.hpp"

using namespace tropical;

TEST_CASE("parse_matrix reads plain grids") {
  CHECK(parse_matrix("1 0\n0 1") == IntMatrix::identity(2));
  CHECK(parse_matrix("1 0\r\n0 1\r\n") == IntMatrix::identity(2));
  CHECK(parse_matrix("5") == IntMatrix{{5}});
  CHECK(parse_matrix("  3\t4 \n5 6\n\n") == IntMatrix{{3, 4}, {5, 6}});

  const IntMatrix c = parse_matrix(fixture::kCirculant46);
  CHECK(c.rows() == 6);
  CHECK(c.cols() == 6);
  CHECK(c(3, 0) == 1);
  CHECK(c(3, 1) == 0);
}

TEST_CASE("parse_matrix rejects malformed input") {
  CHECK_THROWS_AS(parse_matrix("1 2\n3"), ShapeError);
  CHECK_THROWS_AS(parse_matrix(""), ParseError);
  CHECK_THROWS_AS(parse_matrix("\n\n  \n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("1 -2\n3 4"), ParseError);
  CHECK_THROWS_AS(parse_matrix("1 2.5\n3 4"), ParseError);
  CHECK_THROWS_AS(parse_matrix("1 x"), ParseError);
  CHECK_THROWS_AS(parse_matrix("99999999999999999999999"), ParseError);
  CHECK_THROWS_AS(parse_matrix("1 2\n\n3 4"), ShapeError);

  try {
    parse_matrix("1 2\n3 -4");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("validate_ds certifies members and reports the first bad line") {
  const DSMatrix ones = validate_ds(IntMatrix::constant(3, 1));
  CHECK(ones.m() == 3);
  CHECK(ones.n() == 3);

  const DSMatrix ex = validate_ds(parse_matrix(fixture::kExample75));
  CHECK(ex.m() == 7);
  CHECK(validate_ds(parse_matrix(fixture::kRubik96)).m() == 9);

  CHECK_THROWS_AS(validate_ds(IntMatrix(2, 3, 1)), ShapeError);
  try {
    validate_ds(IntMatrix{{1, 0}, {1, 0}});
    FAIL("expected ViolationError");
  } catch (const ViolationError& e) {
    CHECK(e.line() == ViolationError::Line::Column);
    CHECK(e.index() == 0);
    CHECK(e.sum() == 2);
    CHECK(e.expected() == 1);
    CHECK(std::string(e.what()).find("column 2 sums to 0") != std::string::npos);
  }
}

TEST_CASE("split is division with remainder") {
  CHECK(split(7, 5) == SplitParams{7, 5, 1, 2});
  CHECK(split(9, 6) == SplitParams{9, 6, 1, 3});
  CHECK(split(12, 4) == SplitParams{12, 4, 3, 0});
  CHECK_THROWS_AS(split(0, 4), DomainError);

  for (Entry n = 1; n <= 40; ++n)
    for (Entry m = 1; m <= 200; ++m) {
      const SplitParams p = split(m, n);
      REQUIRE(p.q * n + p.r == m);
      REQUIRE(p.r >= 0);
      REQUIRE(p.r < n);
    }
}

TEST_CASE("serialize plain and structured") {
  CHECK(serialize(IntMatrix::identity(2)) == "1 0\n0 1");
  CHECK(serialize(IntMatrix{{5}}) == "5");

  const auto doc = nlohmann::json::parse(serialize(IntMatrix{{1, 2}, {3, 4}}, Format::Structured));
  CHECK(doc["rows"] == 2);
  CHECK(doc["cols"] == 2);
  CHECK(doc["entries"][1][0] == 3);
  CHECK_FALSE(doc.contains("m"));

  const auto ds = nlohmann::json::parse(
      serialize(validate_ds(IntMatrix::constant(3, 2)), Format::Structured));
  CHECK(ds["m"] == 6);
}

TEST_CASE("plain format round-trips for random matrices") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> dim(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const IntMatrix a = oracle::random_matrix(rng, dim(rng), dim(rng), 0, 1'000'000);
    REQUIRE(parse_matrix(serialize(a)) == a);
  }
}

TEST_CASE("IntMatrix helpers") {
  const IntMatrix a{{1, 2, 3}, {4, 5, 6}};
  CHECK(a.transposed() == IntMatrix{{1, 4}, {2, 5}, {3, 6}});
  CHECK(a.row_sum(1) == 15);
  CHECK(a.col_sum(2) == 9);
  const std::vector<std::size_t> rows{1, 0}, cols{2, 0, 1};
  CHECK(a.permuted(rows, cols) == IntMatrix{{6, 4, 5}, {3, 1, 2}});
  CHECK_THROWS_AS(IntMatrix(2, 2, std::vector<Entry>{1, 2, 3}), ShapeError);
  CHECK_THROWS_AS(IntMatrix(1, 1, std::vector<Entry>{-1}), DomainError);
  IntMatrix b(2, 2);
  CHECK_THROWS_AS(b.set(0, 0, -1), DomainError);
  CHECK_THROWS_AS(b.at(2, 0), ShapeError);
}
