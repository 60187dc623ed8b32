#include <numeric>
#include <random>

#include "doctest.h"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tropdet/assignment.hpp"
#include "tropdet/constructors.hpp"
#include "tropdet/enumeration.hpp"
#include "tropdet/errors.hpp"

using namespace tropical;

TEST_CASE("tdet of reference matrices") {
  const IntMatrix ex75 = parse_matrix(fixture::kExample75);
  const Transversal t = tdet(ex75);
  CHECK(t.value == 9);
  CHECK(transversal_sum(ex75, t.perm) == 9);
  // A known optimal transversal: columns 4, 3, 2, 1, 5 (1-indexed).
  const std::vector<std::size_t> boxed{3, 2, 1, 0, 4};
  CHECK(transversal_sum(ex75, boxed) == 9);

  CHECK(tdet(parse_matrix(fixture::kCirculant46)).value == 6);
  CHECK(tdet(parse_matrix(fixture::kExample76)).value == 10);
  CHECK(tdet(parse_matrix(fixture::kExample65)).value == 8);
  CHECK(tdet(IntMatrix::constant(5, 3)).value == 15);
}

TEST_CASE("tropdet basics") {
  for (std::size_t n = 2; n <= 6; ++n) {
    const Transversal t = tropdet(IntMatrix::identity(n));
    CHECK(t.value == 0);
    for (std::size_t i = 0; i < n; ++i) CHECK(t.perm[i] != i);
  }
  CHECK(tropdet(IntMatrix::constant(4, 2)).value == 8);
  CHECK(tropdet(IntMatrix{{7}}).value == 7);
  // Oracle value for this 3x3 construction, enumerated over all 6 permutations.
  const DSMatrix a = construct_max_tropdet(5, 3);
  CHECK(oracle::perm_extremum(a.matrix(), false) == 4);
  CHECK(tropdet(a.matrix()).value == 4);
}

TEST_CASE("non-square input is a shape error") {
  CHECK_THROWS_AS(tdet(IntMatrix(2, 3)), ShapeError);
  CHECK_THROWS_AS(tropdet(IntMatrix(3, 2)), ShapeError);
  CHECK_THROWS_AS(tdet(IntMatrix()), ShapeError);
}

TEST_CASE("brute_assignment") {
  CHECK(brute_assignment(IntMatrix{{7}}, Objective::Max).value == 7);
  CHECK(brute_assignment(IntMatrix{{7}}, Objective::Min).value == 7);

  const IntMatrix a{{1, 2}, {3, 4}};
  const Transversal hi = brute_assignment(a, Objective::Max);
  CHECK(hi.value == 5);
  CHECK(hi.perm == std::vector<std::size_t>{0, 1});  // both sums are 5; lexicographic tie-break
  const Transversal lo = brute_assignment(a, Objective::Min);
  CHECK(lo.value == 5);
  CHECK(lo.perm == std::vector<std::size_t>{0, 1});

  const IntMatrix b{{0, 2}, {3, 0}};
  CHECK(brute_assignment(b, Objective::Max).perm == std::vector<std::size_t>{1, 0});

  CHECK(brute_assignment(parse_matrix(fixture::kExample75), Objective::Max).value == 9);
  CHECK(brute_assignment(parse_matrix(fixture::kCirculant46), Objective::Max).value == 6);
  CHECK(brute_assignment(parse_matrix(fixture::kExample76), Objective::Max).value == 10);

  CHECK_THROWS_AS(brute_assignment(IntMatrix::identity(11), Objective::Max), SizeGuardError);
}

TEST_CASE("Hungarian agrees with the permutation oracle") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> dim(1, 7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = dim(rng);
    const IntMatrix a = oracle::random_matrix(rng, n, n, 0, 20);
    const Transversal hi = tdet(a);
    const Transversal lo = tropdet(a);
    REQUIRE(hi.value == oracle::perm_extremum(a, true));
    REQUIRE(lo.value == oracle::perm_extremum(a, false));
    REQUIRE(transversal_sum(a, hi.perm) == hi.value);
    REQUIRE(transversal_sum(a, lo.perm) == lo.value);
    REQUIRE(lo.value <= hi.value);
  }
}

TEST_CASE("values are invariant under row/column permutation and shift by n*c") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 9;
    const IntMatrix a = oracle::random_matrix(rng, n, n, 0, 50);
    std::vector<std::size_t> rp(n), cp(n);
    std::iota(rp.begin(), rp.end(), std::size_t{0});
    std::iota(cp.begin(), cp.end(), std::size_t{0});
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    const IntMatrix b = a.permuted(rp, cp);
    REQUIRE(tdet(b).value == tdet(a).value);
    REQUIRE(tropdet(b).value == tropdet(a).value);

    const Entry c = 1 + trial % 5;
    IntMatrix shifted = a;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) shifted.set(i, j, a(i, j) + c);
    REQUIRE(tdet(shifted).value == tdet(a).value + static_cast<Entry>(n) * c);
    REQUIRE(tropdet(shifted).value == tropdet(a).value + static_cast<Entry>(n) * c);
  }
}

TEST_CASE("has_transversal_above") {
  CHECK(has_transversal_above(IntMatrix::identity(3), 0));
  const auto none = has_transversal_above(IntMatrix{{1, 1}, {0, 0}}, 0);
  CHECK_FALSE(none.exists);
  CHECK_FALSE(none.witness.has_value());

  const auto yes = has_transversal_above(parse_matrix(fixture::kExample75), 0);
  REQUIRE(yes.exists);
  CHECK(yes.witness->size() == 5);
  for (auto [i, j] : *yes.witness) CHECK(parse_matrix(fixture::kExample75)(i, j) > 0);

  // Rectangular: a full transversal covers the shorter side.
  CHECK(has_transversal_above(IntMatrix{{0, 3, 0}, {2, 0, 0}}, 1));
  CHECK_FALSE(has_transversal_above(IntMatrix{{0, 3, 0}, {0, 2, 0}}, 1));
  CHECK(has_transversal_above(IntMatrix(0, 4), 0));
}

TEST_CASE("every sampled member of D(m,n) has a nonzero transversal and tdet >= m") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Entry m = 1 + static_cast<Entry>(seed % 13);
    const Entry n = 1 + static_cast<Entry>(seed % 9);
    const DSMatrix a = random_ds(m, n, seed);
    REQUIRE(has_transversal_above(a.matrix(), 0));
    REQUIRE(tdet(a.matrix()).value >= m);
  }
}
