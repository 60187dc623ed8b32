#pragma once

#include <cstdint>
#include <functional>

#include "tropdet/matrix.hpp"

namespace tropical {

inline constexpr std::uint64_t kDefaultWorkBudget = 50'000'000;

struct EnumOptions {
  // Maximum number of matrices visited before BudgetError is thrown.
  std::uint64_t budget = kDefaultWorkBudget;
  // Worker threads. With jobs > 1 the visitor is called concurrently.
  unsigned jobs = 1;
  // Largest n accepted; exhaustive enumeration beyond 5 is not practical.
  Entry max_n = 5;
};

using Visitor = std::function<void(const IntMatrix&)>;

/// Visits every member of D(m,n) once, rows in lexicographic order. Each row
/// is a composition of m whose parts stay within the column remainders and
/// leave no column needing more than m per remaining row. Returns the count.
std::uint64_t enumerate_D(Entry m, Entry n, const Visitor& visit, const EnumOptions& options = {});

std::uint64_t count_D(Entry m, Entry n, const EnumOptions& options = {});

struct EnumStats {
  Entry m = 0;
  Entry n = 0;
  std::uint64_t count = 0;
  Entry extremum = 0;
  IntMatrix witness;  // first member in enumeration order attaining extremum
};

// min over D(m,n) of tdet.
EnumStats brute_L(Entry m, Entry n, const EnumOptions& options = {});

// max over D(m,n) of tropdet.
EnumStats brute_U(Entry m, Entry n, const EnumOptions& options = {});

// Sum of m uniformly random n x n permutation matrices, from a seeded
// Mersenne Twister. Reaches all of D(m,n), but not uniformly.
DSMatrix random_ds(Entry m, Entry n, std::uint64_t seed);

}  // namespace tropical
