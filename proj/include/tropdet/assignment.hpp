#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tropdet/matrix.hpp"

namespace tropical {

/// perm[i] is the column picked in row i; value is the sum along perm.
struct Transversal {
  std::vector<std::size_t> perm;
  Entry value = 0;

  bool operator==(const Transversal&) const = default;
};

enum class Objective { Max, Min };

// Maximum transversal sum (tdet). O(n^3) Hungarian method with integer
// potentials. Throws ShapeError on non-square or empty input.
Transversal tdet(const IntMatrix& a);

// Minimum transversal sum (tropdet).
Transversal tropdet(const IntMatrix& a);

Transversal solve_assignment(const IntMatrix& a, Objective objective);

inline constexpr std::size_t kBruteForceMaxN = 10;

// Enumerates all n! permutations. Ties go to the lexicographically smallest
// permutation. Throws SizeGuardError for n > kBruteForceMaxN.
Transversal brute_assignment(const IntMatrix& a, Objective objective);

// Sum along perm; throws ShapeError if perm is not a permutation of the columns.
Entry transversal_sum(const IntMatrix& a, std::span<const std::size_t> perm);

/// Result of has_transversal_above. The witness lists (row, column) pairs,
/// min(rows, cols) of them, each entry strictly above the threshold.
struct TransversalCheck {
  bool exists = false;
  std::optional<std::vector<std::pair<std::size_t, std::size_t>>> witness;

  explicit operator bool() const { return exists; }
};

// Works on rectangular matrices: a full transversal has min(rows, cols) cells.
TransversalCheck has_transversal_above(const IntMatrix& a, Entry threshold);

}  // namespace tropical
