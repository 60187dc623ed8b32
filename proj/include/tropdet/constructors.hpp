#pragma once

#include <span>
#include <vector>

#include "tropdet/matrix.hpp"

namespace tropical {

/// Layout of the top-left block A1 (l1 x l2) in the min-tdet construction
///
///   [ A1 | A2 ]     A2: l1 x (n-l2), entries q or q+1, r of the q+1 per column
///   [ A3 | A4 ]     A3: (n-l1) x l2, entries q or q+1, r of the q+1 per row
///                   A4: constant q
///
/// A1 must absorb what is left of each line sum: row_targets[i] for row i,
/// col_targets[j] for column j, each entry capped at `cap` (= q).
struct BlockPlan {
  SplitParams params;
  Entry l1 = 0;
  Entry l2 = 0;
  Entry a = 0;  // total mass of A1
  std::vector<Entry> row_targets;
  std::vector<Entry> col_targets;
  Entry cap = 0;
};

// Non-negative integer matrix with the given marginals and every entry in
// [0, cap]. Greedy row-major fill, then augmenting-path repair for unmet
// demand. Deterministic. Throws InfeasibleError naming the violated bound.
IntMatrix fill_bounded_transportation(std::span<const Entry> row_targets,
                                      std::span<const Entry> col_targets, Entry cap);

// Requires the hard regime (q, r >= 1, n > 2r + rq); throws DomainError.
// l1 = l2 = l when the square inequality holds at the minimal l, else (l1, l2) = (l + 1, l).
BlockPlan plan_hard_case(Entry m, Entry n);

// A member of D(m,n) with tdet equal to L(m,n).
DSMatrix construct_min_tdet(Entry m, Entry n);

// A member of D(m,n) with tropdet equal to U(m,n).
DSMatrix construct_max_tropdet(Entry m, Entry n);

}  // namespace tropical
