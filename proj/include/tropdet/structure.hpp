#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "tropdet/matrix.hpp"

namespace tropical {

/// Maximum matching in the bipartite graph whose edges are the entries
/// strictly above a threshold.
struct Matching {
  std::vector<std::optional<std::size_t>> row_mate;  // column matched to row i
  std::vector<std::optional<std::size_t>> col_mate;  // row matched to column j
  std::size_t size = 0;

  // Matched (row, column) pairs in increasing row order.
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;
};

// Hopcroft-Karp over the indicator of entries > threshold.
Matching max_matching_above(const IntMatrix& a, Entry threshold);

/// A maximal block of entries <= threshold and the rearrangement that moves
/// it to the lower-right corner.
///
/// Blocks with an empty side count: R = {} with S = all columns is always a
/// block of size n, so the size is never below max(rows, cols), and it equals
/// rows + cols - (maximum matching size) (Konig).
struct BlockDecomposition {
  Entry threshold = 0;
  std::vector<std::size_t> row_set;  // R, ascending
  std::vector<std::size_t> col_set;  // S, ascending
  std::size_t k1 = 0;                // rows - |R|
  std::size_t k2 = 0;                // cols - |S|
  std::vector<std::size_t> row_perm;  // rows outside R in order, then R
  std::vector<std::size_t> col_perm;  // columns outside S in order, then S

  std::size_t size() const { return row_set.size() + col_set.size(); }

  // Hall's condition for a full transversal of entries > threshold.
  bool hall_holds() const { return size() <= std::max(k1 + row_set.size(), k2 + col_set.size()); }
};

// R is the set of rows reachable from unmatched rows by alternating paths;
// it is contained in the row set of every maximum block, so the result has
// the fewest rows possible.
BlockDecomposition largest_low_block(const IntMatrix& a, Entry threshold);

struct ArrangedMatrix {
  IntMatrix matrix;
  BlockDecomposition block;
};

// Permutes rows and columns so the largest_low_block sits lower-right.
ArrangedMatrix arrange_block_corner(const IntMatrix& a, Entry threshold);

}  // namespace tropical
