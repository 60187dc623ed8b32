#include "tropdet/structure.hpp"

#include <limits>
#include <queue>

namespace tropical {

std::vector<std::pair<std::size_t, std::size_t>> Matching::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(size);
  for (std::size_t i = 0; i < row_mate.size(); ++i)
    if (row_mate[i]) out.emplace_back(i, *row_mate[i]);
  return out;
}

namespace {

constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

class HopcroftKarp {
 public:
  HopcroftKarp(const IntMatrix& a, Entry threshold)
      : rows_(a.rows()), cols_(a.cols()), adj_(rows_), dist_(rows_) {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (a(i, j) > threshold) adj_[i].push_back(j);
    result_.row_mate.assign(rows_, std::nullopt);
    result_.col_mate.assign(cols_, std::nullopt);
  }

  Matching run() {
    while (bfs()) {
      for (std::size_t i = 0; i < rows_; ++i)
        if (!result_.row_mate[i] && dfs(i)) ++result_.size;
    }
    return std::move(result_);
  }

 private:
  bool bfs() {
    std::queue<std::size_t> queue;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (!result_.row_mate[i]) {
        dist_[i] = 0;
        queue.push(i);
      } else {
        dist_[i] = kInf;
      }
    }
    bool found = false;
    while (!queue.empty()) {
      std::size_t i = queue.front();
      queue.pop();
      for (std::size_t j : adj_[i]) {
        const auto& mate = result_.col_mate[j];
        if (!mate) {
          found = true;
        } else if (dist_[*mate] == kInf) {
          dist_[*mate] = dist_[i] + 1;
          queue.push(*mate);
        }
      }
    }
    return found;
  }

  bool dfs(std::size_t i) {
    for (std::size_t j : adj_[i]) {
      const auto mate = result_.col_mate[j];
      if (!mate || (dist_[*mate] == dist_[i] + 1 && dfs(*mate))) {
        result_.row_mate[i] = j;
        result_.col_mate[j] = i;
        return true;
      }
    }
    dist_[i] = kInf;
    return false;
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> dist_;
  Matching result_;
};

}  // namespace

Matching max_matching_above(const IntMatrix& a, Entry threshold) {
  return HopcroftKarp(a, threshold).run();
}

BlockDecomposition largest_low_block(const IntMatrix& a, Entry threshold) {
  const Matching matching = max_matching_above(a, threshold);

  // Alternating reachability from unmatched rows: row -> any high-entry
  // column, column -> its matched row.
  std::vector<bool> row_seen(a.rows(), false);
  std::vector<bool> col_seen(a.cols(), false);
  std::queue<std::size_t> queue;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (!matching.row_mate[i]) {
      row_seen[i] = true;
      queue.push(i);
    }
  }
  while (!queue.empty()) {
    std::size_t i = queue.front();
    queue.pop();
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) <= threshold || col_seen[j]) continue;
      col_seen[j] = true;
      // Every reachable column is matched, or the matching would not be maximum.
      std::size_t next = *matching.col_mate[j];
      if (!row_seen[next]) {
        row_seen[next] = true;
        queue.push(next);
      }
    }
  }

  BlockDecomposition block;
  block.threshold = threshold;
  for (std::size_t i = 0; i < a.rows(); ++i)
    (row_seen[i] ? block.row_set : block.row_perm).push_back(i);
  for (std::size_t j = 0; j < a.cols(); ++j)
    (col_seen[j] ? block.col_perm : block.col_set).push_back(j);
  block.k1 = block.row_perm.size();
  block.k2 = block.col_perm.size();
  block.row_perm.insert(block.row_perm.end(), block.row_set.begin(), block.row_set.end());
  block.col_perm.insert(block.col_perm.end(), block.col_set.begin(), block.col_set.end());
  return block;
}

ArrangedMatrix arrange_block_corner(const IntMatrix& a, Entry threshold) {
  BlockDecomposition block = largest_low_block(a, threshold);
  IntMatrix arranged = a.permuted(block.row_perm, block.col_perm);
  return {std::move(arranged), std::move(block)};
}

}  // namespace tropical
