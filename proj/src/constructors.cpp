#include "tropdet/constructors.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "tropdet/bounds.hpp"
#include "tropdet/errors.hpp"

namespace tropical {

namespace {

std::size_t idx(Entry v) { return static_cast<std::size_t>(v); }

// Pushes unmet demand through the residual network
//   source -> row i (rows_left[i]) -> column j (cap - x_ij, or x_ij backwards)
//   -> sink (cols_left[j])
// until no augmenting path is left.
void repair_with_flow(std::vector<Entry>& x, std::size_t rows, std::size_t cols, Entry cap,
                      std::vector<Entry>& rows_left, std::vector<Entry>& cols_left) {
  // Node ids: rows are 0..rows-1, columns rows..rows+cols-1.
  const std::size_t nodes = rows + cols;
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(nodes);

  while (true) {
    std::fill(parent.begin(), parent.end(), kNone);
    std::queue<std::size_t> queue;
    for (std::size_t i = 0; i < rows; ++i) {
      if (rows_left[i] > 0) {
        parent[i] = i;  // root
        queue.push(i);
      }
    }
    std::size_t sink_col = kNone;
    while (!queue.empty() && sink_col == kNone) {
      const std::size_t u = queue.front();
      queue.pop();
      if (u < rows) {
        for (std::size_t j = 0; j < cols; ++j) {
          const std::size_t v = rows + j;
          if (parent[v] == kNone && x[u * cols + j] < cap) {
            parent[v] = u;
            if (cols_left[j] > 0) {
              sink_col = j;
              break;
            }
            queue.push(v);
          }
        }
      } else {
        const std::size_t j = u - rows;
        for (std::size_t i = 0; i < rows; ++i) {
          if (parent[i] == kNone && x[i * cols + j] > 0) {
            parent[i] = u;
            queue.push(i);
          }
        }
      }
    }
    if (sink_col == kNone) return;

    // Bottleneck along the path, then apply it.
    Entry delta = cols_left[sink_col];
    std::size_t v = rows + sink_col;
    while (true) {
      const std::size_t u = parent[v];
      if (u == v) break;
      if (v >= rows) {
        delta = std::min(delta, cap - x[u * cols + (v - rows)]);
      } else {
        delta = std::min(delta, x[v * cols + (u - rows)]);
      }
      v = u;
    }
    delta = std::min(delta, rows_left[v]);

    const std::size_t source_row = v;
    v = rows + sink_col;
    while (v != source_row) {
      const std::size_t u = parent[v];
      if (v >= rows) {
        x[u * cols + (v - rows)] += delta;
      } else {
        x[v * cols + (u - rows)] -= delta;
      }
      v = u;
    }
    rows_left[source_row] -= delta;
    cols_left[sink_col] -= delta;
  }
}

// A2/A3 excess pattern: column j of an l-row strip receives its r cells at
// rows j*r, j*r + 1, ... (mod l), so row counts differ by at most one.
bool excess_cell(Entry i, Entry j, Entry r, Entry l) {
  return ((i - (j * r) % l) % l + l) % l < r;
}

// A2, A3, A4 laid out; the A1 corner is left at zero.
IntMatrix frame_layout(const SplitParams& p, Entry l1, Entry l2) {
  const Entry n = p.n;
  const Entry q = p.q;
  IntMatrix a(idx(n), idx(n), q);
  for (Entry i = 0; i < l1; ++i) {
    for (Entry j = 0; j < l2; ++j) a.set(idx(i), idx(j), 0);
    for (Entry j = 0; j < n - l2; ++j)
      if (excess_cell(i, j, p.r, l1)) a.set(idx(i), idx(l2 + j), q + 1);
  }
  for (Entry i = 0; i < n - l1; ++i)
    for (Entry j = 0; j < l2; ++j)
      if (excess_cell(j, i, p.r, l2)) a.set(idx(l1 + i), idx(j), q + 1);
  return a;
}

BlockPlan plan_blocks(const SplitParams& p, Entry l1, Entry l2) {
  if (l1 < p.r || l2 < p.r || l1 + l2 > p.n)
    throw DomainError("block sizes l1 = " + std::to_string(l1) + ", l2 = " + std::to_string(l2) +
                      " do not fit n = " + std::to_string(p.n) + " with r = " +
                      std::to_string(p.r));
  const IntMatrix frame = frame_layout(p, l1, l2);
  BlockPlan plan;
  plan.params = p;
  plan.l1 = l1;
  plan.l2 = l2;
  plan.cap = p.q;
  plan.a = (l1 + l2) * p.r + l1 * l2 * p.q - p.n * p.r;
  for (Entry i = 0; i < l1; ++i) plan.row_targets.push_back(p.m - frame.row_sum(idx(i)));
  for (Entry j = 0; j < l2; ++j) plan.col_targets.push_back(p.m - frame.col_sum(idx(j)));
  if (plan.a < 0 || plan.a > plan.cap * l1 * l2)
    throw DomainError("A1 mass " + std::to_string(plan.a) + " outside [0, q*l1*l2]");
  return plan;
}

DSMatrix build_from_plan(const BlockPlan& plan) {
  IntMatrix a = frame_layout(plan.params, plan.l1, plan.l2);
  const IntMatrix corner =
      fill_bounded_transportation(plan.row_targets, plan.col_targets, plan.cap);
  for (std::size_t i = 0; i < corner.rows(); ++i)
    for (std::size_t j = 0; j < corner.cols(); ++j) a.set(i, j, corner(i, j));
  return validate_ds(std::move(a));
}

// Row i holds `ones` copies of `high` starting at column i (cyclically).
void fill_circulant(IntMatrix& a, std::size_t offset, std::size_t size, std::size_t ones,
                    Entry low, Entry high) {
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      a.set(offset + i, offset + j, (j + size - i) % size < ones ? high : low);
}

}  // namespace

IntMatrix fill_bounded_transportation(std::span<const Entry> row_targets,
                                      std::span<const Entry> col_targets, Entry cap) {
  const std::size_t rows = row_targets.size();
  const std::size_t cols = col_targets.size();
  if (cap < 0) throw InfeasibleError("cap must be non-negative");
  const Entry row_total = std::accumulate(row_targets.begin(), row_targets.end(), Entry{0});
  const Entry col_total = std::accumulate(col_targets.begin(), col_targets.end(), Entry{0});
  if (row_total != col_total)
    throw InfeasibleError("row targets sum to " + std::to_string(row_total) +
                          " but column targets sum to " + std::to_string(col_total));
  for (std::size_t i = 0; i < rows; ++i)
    if (row_targets[i] < 0 || row_targets[i] > cap * static_cast<Entry>(cols))
      throw InfeasibleError("row target " + std::to_string(i) + " = " +
                            std::to_string(row_targets[i]) + " outside [0, cap*cols = " +
                            std::to_string(cap * static_cast<Entry>(cols)) + "]");
  for (std::size_t j = 0; j < cols; ++j)
    if (col_targets[j] < 0 || col_targets[j] > cap * static_cast<Entry>(rows))
      throw InfeasibleError("column target " + std::to_string(j) + " = " +
                            std::to_string(col_targets[j]) + " outside [0, cap*rows = " +
                            std::to_string(cap * static_cast<Entry>(rows)) + "]");

  std::vector<Entry> x(rows * cols, 0);
  std::vector<Entry> rows_left(row_targets.begin(), row_targets.end());
  std::vector<Entry> cols_left(col_targets.begin(), col_targets.end());
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const Entry v = std::min({cap, rows_left[i], cols_left[j]});
      x[i * cols + j] = v;
      rows_left[i] -= v;
      cols_left[j] -= v;
    }
  }
  if (std::ranges::any_of(rows_left, [](Entry v) { return v > 0; }))
    repair_with_flow(x, rows, cols, cap, rows_left, cols_left);
  if (std::ranges::any_of(rows_left, [](Entry v) { return v > 0; }))
    throw InfeasibleError(
        "marginals satisfy the per-line bounds but violate the cut condition "
        "(some row set demands more than its columns can take under the cap)");
  return IntMatrix(rows, cols, std::move(x));
}

BlockPlan plan_hard_case(Entry m, Entry n) {
  const SplitParams p = split(m, n);
  if (!is_hard_case(p))
    throw DomainError("(m, n) = (" + std::to_string(m) + ", " + std::to_string(n) +
                      ") is not in the regime q, r >= 1, n > 2r + rq");
  const LSearch s = smallest_l(p.q, p.r, p.n);
  return s.square_fits ? plan_blocks(p, s.l, s.l) : plan_blocks(p, s.l + 1, s.l);
}

DSMatrix construct_min_tdet(Entry m, Entry n) {
  const BoundsResult bound = lower_bound_L(m, n);
  const SplitParams& p = bound.params;
  const std::size_t size = idx(n);

  switch (bound.tag) {
    case CaseTag::RZero:
      return validate_ds(IntMatrix::constant(size, p.q));
    case CaseTag::QZero: {
      IntMatrix a(size, size);
      fill_circulant(a, 0, size, idx(m), 0, 1);
      return validate_ds(std::move(a));
    }
    case CaseTag::HalfUp: {
      // A1 is r x r with 2r - n entries q+1 per line; A2, A3 are all q+1.
      IntMatrix a(size, size, p.q + 1);
      for (std::size_t i = idx(p.r); i < size; ++i)
        for (std::size_t j = idx(p.r); j < size; ++j) a.set(i, j, p.q);
      fill_circulant(a, 0, idx(p.r), idx(2 * p.r - n), p.q, p.q + 1);
      return validate_ds(std::move(a));
    }
    case CaseTag::Sharp2:
      return build_from_plan(plan_blocks(p, p.r, p.r));
    case CaseTag::HardCase1:
    case CaseTag::HardCase2:
      return build_from_plan(plan_hard_case(m, n));
    default:
      break;
  }
  throw DomainError("unexpected case tag for L(m,n)");
}

DSMatrix construct_max_tropdet(Entry m, Entry n) {
  const SplitParams p = split(m, n);
  const std::size_t size = idx(n);
  const std::size_t k = idx(n - p.r);  // A1 is k x k

  IntMatrix a(size, size, p.q);
  for (std::size_t i = k; i < size; ++i)
    for (std::size_t j = k; j < size; ++j) a.set(i, j, p.q + 1);

  if (2 * p.r < n) {
    fill_circulant(a, 0, k, idx(p.r), p.q, p.q + 1);
  } else {
    // r = (n - r) q' + r'
    const Entry q_prime = p.r / (n - p.r);
    const Entry r_prime = p.r % (n - p.r);
    fill_circulant(a, 0, k, idx(r_prime), p.q + q_prime, p.q + q_prime + 1);
  }
  return validate_ds(std::move(a));
}

}  // namespace tropical
