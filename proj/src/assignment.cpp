#include "tropdet/assignment.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "tropdet/errors.hpp"
#include "tropdet/structure.hpp"

namespace tropical {

namespace {

void require_square(const IntMatrix& a, const char* who) {
  if (!a.is_square() || a.rows() == 0)
    throw ShapeError(std::string(who) + " needs a non-empty square matrix, got " +
                     std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
}

// Shortest augmenting path Hungarian method on a non-negative cost matrix,
// 1-based internally. Returns perm[row] = column of a minimum-cost assignment.
std::vector<std::size_t> hungarian_min(const std::vector<Entry>& cost, std::size_t n) {
  constexpr Entry kInf = std::numeric_limits<Entry>::max() / 4;
  std::vector<Entry> u(n + 1, 0), v(n + 1, 0), min_slack(n + 1);
  std::vector<std::size_t> match(n + 1, 0), way(n + 1, 0);
  std::vector<bool> used(n + 1);

  for (std::size_t i = 1; i <= n; ++i) {
    match[0] = i;
    std::size_t j0 = 0;
    std::fill(min_slack.begin(), min_slack.end(), kInf);
    std::fill(used.begin(), used.end(), false);
    do {
      used[j0] = true;
      const std::size_t i0 = match[j0];
      Entry delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        Entry cur = cost[(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
        if (cur < min_slack[j]) {
          min_slack[j] = cur;
          way[j] = j0;
        }
        if (min_slack[j] < delta) {
          delta = min_slack[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          min_slack[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<std::size_t> perm(n);
  for (std::size_t j = 1; j <= n; ++j) perm[match[j] - 1] = j - 1;
  return perm;
}

}  // namespace

Entry transversal_sum(const IntMatrix& a, std::span<const std::size_t> perm) {
  if (perm.size() != a.rows() || !a.is_square())
    throw ShapeError("permutation length does not match matrix");
  std::vector<bool> seen(a.cols(), false);
  Entry sum = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] >= a.cols() || seen[perm[i]]) throw ShapeError("not a permutation");
    seen[perm[i]] = true;
    sum += a(i, perm[i]);
  }
  return sum;
}

Transversal solve_assignment(const IntMatrix& a, Objective objective) {
  require_square(a, objective == Objective::Max ? "tdet" : "tropdet");
  const std::size_t n = a.rows();
  std::vector<Entry> cost(a.entries().begin(), a.entries().end());
  if (objective == Objective::Max) {
    const Entry top = a.max_entry();
    for (Entry& c : cost) c = top - c;
  }
  Transversal t;
  t.perm = hungarian_min(cost, n);
  t.value = transversal_sum(a, t.perm);
  return t;
}

Transversal tdet(const IntMatrix& a) { return solve_assignment(a, Objective::Max); }

Transversal tropdet(const IntMatrix& a) { return solve_assignment(a, Objective::Min); }

Transversal brute_assignment(const IntMatrix& a, Objective objective) {
  require_square(a, "brute_assignment");
  const std::size_t n = a.rows();
  if (n > kBruteForceMaxN)
    throw SizeGuardError("brute_assignment is limited to n <= " +
                         std::to_string(kBruteForceMaxN) + ", got n = " + std::to_string(n));

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Transversal best{perm, transversal_sum(a, perm)};
  while (std::next_permutation(perm.begin(), perm.end())) {
    Entry value = 0;
    for (std::size_t i = 0; i < n; ++i) value += a(i, perm[i]);
    const bool better = objective == Objective::Max ? value > best.value : value < best.value;
    if (better) best = {perm, value};
  }
  return best;
}

TransversalCheck has_transversal_above(const IntMatrix& a, Entry threshold) {
  Matching matching = max_matching_above(a, threshold);
  TransversalCheck check;
  check.exists = matching.size == std::min(a.rows(), a.cols());
  if (check.exists) check.witness = matching.pairs();
  return check;
}

}  // namespace tropical
