#include "tropdet/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "tropdet/assignment.hpp"
#include "tropdet/errors.hpp"

namespace tropical {

namespace {

using TaskVisitor = std::function<void(std::size_t task, const IntMatrix&)>;

struct StopSignal {};

// Shared between workers: visit counter and the abort flag set on overrun.
struct Progress {
  std::uint64_t budget;
  std::atomic<std::uint64_t> visited{0};
  std::atomic<bool> stop{false};
};

class Walker {
 public:
  Walker(Entry m, std::size_t n, Progress& progress)
      : m_(m), n_(n), progress_(progress), current_(n, n), col_left_(n, m), row_(n) {}

  // Enumerate rows 1..n-1 below a fixed first row.
  void run_below(std::span<const Entry> first_row, std::size_t task, const TaskVisitor& visit) {
    task_ = task;
    visit_ = &visit;
    std::fill(col_left_.begin(), col_left_.end(), m_);
    for (std::size_t j = 0; j < n_; ++j) {
      current_.set(0, j, first_row[j]);
      col_left_[j] -= first_row[j];
    }
    descend(1);
  }

  // Every admissible row `row` given the current column remainders, in
  // lexicographic order.
  template <typename Fn>
  void for_each_row(std::size_t row, Fn&& fn) {
    const Entry rows_after = static_cast<Entry>(n_ - row - 1);
    lo_.assign(n_, 0);
    suffix_lo_.assign(n_ + 1, 0);
    suffix_hi_.assign(n_ + 1, 0);
    for (std::size_t k = n_; k-- > 0;) {
      lo_[k] = std::max<Entry>(0, col_left_[k] - m_ * rows_after);
      suffix_lo_[k] = suffix_lo_[k + 1] + lo_[k];
      suffix_hi_[k] = suffix_hi_[k + 1] + col_left_[k];
    }
    compose(0, m_, fn);
  }

 private:
  template <typename Fn>
  void compose(std::size_t j, Entry remaining, Fn& fn) {
    if (j + 1 == n_) {
      if (remaining < lo_[j] || remaining > col_left_[j]) return;
      row_[j] = remaining;
      fn(std::span<const Entry>(row_));
      return;
    }
    const Entry lo = std::max(lo_[j], remaining - suffix_hi_[j + 1]);
    const Entry hi = std::min(col_left_[j], remaining - suffix_lo_[j + 1]);
    for (Entry x = lo; x <= hi; ++x) {
      row_[j] = x;
      compose(j + 1, remaining - x, fn);
    }
  }

  void descend(std::size_t row) {
    if (row + 1 == n_) {
      // The last row is forced: it takes whatever each column still needs.
      for (std::size_t j = 0; j < n_; ++j) current_.set(row, j, col_left_[j]);
      emit();
      return;
    }
    // for_each_row reuses scratch buffers, so collect this level's rows first.
    std::vector<Entry> rows;
    for_each_row(row, [&](std::span<const Entry> r) { rows.insert(rows.end(), r.begin(), r.end()); });
    for (std::size_t start = 0; start < rows.size(); start += n_) {
      for (std::size_t j = 0; j < n_; ++j) {
        current_.set(row, j, rows[start + j]);
        col_left_[j] -= rows[start + j];
      }
      descend(row + 1);
      for (std::size_t j = 0; j < n_; ++j) col_left_[j] += rows[start + j];
    }
  }

  void emit() {
    if (progress_.stop.load(std::memory_order_relaxed)) throw StopSignal{};
    if (progress_.visited.fetch_add(1, std::memory_order_relaxed) + 1 > progress_.budget) {
      progress_.stop = true;
      throw StopSignal{};
    }
    (*visit_)(task_, current_);
  }

  Entry m_;
  std::size_t n_;
  Progress& progress_;
  IntMatrix current_;
  std::vector<Entry> col_left_;
  std::vector<Entry> row_;
  std::vector<Entry> lo_, suffix_lo_, suffix_hi_;
  std::size_t task_ = 0;
  const TaskVisitor* visit_ = nullptr;
};

void check_args(Entry m, Entry n, const EnumOptions& options) {
  if (m < 1 || n < 1) throw DomainError("enumeration requires m >= 1 and n >= 1");
  if (n > options.max_n)
    throw DomainError("exhaustive enumeration is limited to n <= " +
                      std::to_string(options.max_n) + ", got n = " + std::to_string(n));
}

// First rows of D(m,n), in lexicographic order. Each is one task.
std::vector<std::vector<Entry>> first_rows(Entry m, std::size_t n) {
  Progress unused{0};
  Walker walker(m, n, unused);
  std::vector<std::vector<Entry>> out;
  walker.for_each_row(0, [&](std::span<const Entry> r) { out.emplace_back(r.begin(), r.end()); });
  return out;
}

std::uint64_t run_tasks(Entry m, Entry n, const EnumOptions& options, const TaskVisitor& visit) {
  check_args(m, n, options);
  const std::size_t size = static_cast<std::size_t>(n);
  Progress progress{options.budget};

  if (size == 1) {
    if (options.budget < 1) throw BudgetError(0, options.budget);
    visit(0, IntMatrix(1, 1, m));
    return 1;
  }

  const auto tasks = first_rows(m, size);
  std::atomic<std::size_t> next_task{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    Walker walker(m, size, progress);
    try {
      for (std::size_t t = next_task++; t < tasks.size(); t = next_task++) {
        walker.run_below(tasks[t], t, visit);
      }
    } catch (const StopSignal&) {
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      progress.stop = true;
    }
  };

  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, tasks.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < jobs; ++k) pool.emplace_back(worker);
  }

  if (failure) std::rethrow_exception(failure);
  const std::uint64_t visited = progress.visited.load();
  if (visited > options.budget) throw BudgetError(options.budget, options.budget);
  return visited;
}

template <typename Better>
EnumStats brute_extremum(Entry m, Entry n, const EnumOptions& options, Objective objective,
                         Better better) {
  struct Best {
    Entry value;
    IntMatrix witness;
  };
  const std::size_t tasks = n == 1 ? 1 : first_rows(m, static_cast<std::size_t>(n)).size();
  // Each task runs on exactly one worker, so its slot needs no locking.
  std::vector<std::optional<Best>> per_task(tasks);

  EnumStats stats;
  stats.m = m;
  stats.n = n;
  stats.count = run_tasks(m, n, options, [&](std::size_t task, const IntMatrix& a) {
    const Entry value = solve_assignment(a, objective).value;
    auto& slot = per_task[task];
    if (!slot || better(value, slot->value)) slot = Best{value, a};
  });

  // Tasks are in lexicographic order, so strict improvement keeps the
  // lexicographically smallest witness regardless of the job count.
  std::optional<Best> best;
  for (auto& slot : per_task)
    if (slot && (!best || better(slot->value, best->value))) best = std::move(slot);
  stats.extremum = best->value;
  stats.witness = std::move(best->witness);
  return stats;
}

}  // namespace

std::uint64_t enumerate_D(Entry m, Entry n, const Visitor& visit, const EnumOptions& options) {
  return run_tasks(m, n, options, [&](std::size_t, const IntMatrix& a) { visit(a); });
}

std::uint64_t count_D(Entry m, Entry n, const EnumOptions& options) {
  return run_tasks(m, n, options, [](std::size_t, const IntMatrix&) {});
}

EnumStats brute_L(Entry m, Entry n, const EnumOptions& options) {
  return brute_extremum(m, n, options, Objective::Max, std::less<Entry>{});
}

EnumStats brute_U(Entry m, Entry n, const EnumOptions& options) {
  return brute_extremum(m, n, options, Objective::Min, std::greater<Entry>{});
}

DSMatrix random_ds(Entry m, Entry n, std::uint64_t seed) {
  if (m < 1 || n < 1) throw DomainError("random_ds requires m >= 1 and n >= 1");
  const std::size_t size = static_cast<std::size_t>(n);
  std::mt19937_64 rng(seed);
  std::vector<Entry> sum(size * size, 0);
  std::vector<std::size_t> perm(size);
  for (Entry k = 0; k < m; ++k) {
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t i = 0; i < size; ++i) ++sum[i * size + perm[i]];
  }
  return validate_ds(IntMatrix(size, size, std::move(sum)));
}

}  // namespace tropical
