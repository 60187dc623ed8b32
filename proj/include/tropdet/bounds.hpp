#pragma once

#include <optional>
#include <string_view>

#include "tropdet/matrix.hpp"

namespace tropical {

// Which closed form produced a bound. The first six belong to L(m,n), the
// last two to U(m,n).
enum class CaseTag { QZero, RZero, HalfUp, Sharp2, HardCase1, HardCase2, LowR, HighR };

std::string_view to_string(CaseTag tag);

/// Smallest l >= 0 satisfying at least one of
///   square: q l^2 + 2 l r - r n >= 0        (an l x l corner block suffices)
///   tall:   q l^2 + l (2r + q) + r - r n >= 0  (an (l+1) x l corner block suffices)
/// together with which of the two hold at that l.
struct LSearch {
  Entry l = 0;
  bool square_fits = false;
  bool tall_fits = false;

  bool operator==(const LSearch&) const = default;
};

bool square_fits(Entry q, Entry r, Entry n, Entry l);
bool tall_fits(Entry q, Entry r, Entry n, Entry l);

// Requires q >= 1, r >= 1 and n > 2r + rq; throws DomainError otherwise.
LSearch smallest_l(Entry q, Entry r, Entry n);

// True when (q, r, n) falls in the regime where smallest_l decides L.
bool is_hard_case(const SplitParams& p);

struct BoundsResult {
  Entry value = 0;
  CaseTag tag = CaseTag::RZero;
  SplitParams params;
  std::optional<LSearch> hard;  // set for HardCase1 / HardCase2 only
};

/// Sharp lower bound L(m,n) on tdet over D(m,n). Cases are tried in order:
/// r = 0, q = 0, 2r >= n, n <= 2r + rq, and finally the quadratic search.
BoundsResult lower_bound_L(Entry m, Entry n);

/// Sharp upper bound U(m,n) on tropdet over D(m,n): qn when 2r < n,
/// otherwise qn + 2r - n.
BoundsResult upper_bound_U(Entry m, Entry n);

// Stickers to move in the worst case: m*n - L(m,n) with n colors and m per face.
Entry rubik_answer(Entry colors, Entry per_face);

}  // namespace tropical
