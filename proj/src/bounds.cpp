#include "tropdet/bounds.hpp"

#include <string>
#include <utility>

#include "tropdet/errors.hpp"

namespace tropical {

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::QZero: return "Q_ZERO";
    case CaseTag::RZero: return "R_ZERO";
    case CaseTag::HalfUp: return "HALF_UP";
    case CaseTag::Sharp2: return "SHARP2";
    case CaseTag::HardCase1: return "HARD_CASE1";
    case CaseTag::HardCase2: return "HARD_CASE2";
    case CaseTag::LowR: return "LOW_R";
    case CaseTag::HighR: return "HIGH_R";
  }
  return "UNKNOWN";
}

bool square_fits(Entry q, Entry r, Entry n, Entry l) {
  return q * l * l + 2 * l * r - r * n >= 0;
}

bool tall_fits(Entry q, Entry r, Entry n, Entry l) {
  return q * l * l + l * (2 * r + q) + r - r * n >= 0;
}

bool is_hard_case(const SplitParams& p) {
  return p.q >= 1 && p.r >= 1 && p.n > 2 * p.r + p.r * p.q;
}

LSearch smallest_l(Entry q, Entry r, Entry n) {
  if (q < 1 || r < 1 || n <= 2 * r + r * q)
    throw DomainError("smallest_l requires q >= 1, r >= 1 and n > 2r + rq (got q = " +
                      std::to_string(q) + ", r = " + std::to_string(r) +
                      ", n = " + std::to_string(n) + ")");
  // l = n/2 always satisfies the square inequality here, so the scan stops by then.
  for (Entry l = 0;; ++l) {
    const bool e1 = square_fits(q, r, n, l);
    const bool e2 = tall_fits(q, r, n, l);
    if (e1 || e2) return {l, e1, e2};
  }
}

BoundsResult lower_bound_L(Entry m, Entry n) {
  if (m < 1 || n < 1) throw DomainError("L(m,n) requires m >= 1 and n >= 1");
  const SplitParams p = split(m, n);
  const auto [q, r] = std::pair{p.q, p.r};

  if (r == 0) return {m, CaseTag::RZero, p, std::nullopt};
  if (q == 0) return {n, CaseTag::QZero, p, std::nullopt};
  if (2 * r >= n) return {n * (q + 1), CaseTag::HalfUp, p, std::nullopt};
  if (n <= 2 * r + r * q) return {q * n + 2 * r, CaseTag::Sharp2, p, std::nullopt};

  const LSearch s = smallest_l(q, r, n);
  if (s.square_fits) return {q * n + 2 * s.l, CaseTag::HardCase2, p, s};
  return {q * n + 2 * s.l + 1, CaseTag::HardCase1, p, s};
}

BoundsResult upper_bound_U(Entry m, Entry n) {
  if (m < 1 || n < 1) throw DomainError("U(m,n) requires m >= 1 and n >= 1");
  const SplitParams p = split(m, n);
  if (2 * p.r < n) return {p.q * n, CaseTag::LowR, p, std::nullopt};
  return {p.q * n + 2 * p.r - n, CaseTag::HighR, p, std::nullopt};
}

Entry rubik_answer(Entry colors, Entry per_face) {
  return per_face * colors - lower_bound_L(per_face, colors).value;
}

}  // namespace tropical
