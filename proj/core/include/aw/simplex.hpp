#pragma once

/* Exact rational simplex for equality-form programs
 *     optimize c^T x  subject to  A x = b, x >= 0.
 * Two phases, Bland's smallest-index rule throughout, so every solve
 * terminates; all arithmetic is rational, so answers are exact. */

#include "aw/numbers.hpp"

#include <vector>

namespace aw {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpOutcome {
  LpStatus status;
  Rat value;  // optimal objective value, meaningful iff status == Optimal
};

LpOutcome lp_optimize(const std::vector<RatVec>& a, const RatVec& b,
                      const RatVec& objective, bool maximize);

bool lp_feasible(const std::vector<RatVec>& a, const RatVec& b);

}  // namespace aw
