#pragma once

#include "qwz/hpreal.hpp"

#include <cstddef>
#include <functional>

namespace qwz {

struct SumResult {
    HPReal value;
    /// Estimated geometric tail plus accumulated rounding.
    HPReal error_bound;
    std::size_t terms = 0;
};

struct SumOptions {
    /// Ratios are estimated over this many consecutive terms.
    std::size_t window = 8;
    /// Ratio at or above which decay counts as stalled.
    double stall_ratio = 0.999;
    /// Consecutive stalled terms before giving up.
    std::size_t stall_limit = 10'000;
    std::size_t max_terms = 5'000'000;
};

/// Term generator, called with n = 0, 1, 2, ... in order.
using TermFn = std::function<HPReal(std::size_t)>;

/// Sums terms until the last window of terms and the geometric tail
/// |t| r/(1-r) (r the largest ratio in the window) are both below
/// 10^{-(D + g/2)}. Throws ConvergenceError("insufficient decay") when the
/// ratio stays at or above 0.999 for 10^4 consecutive terms.
SumResult sum_until(const TermFn& term, const EvalContext& ctx, const SumOptions& opts = {});

}  // namespace qwz
