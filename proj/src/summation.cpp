#include "qwz/summation.hpp"

#include "qwz/errors.hpp"

#include <deque>

namespace qwz {

SumResult sum_until(const TermFn& term, const EvalContext& ctx, const SumOptions& opts) {
    const mpfr_prec_t bits = ctx.working_bits();
    const HPReal threshold = pow10_neg(ctx.target_digits + ctx.guard_digits / 2, bits);
    const HPReal one(1, bits);
    const HPReal stall(std::to_string(opts.stall_ratio), bits);

    HPReal sum(bits);
    HPReal largest_partial(bits);
    std::deque<HPReal> magnitudes;  // last `window` |t_n|
    std::deque<HPReal> ratios;      // last `window` |t_{n+1}/t_n|
    std::size_t stalled = 0;

    for (std::size_t n = 0; n < opts.max_terms; ++n) {
        const HPReal t = term(n);
        if (!t.is_finite()) throw ConvergenceError("sum_until: non-finite term at n=" + std::to_string(n));
        sum += t;
        largest_partial = max(largest_partial, sum.abs());
        const HPReal mag = t.abs();

        if (!magnitudes.empty() && !magnitudes.back().is_zero() && !mag.is_zero()) {
            ratios.push_back(mag / magnitudes.back());
            if (ratios.size() > opts.window) ratios.pop_front();
            stalled = ratios.back() >= stall ? stalled + 1 : 0;
            if (stalled >= opts.stall_limit) throw ConvergenceError("insufficient decay");
        }
        magnitudes.push_back(mag);
        if (magnitudes.size() > opts.window) magnitudes.pop_front();

        if (magnitudes.size() < opts.window) continue;
        HPReal recent(bits);
        for (const auto& m : magnitudes) recent = max(recent, m);
        if (recent.is_zero()) {
            // A full window of exact zeros: the series has terminated.
            HPReal rounding = largest_partial * static_cast<long>(n + 1);
            mpfr_mul_2si(rounding.get(), rounding.get(), -static_cast<long>(bits), MPFR_RNDU);
            return {sum, rounding, n + 1};
        }
        if (!(recent < threshold) || ratios.size() < opts.window) continue;
        HPReal r(bits);
        for (const auto& x : ratios) r = max(r, x);
        if (!(r < one)) continue;
        const HPReal tail = recent * r / (one - r);
        if (tail < threshold) {
            HPReal rounding = largest_partial * static_cast<long>(n + 1);
            mpfr_mul_2si(rounding.get(), rounding.get(), -static_cast<long>(bits), MPFR_RNDU);
            return {sum, tail + rounding, n + 1};
        }
    }
    throw ConvergenceError("sum_until: term budget exhausted");
}

}  // namespace qwz
