#include "qwz/special.hpp"

#include "qwz/errors.hpp"
#include "qwz/summation.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

namespace qwz {

std::vector<BigRat> bernoulli_numbers(std::size_t m) {
    // sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1. The table only grows and is
    // shared between threads.
    static std::mutex mutex;
    static std::vector<BigRat> b{BigRat(1)};
    const std::lock_guard<std::mutex> lock(mutex);
    for (std::size_t n = b.size(); n <= m; ++n) {
        BigRat acc;
        mpz_class binom = 1;  // C(n+1, j)
        for (std::size_t j = 0; j < n; ++j) {
            acc += BigRat(binom) * b[j];
            binom = binom * static_cast<unsigned long>(n + 1 - j) / static_cast<unsigned long>(j + 1);
        }
        b.push_back(-acc / BigRat(static_cast<long>(n + 1)));
    }
    return {b.begin(), b.begin() + static_cast<std::ptrdiff_t>(m + 1)};
}

HPReal trigamma_num(const HPReal& k, const EvalContext& ctx) {
    if (!(k.sign() > 0)) throw DomainError("trigamma: argument must be positive");
    const mpfr_prec_t bits = ctx.working_bits();
    const HPReal one(1, bits);

    // Shift to z = k + M with z >= max(10, 0.4 (D + g)); the smallest
    // asymptotic term is then about e^{-2 pi z}, past the working digits.
    const double target = std::max(10.0, 0.4 * ctx.working_digits());
    HPReal z(bits);
    z = k;
    HPReal sum(bits);
    while (z.to_double() < target) {
        sum += one / (z * z);
        z += one;
    }

    const HPReal eps = pow10_neg(ctx.working_digits(), bits);
    const HPReal z2 = z * z;
    HPReal asym = one / z + one / (z2 * 2L);
    const std::size_t max_j = static_cast<std::size_t>(4.0 * target) + 8;
    const auto bern = bernoulli_numbers(2 * max_j);
    HPReal zpow = z2 * z;  // z^{2j+1}
    HPReal previous(bits);
    bool converged = false;
    for (std::size_t j = 1; j <= max_j; ++j) {
        const HPReal term = HPReal(bern[2 * j], bits) / zpow;
        if (term.abs() < eps) {
            converged = true;
            break;
        }
        if (j > 1 && term.abs() > previous.abs()) break;  // asymptotic series turned
        asym += term;
        previous = term;
        zpow *= z2;
    }
    if (!converged) throw ConvergenceError("trigamma: asymptotic series did not reach working precision");
    return sum + asym;
}

std::vector<HPReal> zeta3_partial_sums(std::size_t count, const EvalContext& ctx) {
    const mpfr_prec_t bits = ctx.working_bits();
    std::vector<HPReal> out;
    out.reserve(count);
    HPReal s(bits);
    mpz_class central = 1;  // C(2n, n)
    for (std::size_t n = 1; n <= count; ++n) {
        central = central * static_cast<unsigned long>(2 * (2 * n - 1)) / static_cast<unsigned long>(n);
        const mpz_class den = central * n * n * n;
        HPReal t(BigRat(mpz_class(5), mpz_class(den * 2)), bits);
        if (n % 2 == 0) t = -t;
        s += t;
        out.push_back(s);
    }
    return out;
}

HPReal zeta3_num(const EvalContext& ctx) {
    const mpfr_prec_t bits = ctx.working_bits();
    // t_n = 5/2 (-1)^{n} / ((n+1)^3 C(2n+2, n+1)), via the exact term ratio.
    HPReal t(5, bits);
    t /= 4;  // n = 1 term: 5/2 * 1/(1 * 2)
    const auto result = sum_until(
        [&](std::size_t idx) {
            if (idx == 0) return t;
            const long n = static_cast<long>(idx);  // term for n+1 from term for n
            t *= -(n * n * n);
            t /= (n + 1) * (n + 1) * (n + 1);
            t *= n + 1;
            t /= 2 * (2 * n + 1);
            return t;
        },
        ctx);
    return result.value;
}

}  // namespace qwz
