// Test-side oracles. Nothing here is used by the library.
#pragma once

#include "qwz/hpreal.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace oracle {

/// p(0..n_max) by listing every partition (parts in nonincreasing order).
inline std::vector<std::int64_t> partition_counts(int n_max) {
    std::vector<std::int64_t> counts(static_cast<std::size_t>(n_max) + 1, 0);
    std::function<void(int, int)> walk = [&](int total, int largest) {
        counts[static_cast<std::size_t>(total)] += 1;
        for (int part = 1; part <= largest && total + part <= n_max; ++part) walk(total + part, part);
    };
    walk(0, n_max);
    return counts;
}

/// Coefficients of [n,k]_q: the coefficient of q^s counts the k-subsets of
/// {1..n} whose element sum is s + k(k+1)/2.
inline std::vector<std::int64_t> gaussian_by_subsets(int n, int k) {
    const int base = k * (k + 1) / 2;
    std::vector<std::int64_t> c(static_cast<std::size_t>(k * (n - k)) + 1, 0);
    std::function<void(int, int, int)> pick = [&](int next, int left, int sum) {
        if (left == 0) {
            c[static_cast<std::size_t>(sum - base)] += 1;
            return;
        }
        for (int v = next; v <= n - left + 1; ++v) pick(v + 1, left - 1, sum + v);
    };
    pick(1, k, 0);
    return c;
}

/// prod_{j >= e} (1 - q^j) mod q^{order+1} by schoolbook multiplication.
inline std::vector<std::int64_t> euler_product(int e, int order) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(order) + 1, 0);
    c[0] = 1;
    for (int j = e; j <= order; ++j) {
        for (int i = order; i >= j; --i) c[static_cast<std::size_t>(i)] -= c[static_cast<std::size_t>(i - j)];
    }
    return c;
}

/// Gamma(x) from MPFR at the given precision.
inline qwz::HPReal gamma(const qwz::HPReal& x) {
    qwz::HPReal r(x.bits());
    mpfr_gamma(r.get(), x.get(), MPFR_RNDN);
    return r;
}

/// pi from MPFR's own constant routine.
inline qwz::HPReal mpfr_pi(mpfr_prec_t bits) {
    qwz::HPReal r(bits);
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
}

/// zeta(3) = 5/2 sum_{n>=1} (-1)^{n+1} / (n^3 C(2n,n)), summed in MPFR.
inline qwz::HPReal zeta3_central_binomial(mpfr_prec_t bits) {
    mpfr_t sum, term, tmp;
    mpfr_inits2(bits, sum, term, tmp, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_ui(sum, 0, MPFR_RNDN);
    mpz_t binom;
    mpz_init(binom);
    // Terms shrink by about 4 per step.
    const long terms = static_cast<long>(bits) / 2 + 10;
    for (long n = 1; n <= terms; ++n) {
        mpz_bin_uiui(binom, static_cast<unsigned long>(2 * n), static_cast<unsigned long>(n));
        mpfr_set_z(tmp, binom, MPFR_RNDN);
        mpfr_mul_ui(tmp, tmp, static_cast<unsigned long>(n), MPFR_RNDN);
        mpfr_mul_ui(tmp, tmp, static_cast<unsigned long>(n), MPFR_RNDN);
        mpfr_mul_ui(tmp, tmp, static_cast<unsigned long>(n), MPFR_RNDN);
        mpfr_ui_div(term, 1, tmp, MPFR_RNDN);
        if (n % 2 == 1) {
            mpfr_add(sum, sum, term, MPFR_RNDN);
        } else {
            mpfr_sub(sum, sum, term, MPFR_RNDN);
        }
    }
    mpfr_mul_ui(sum, sum, 5, MPFR_RNDN);
    mpfr_div_ui(sum, sum, 2, MPFR_RNDN);
    qwz::HPReal r(bits);
    mpfr_set(r.get(), sum, MPFR_RNDN);
    mpfr_clears(sum, term, tmp, static_cast<mpfr_ptr>(nullptr));
    mpz_clear(binom);
    return r;
}

/// Parses a frozen reference value at the given precision.
inline qwz::HPReal value(const char* text, mpfr_prec_t bits) { return qwz::HPReal(std::string(text), bits); }

/// |a - b| < 10^{-digits} * max(1, |b|).
inline bool agree(const qwz::HPReal& a, const qwz::HPReal& b, int digits) {
    const mpfr_prec_t bits = std::max(a.bits(), b.bits());
    qwz::HPReal scale = b.abs();
    if (scale < qwz::HPReal(1, bits)) scale = qwz::HPReal(1, bits);
    return (a - b).abs() < qwz::pow10_neg(digits, bits) * scale;
}

}  // namespace oracle
