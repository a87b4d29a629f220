// The two Hou-Krattenthaler-Sun q-analogues and their q -> 1 scalings.

#include "qwz/qpoch.hpp"
#include "sides.hpp"

#include <utility>

namespace qwz::identities::detail {

SideValue hks1_lhs(const HPReal& q, const EvalContext& ctx) {
    const mpfr_prec_t bits = ctx.working_bits();
    const HPReal one(1, bits);
    HPReal a(1, bits);                                   // (q^2;q^2)_n
    HPReal b = one - q;                                  // (q;q^2)_{n+1}
    HPReal c = HPReal(2, bits) * (one + q) * (one + q * q);  // (-1;q)_{2n+3}
    return from_sum(sum_until(
        [&](std::size_t idx) {
            const long n = static_cast<long>(idx);
            if (n > 0) {
                a *= one - q.pow(2 * n);
                b *= one - q.pow(2 * n + 1);
                c *= (one + q.pow(2 * n + 1)) * (one + q.pow(2 * n + 2));
            }
            const HPReal poly = one + q.pow(2 * n + 2) - q.pow(4 * n + 3) * 2L;
            return q.pow(2 * n * (n + 1)) * poly * a.pow(3) / (b.pow(3) * c);
        },
        ctx));
}

SideValue hks1_rhs(const HPReal& q, const EvalContext& ctx) {
    const HPReal one(1, ctx.working_bits());
    SumResult r = sum_until(
        [&](std::size_t idx) {
            const long n = static_cast<long>(idx);
            const HPReal d = one - q.pow(2 * n + 1);
            return q.pow(2 * n) / (d * d);
        },
        ctx);
    r.value /= 2;
    r.error_bound /= 2;
    return from_sum(std::move(r));
}

SideValue hks2_lhs(const HPReal& q, const EvalContext& ctx) {
    const mpfr_prec_t bits = ctx.working_bits();
    const HPReal one(1, bits);
    HPReal a(1, bits);       // (q;q)_n
    HPReal minus(1, bits);   // (-q;q)_n
    HPReal d(1, bits);       // (q^3;q^2)_n
    const HPReal one_minus_q = one - q;
    return from_sum(sum_until(
        [&](std::size_t idx) {
            const long n = static_cast<long>(idx);
            if (n > 0) {
                a *= one - q.pow(n);
                minus *= one + q.pow(n);
                d *= one - q.pow(2 * n + 1);
            }
            const HPReal lead = q.pow(n * (n + 1) / 2) * (one - q.pow(3 * n + 2)) / one_minus_q;
            return lead * a.pow(3) * minus / d.pow(3);
        },
        ctx));
}

SideValue hks2_rhs(const HPReal& q, const EvalContext& ctx) {
    const HPReal one(1, ctx.working_bits());
    const HPReal q2 = q * q;
    const HPReal even = qpoch_num(q2, q2, InfiniteSub{}, ctx);
    const HPReal odd = qpoch_num(q, q2, InfiniteSub{}, ctx);
    const HPReal s = one - q;
    return closed_form(s * s * even.pow(4) / odd.pow(4));
}

QSeries hks1_lhs_series(std::size_t order) {
    QSeries total(order);
    for (std::size_t n = 0; 2 * n * (n + 1) <= order; ++n) {
        QSeries t = QSeries::constant(order, BigRat(1, 2));  // the j = 0 factor (1 + 1) of (-1;q)_{2n+3}
        for (std::size_t j = 1; j <= n; ++j) {
            for (int r = 0; r < 3; ++r) t.mul_binomial(BigRat(-1), 2 * j);
        }
        for (std::size_t j = 0; j <= n; ++j) {
            for (int r = 0; r < 3; ++r) t.div_binomial(BigRat(-1), 2 * j + 1);
        }
        for (std::size_t j = 1; j <= 2 * n + 2; ++j) t.div_binomial(BigRat(1), j);
        t = mul_sparse(t, {{0, 1}, {2 * n + 2, 1}, {4 * n + 3, -2}});
        t.shift(2 * n * (n + 1));
        total += t;
    }
    return total;
}

QSeries hks1_rhs_series(std::size_t order) {
    QSeries total(order);
    for (std::size_t n = 0; 2 * n <= order; ++n) {
        QSeries t = QSeries::monomial(order, 2 * n, BigRat(1, 2));
        t.div_binomial(BigRat(-1), 2 * n + 1);
        t.div_binomial(BigRat(-1), 2 * n + 1);
        total += t;
    }
    return total;
}

QSeries hks2_lhs_series(std::size_t order) {
    QSeries total(order);
    for (std::size_t n = 0; n * (n + 1) / 2 <= order; ++n) {
        QSeries t = QSeries::constant(order, BigRat(1));
        for (std::size_t j = 1; j <= n; ++j) {
            for (int r = 0; r < 3; ++r) t.mul_binomial(BigRat(-1), j);
            t.mul_binomial(BigRat(1), j);
            for (int r = 0; r < 3; ++r) t.div_binomial(BigRat(-1), 2 * j + 1);
        }
        t.mul_binomial(BigRat(-1), 3 * n + 2);
        t.div_binomial(BigRat(-1), 1);
        t.shift(n * (n + 1) / 2);
        total += t;
    }
    return total;
}

QSeries hks2_rhs_series(std::size_t order) {
    QSeries t = QSeries::constant(order, BigRat(1));
    t.mul_binomial(BigRat(-1), 1);
    t.mul_binomial(BigRat(-1), 1);
    for (std::size_t j = 1; 2 * j <= order; ++j) {
        for (int r = 0; r < 4; ++r) t.mul_binomial(BigRat(-1), 2 * j);
    }
    for (std::size_t j = 0; 2 * j + 1 <= order; ++j) {
        for (int r = 0; r < 4; ++r) t.div_binomial(BigRat(-1), 2 * j + 1);
    }
    return t;
}

HPReal qgamma_scaled(const HPReal& q, const EvalContext& ctx) {
    const HPReal one(1, ctx.working_bits());
    const HPReal q2 = q * q;
    const HPReal even = qpoch_num(q2, q2, InfiniteSub{}, ctx);
    const HPReal odd = qpoch_num(q, q2, InfiniteSub{}, ctx);
    return (one - q) * even * even / (odd * odd);
}

HPReal hks1_scaled(const HPReal& q, const EvalContext& ctx) {
    const HPReal one_minus_q = HPReal(1, ctx.working_bits()) - q;
    return hks1_lhs(q, ctx).value * one_minus_q * one_minus_q * 4L;
}

}  // namespace qwz::identities::detail
