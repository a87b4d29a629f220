// The one-parameter q-analogue
//
//   q sum_n q^{n-2k+k^2} (2q^k - q^{n+1} - q^{2n+2}) / (1 + q^{n+1})
//       * (q;q)_n^4 / ((q;q)_{k-1}^2 (q;q)_{2n+1} (q;q)_{n-k+1}^2)
//   = (q;q)_inf^{-4} sum_n q^{(k+n)^2} ((q;q)_inf^3 - (q^{1-n-k};q)_inf^2) (q^{1+n+k};q)_inf^2
//
// and the partition identity 1/(q;q)_inf = sum_n q^{n^2} / (q;q)_n^2.

#include "qwz/errors.hpp"
#include "qwz/qpoch.hpp"
#include "sides.hpp"

namespace qwz::identities::detail {

namespace {

void require_main_k(const BigRat& k) {
    const bool unit = k > BigRat(0) && k < BigRat(1);
    const bool positive_integer = k.is_integer() && k >= BigRat(1);
    if (!unit && !positive_integer) throw DomainError("k must lie in (0,1) or be an integer >= 1");
}

}  // namespace

SideValue main_theorem_lhs(const BigRat& k, const HPReal& q, const EvalContext& ctx) {
    require_main_k(k);
    const mpfr_prec_t bits = ctx.working_bits();
    const HPReal one(1, bits);
    // Integer k: 1/(q;q)_{n-k+1} vanishes for n < k - 1, so start at n = k - 1.
    const long n0 = k.is_integer() ? k.to_long() - 1 : 0;

    const HPReal qk = hp_pow(q, k, ctx);
    const HPReal qk_inv = one / qk;
    const HPReal rf = qfactorial_reciprocal(k - BigRat(1), q, ctx);
    const HPReal prefactor = hp_pow(q, BigRat(1) - BigRat(2) * k + k * k, ctx) * rf * rf;

    HPReal a = qpoch_num(q, q, FiniteSub{static_cast<std::size_t>(n0)}, ctx);          // (q;q)_n
    HPReal b = qpoch_num(q, q, FiniteSub{static_cast<std::size_t>(2 * n0 + 1)}, ctx);  // (q;q)_{2n+1}
    HPReal rec = qfactorial_reciprocal(BigRat(n0 + 1) - k, q, ctx);                    // 1/(q;q)_{n-k+1}

    SumResult r = sum_until(
        [&](std::size_t idx) {
            const long n = n0 + static_cast<long>(idx);
            if (idx > 0) {
                a *= one - q.pow(n);
                b *= (one - q.pow(2 * n)) * (one - q.pow(2 * n + 1));
                rec /= one - q.pow(n + 1) * qk_inv;
            }
            const HPReal qn1 = q.pow(n + 1);
            const HPReal poly = qk * 2L - qn1 - qn1 * qn1;
            return q.pow(n) * poly / (one + qn1) * a.pow(4) * rec * rec / b;
        },
        ctx);
    r.value *= prefactor;
    r.error_bound *= prefactor.abs();
    return from_sum(std::move(r));
}

SideValue main_theorem_rhs(const BigRat& k, const HPReal& q, const EvalContext& ctx) {
    require_main_k(k);
    const mpfr_prec_t bits = ctx.working_bits();
    const HPReal one(1, bits);
    const HPReal qq = qpoch_qpow(BigRat(1), q, InfiniteSub{}, ctx);
    const HPReal qk = hp_pow(q, k, ctx);
    const HPReal qk2 = hp_pow(q, k * k, ctx);
    HPReal upper = qpoch_qpow(BigRat(1) + k, q, InfiniteSub{}, ctx);  // (q^{1+n+k};q)_inf

    if (k.is_integer()) {
        // (q^{1-n-k};q)_inf contains the factor 1 - q^0 for every n >= 0.
        SumResult r = sum_until(
            [&](std::size_t idx) {
                const long n = static_cast<long>(idx);
                if (idx > 0) upper /= one - q.pow(n) * qk;
                return qk2 * qk.pow(2 * n) * q.pow(n * n) * upper * upper;
            },
            ctx);
        r.value /= qq;
        r.error_bound /= qq;
        return from_sum(std::move(r));
    }

    HPReal lower = qpoch_qpow(BigRat(1) - k, q, InfiniteSub{}, ctx);  // (q^{1-n-k};q)_inf
    const HPReal qq3 = qq.pow(3);
    const HPReal qq4 = qq.pow(4);
    SumResult r = sum_until(
        [&](std::size_t idx) {
            const long n = static_cast<long>(idx);
            if (idx > 0) {
                upper /= one - q.pow(n) * qk;
                lower *= one - q.pow(-(n - 1)) / qk;
            }
            return qk2 * qk.pow(2 * n) * q.pow(n * n) * (qq3 - lower * lower) * upper * upper;
        },
        ctx);
    r.value /= qq4;
    r.error_bound /= qq4;
    return from_sum(std::move(r));
}

QSeries main_theorem_lhs_series(long k, std::size_t order) {
    if (k < 1) throw DomainError("exact series mode needs an integer k >= 1");
    const auto uk = static_cast<std::size_t>(k);
    // base_n = (q;q)_n^4 / ((q;q)_{2n+1} (q;q)_{n-k+1}^2), starting at n = k - 1.
    QSeries base = QSeries::constant(order, BigRat(1));
    for (std::size_t j = 1; j < uk; ++j) {
        for (int r = 0; r < 4; ++r) base.mul_binomial(BigRat(-1), j);
    }
    for (std::size_t j = 1; j <= 2 * uk - 1; ++j) base.div_binomial(BigRat(-1), j);

    QSeries total(order);
    const std::size_t offset = (uk - 1) * (uk - 1);  // 1 - 2k + k^2
    for (std::size_t n = uk - 1; n + offset <= order; ++n) {
        if (n > uk - 1) {
            for (int r = 0; r < 4; ++r) base.mul_binomial(BigRat(-1), n);
            base.div_binomial(BigRat(-1), 2 * n);
            base.div_binomial(BigRat(-1), 2 * n + 1);
            base.div_binomial(BigRat(-1), n - uk + 1);
            base.div_binomial(BigRat(-1), n - uk + 1);
        }
        QSeries t = mul_sparse(base, {{uk, 2}, {n + 1, -1}, {2 * n + 2, -1}});
        t.div_binomial(BigRat(1), n + 1);
        t.shift(n + offset);
        total += t;
    }
    for (std::size_t j = 1; j < uk; ++j) {
        total.div_binomial(BigRat(-1), j);
        total.div_binomial(BigRat(-1), j);
    }
    return total;
}

QSeries main_theorem_rhs_series(long k, std::size_t order) {
    if (k < 1) throw DomainError("exact series mode needs an integer k >= 1");
    // (q^{1-n-k};q)_inf vanishes for n + k >= 1, leaving
    // sum_n q^{(k+n)^2} (q^{1+n+k};q)_inf^2 / (q;q)_inf.
    QSeries total(order);
    for (auto m = static_cast<std::size_t>(k); m * m <= order; ++m) {
        QSeries t = qpoch_inf_series(static_cast<long>(m) + 1, order);
        t = t * t;
        t.shift(m * m);
        total += t;
    }
    return total * series_invert(qpoch_inf_series(1, order));
}

SideValue partition_lhs(const HPReal& q, const EvalContext& ctx) {
    return closed_form(HPReal(1, ctx.working_bits()) / qpoch_qpow(BigRat(1), q, InfiniteSub{}, ctx));
}

SideValue partition_rhs(const HPReal& q, const EvalContext& ctx) {
    const HPReal one(1, ctx.working_bits());
    HPReal fact(1, ctx.working_bits());  // (q;q)_n
    return from_sum(sum_until(
        [&](std::size_t idx) {
            const long n = static_cast<long>(idx);
            if (n > 0) fact *= one - q.pow(n);
            return q.pow(n * n) / (fact * fact);
        },
        ctx));
}

QSeries partition_lhs_series(std::size_t order) { return series_invert(qpoch_inf_series(1, order)); }

QSeries partition_rhs_series(std::size_t order) {
    QSeries total(order);
    for (std::size_t n = 0; n * n <= order; ++n) {
        QSeries t = QSeries::monomial(order, n * n);
        for (std::size_t j = 1; j <= n; ++j) {
            t.div_binomial(BigRat(-1), j);
            t.div_binomial(BigRat(-1), j);
        }
        total += t;
    }
    return total;
}

}  // namespace qwz::identities::detail
