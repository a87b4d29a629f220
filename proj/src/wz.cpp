#include "qwz/wz.hpp"

#include "qwz/errors.hpp"
#include "qwz/qpoch.hpp"

#include <random>
#include <sstream>

namespace qwz::wz {

const char* to_string(CheckMode m) {
    switch (m) {
        case CheckMode::ExactRatFunc:
            return "exact-ratfunc";
        case CheckMode::ExactSeries:
            return "exact-series";
        case CheckMode::Numeric:
            return "numeric";
    }
    return "?";
}

CheckOutcome CheckOutcome::passed(CheckMode mode, std::string detail) {
    return {true, mode, std::nullopt, std::move(detail)};
}

CheckOutcome CheckOutcome::failed(CheckMode mode, std::string witness, std::string detail) {
    return {false, mode, std::move(witness), std::move(detail)};
}

namespace {

const MultiPoly kQ = MultiPoly::var_q();
const MultiPoly kX = MultiPoly::var_x();
const MultiPoly kY = MultiPoly::var_y();
const MultiPoly kOne(1);

MultiPoly certificate_numerator(const BigRat& c) {
    return kQ.pow(3) * kX * (kOne - kY).pow(2) * (kQ * kX + kQ.pow(2) * kX.pow(2) - MultiPoly(c) * kY);
}

MultiPoly certificate_tail_denominator() { return (kOne + kQ * kX) * (kOne - kQ * kX.pow(2)); }

}  // namespace

WZPair::WZPair(const BigRat& c)
    : r_(certificate_numerator(c), (kY - kQ * kX).pow(2) * certificate_tail_denominator()),
      r_reduced_(certificate_numerator(c), kY.pow(2) * certificate_tail_denominator()) {}

RatFunc WZPair::f_shift_n() {
    return RatFunc(kY.pow(2) * (kOne - kQ * kX).pow(4),
                   (kY - kQ * kX).pow(2) * (kOne - kQ * kX.pow(2)) * (kOne - kQ.pow(2) * kX.pow(2)));
}

RatFunc WZPair::f_shift_k() { return RatFunc(kQ * (kY - kX).pow(2), (kOne - kQ * kY).pow(2)); }

std::pair<RatFunc, RatFunc> WZPair::difference_sides() const {
    const RatFunc a = RatFunc(kQ.pow(2)) * (f_shift_n() - RatFunc(kOne));
    const RatFunc r_next = r_.compose(kQ, kX, kQ * kY);
    const RatFunc b = r_next * f_shift_k() - r_;
    return {a, b};
}

CheckOutcome certificate_identity_check(const WZPair& pair) {
    const auto [a, b] = pair.difference_sides();
    const EqualityWitness eq = ratfunc_equal(a, b);
    if (eq.equal) return CheckOutcome::passed(CheckMode::ExactRatFunc, "difference equation holds identically");
    return CheckOutcome::failed(CheckMode::ExactRatFunc, to_string(*eq.witness),
                                "cross-multiplied difference is a nonzero polynomial");
}

CheckOutcome certificate_spot_check(std::uint64_t seed, std::size_t points, const WZPair& pair) {
    const auto [a, b] = pair.difference_sides();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> den_dist(2, 97);
    auto draw = [&] {
        const long den = den_dist(rng);
        return BigRat(std::uniform_int_distribution<long>(1, den - 1)(rng), den);
    };
    std::size_t done = 0;
    while (done < points) {
        const EvalPoint p{draw(), draw(), draw()};
        BigRat lhs, rhs;
        try {
            lhs = a.eval(p);
            rhs = b.eval(p);
        } catch (const PoleError&) {
            continue;
        }
        if (lhs != rhs) {
            return CheckOutcome::failed(CheckMode::ExactRatFunc,
                                        "q=" + p.q.to_string() + " X=" + p.x.to_string() + " Y=" + p.y.to_string() +
                                            ": A-B=" + (lhs - rhs).to_string(),
                                        "seed " + std::to_string(seed));
        }
        ++done;
    }
    return CheckOutcome::passed(CheckMode::ExactRatFunc,
                                std::to_string(points) + " points, seed " + std::to_string(seed));
}

CheckOutcome qbinomial_sum_check(long n) {
    if (n < 0) throw DomainError("qbinomial_sum_check: n must be nonnegative");
    UniPoly lhs;
    for (long k = 0; k <= n; ++k) {
        lhs += UniPoly::monomial(static_cast<std::size_t>(k * k)) * gaussian_binomial(n, k).pow(2);
    }
    const UniPoly rhs = gaussian_binomial(2 * n, n);
    if (lhs == rhs) return CheckOutcome::passed(CheckMode::ExactSeries, "n=" + std::to_string(n));
    const UniPoly diff = lhs - rhs;
    const std::size_t v = diff.valuation();
    std::ostringstream w;
    w << "q^" << v << " coefficient differs by " << diff.coeff(v);
    return CheckOutcome::failed(CheckMode::ExactSeries, w.str(), "n=" + std::to_string(n));
}

UniPoly specialize(const MultiPoly& p, long n, long k) {
    if (n < 0 || k < 0) throw DomainError("specialize: exponents must be nonnegative");
    UniPoly r;
    for (const auto& [m, c] : p.terms()) {
        r += UniPoly::monomial(m.q + static_cast<std::size_t>(n) * m.x + static_cast<std::size_t>(k) * m.y, c);
    }
    return r;
}

// Numeric ------------------------------------------------------------------

namespace {

HPReal eval_multipoly(const MultiPoly& p, const HPReal& q, const HPReal& x, const HPReal& y, mpfr_prec_t bits) {
    HPReal sum(bits);
    for (const auto& [m, c] : p.terms()) {
        sum += HPReal(c, bits) * q.pow(m.q) * x.pow(m.x) * y.pow(m.y);
    }
    return sum;
}

HPReal eval_ratfunc(const RatFunc& r, const HPReal& q, const HPReal& x, const HPReal& y, mpfr_prec_t bits) {
    const HPReal den = eval_multipoly(r.den(), q, x, y, bits);
    if (den.is_zero()) throw PoleError("rational function: denominator vanishes");
    return eval_multipoly(r.num(), q, x, y, bits) / den;
}

void require_q(const HPReal& q) {
    if (!(q.sign() > 0) || !(q < HPReal(1, q.bits()))) throw DomainError("q must lie in (0,1)");
}

/// [2n, n]_q = (q;q)_{2n} / (q;q)_n^2
HPReal central_qbinomial(long n, const HPReal& q, const EvalContext& ctx) {
    const HPReal top = qpoch_num(q, q, FiniteSub{static_cast<std::size_t>(2 * n)}, ctx);
    const HPReal half = qpoch_num(q, q, FiniteSub{static_cast<std::size_t>(n)}, ctx);
    return top / (half * half);
}

/// [n, k]_q for integer n >= 0 and rational k.
HPReal qbinomial_general(long n, const BigRat& k, const HPReal& q, const EvalContext& ctx) {
    const HPReal top = qpoch_num(q, q, FiniteSub{static_cast<std::size_t>(n)}, ctx);
    return top * qfactorial_reciprocal(k, q, ctx) * qfactorial_reciprocal(BigRat(n) - k, q, ctx);
}

bool agrees(const HPReal& a, const HPReal& b, const HPReal& bound, const EvalContext& ctx) {
    const mpfr_prec_t bits = ctx.working_bits();
    const HPReal scale = max(HPReal(1, bits), a.abs());
    return (a - b).abs() <= pow10_neg(ctx.target_digits, bits) * scale + bound;
}

std::string discrepancy(const HPReal& a, const HPReal& b) { return "|lhs-rhs| = " + (a - b).abs().to_string(6); }

}  // namespace

HPReal f_num(long n, const BigRat& k, const HPReal& q, const EvalContext& ctx) {
    require_q(q);
    if (n < 0) throw DomainError("F(n,k): n must be nonnegative");
    const HPReal b = qbinomial_general(n, k, q, ctx);
    return hp_pow(q, k * k, ctx) * b * b / central_qbinomial(n, q, ctx);
}

PairValue eval_pair(long n, const BigRat& k, const HPReal& q, const EvalContext& ctx, const WZPair& pair) {
    require_q(q);
    if (k == BigRat(n + 1)) throw PoleError("certificate pole at k = n + 1");
    const mpfr_prec_t bits = ctx.working_bits();
    HPReal f = f_num(n, k, q, ctx);
    const HPReal x = hp_pow(q, BigRat(n), ctx);
    const HPReal y = hp_pow(q, k, ctx);
    const HPReal r = eval_ratfunc(pair.certificate(), q, x, y, bits);
    HPReal g = r * f;
    return {std::move(f), std::move(g)};
}

HPReal g_num(long n, const BigRat& k, const HPReal& q, const EvalContext& ctx, const WZPair& pair) {
    require_q(q);
    if (n < 0) throw DomainError("G(n,k): n must be nonnegative");
    const mpfr_prec_t bits = ctx.working_bits();
    // F with (q;q)_{n-k} replaced by (q;q)_{n-k+1}, which strips the factor
    // (1 - q^{n+1-k})^2 = ((Y - QX)/Y)^2 that the reduced certificate lacks.
    const HPReal top = qpoch_num(q, q, FiniteSub{static_cast<std::size_t>(n)}, ctx);
    const HPReal b = top * qfactorial_reciprocal(k, q, ctx) * qfactorial_reciprocal(BigRat(n + 1) - k, q, ctx);
    if (b.is_zero()) return HPReal(bits);
    const HPReal f_reduced = hp_pow(q, k * k, ctx) * b * b / central_qbinomial(n, q, ctx);
    const HPReal x = hp_pow(q, BigRat(n), ctx);
    const HPReal y = hp_pow(q, k, ctx);
    return eval_ratfunc(pair.certificate_reduced(), q, x, y, bits) * f_reduced;
}

HPReal h_closed_form(const BigRat& k, const HPReal& q, const EvalContext& ctx) {
    require_q(q);
    const HPReal qq = qpoch_qpow(BigRat(1), q, InfiniteSub{}, ctx);
    const HPReal lower = qpoch_qpow(BigRat(1) - k, q, InfiniteSub{}, ctx);  // exactly 0 for integer k >= 1
    const HPReal upper = qpoch_qpow(k + BigRat(1), q, InfiniteSub{}, ctx);
    const HPReal front = hp_pow(q, k * k + BigRat(2), ctx);
    return front * (qq.pow(3) - lower * lower) * upper * upper / qq.pow(4);
}

SumResult h_series(const BigRat& k, const HPReal& q, const EvalContext& ctx) {
    return sum_until(
        [&](std::size_t n) {
            const long nn = static_cast<long>(n);
            return g_num(nn, k + BigRat(1), q, ctx) - g_num(nn, k, q, ctx);
        },
        ctx);
}

// Exact series -------------------------------------------------------------

QSeries f_series(long n, long k, std::size_t order) {
    if (n < 0) throw DomainError("F(n,k): n must be nonnegative");
    if (k < 0 || k > n) return QSeries(order);
    const UniPoly num = UniPoly::monomial(static_cast<std::size_t>(k * k)) * gaussian_binomial(n, k).pow(2);
    return series_from_ratio(num, gaussian_binomial(2 * n, n), order);
}

QSeries g_series(long n, long k, std::size_t order, const WZPair& pair) {
    if (n < 0 || k < 0) throw DomainError("G(n,k): n and k must be nonnegative");
    if (n < k - 1) return QSeries(order);  // 1/(q;q)_{n-k+1} = 0
    const UniPoly qn = qpoch_finite_poly(1, n);
    const UniPoly qk = qpoch_finite_poly(1, k);
    const UniPoly qnk = qpoch_finite_poly(1, n - k + 1);
    const RatFunc& rr = pair.certificate_reduced();
    const UniPoly num = UniPoly::monomial(static_cast<std::size_t>(k * k)) * qn.pow(2) * specialize(rr.num(), n, k);
    const UniPoly den = qk.pow(2) * qnk.pow(2) * gaussian_binomial(2 * n, n) * specialize(rr.den(), n, k);
    return series_from_ratio(num, den, order);
}

// Telescoping ----------------------------------------------------------------

namespace {

CheckOutcome telescoping_exact(long m, long k, std::size_t order, const WZPair& pair) {
    const std::size_t N = order;
    QSeries lhs = f_series(m + 1, k, N) - f_series(0, k, N);
    lhs.shift(2);
    QSeries rhs(N);
    for (long n = 0; n <= m; ++n) rhs += g_series(n, k + 1, N, pair) - g_series(n, k, N, pair);
    const std::string detail = "m=" + std::to_string(m) + " k=" + std::to_string(k) + " order=" + std::to_string(N);
    if (const auto bad = first_mismatch(lhs, rhs)) {
        std::ostringstream w;
        w << "coefficient of q^" << *bad << ": " << lhs[*bad] << " vs " << rhs[*bad];
        return CheckOutcome::failed(CheckMode::ExactSeries, w.str(), detail);
    }
    return CheckOutcome::passed(CheckMode::ExactSeries, detail);
}

CheckOutcome telescoping_numeric(long m, const BigRat& k, const HPReal& q, const EvalContext& ctx,
                                 const WZPair& pair) {
    const HPReal q2 = q * q;
    const HPReal lhs = q2 * (f_num(m + 1, k, q, ctx) - f_num(0, k, q, ctx));
    HPReal rhs(ctx.working_bits());
    for (long n = 0; n <= m; ++n) rhs += g_num(n, k + BigRat(1), q, ctx, pair) - g_num(n, k, q, ctx, pair);
    const std::string detail = "m=" + std::to_string(m) + " k=" + k.to_string() + " q=" + q.to_string(10) +
                               " D=" + std::to_string(ctx.target_digits);
    if (agrees(lhs, rhs, HPReal(ctx.working_bits()), ctx)) return CheckOutcome::passed(CheckMode::Numeric, detail);
    return CheckOutcome::failed(CheckMode::Numeric, discrepancy(lhs, rhs), detail);
}

}  // namespace

CheckOutcome telescoping_check(long m, const BigRat& k, const TelescopingMode& mode, const WZPair& pair) {
    if (m < 0) throw DomainError("telescoping_check: m must be nonnegative");
    if (const auto* ex = std::get_if<ExactSeriesMode>(&mode)) {
        if (!k.is_integer() || k.sign() < 0) throw DomainError("telescoping_check: exact mode needs integer k >= 0");
        return telescoping_exact(m, k.to_long(), ex->order, pair);
    }
    const auto& nm = std::get<NumericMode>(mode);
    return telescoping_numeric(m, k, nm.q, nm.ctx, pair);
}

CheckOutcome h_identity_check(const BigRat& k, const HPReal& q, const EvalContext& ctx) {
    const HPReal closed = h_closed_form(k, q, ctx);
    const SumResult series = h_series(k, q, ctx);
    const std::string detail = "k=" + k.to_string() + " q=" + q.to_string(10) + " D=" +
                               std::to_string(ctx.target_digits) + " terms=" + std::to_string(series.terms);
    if (agrees(closed, series.value, series.error_bound, ctx)) return CheckOutcome::passed(CheckMode::Numeric, detail);
    return CheckOutcome::failed(CheckMode::Numeric, discrepancy(closed, series.value), detail);
}

CheckOutcome double_telescoping_check(long m, const BigRat& k, const HPReal& q, const EvalContext& ctx) {
    if (m < 0) throw DomainError("double_telescoping_check: m must be nonnegative");
    HPReal lhs(ctx.working_bits());
    for (long n = 0; n <= m; ++n) lhs += h_closed_form(k + BigRat(n), q, ctx);
    const BigRat shifted = k + BigRat(m + 1);
    const SumResult rhs = sum_until(
        [&](std::size_t n) {
            const long nn = static_cast<long>(n);
            return g_num(nn, shifted, q, ctx) - g_num(nn, k, q, ctx);
        },
        ctx);
    const std::string detail = "m=" + std::to_string(m) + " k=" + k.to_string() + " q=" + q.to_string(10);
    if (agrees(lhs, rhs.value, rhs.error_bound, ctx)) return CheckOutcome::passed(CheckMode::Numeric, detail);
    return CheckOutcome::failed(CheckMode::Numeric, discrepancy(lhs, rhs.value), detail);
}

}  // namespace qwz::wz
