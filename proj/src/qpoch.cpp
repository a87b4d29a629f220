#include "qwz/qpoch.hpp"

#include "qwz/errors.hpp"

namespace qwz {

namespace {

void require_unit_interval(const HPReal& q) {
    if (!(q.sign() > 0) || !(q < HPReal(1, q.bits()))) throw DomainError("q-Pochhammer: q must lie in (0,1)");
}

HPReal finite_product(const HPReal& a, const HPReal& q, std::size_t n, const EvalContext& ctx) {
    const mpfr_prec_t bits = ctx.working_bits();
    HPReal prod(1, bits);
    HPReal term(bits);
    term = a;  // a q^j
    const HPReal one(1, bits);
    for (std::size_t j = 0; j < n; ++j) {
        prod *= one - term;
        term *= q;
    }
    return prod;
}

HPReal infinite_product(const HPReal& a, const HPReal& q, const EvalContext& ctx) {
    const mpfr_prec_t bits = ctx.working_bits();
    const HPReal eps = pow10_neg(ctx.working_digits(), bits);
    const HPReal one(1, bits);
    HPReal prod(1, bits);
    HPReal term(bits);
    term = a;
    // Advance until |a| q^J < 10^{-(D+g)}; the remaining tail
    // sum_{j>=J} |a| q^j / (1 - |a| q^J) is then below the guard digits
    // once q^J has shrunk by the factor (1 - q).
    const HPReal cutoff = eps * (one - q);
    for (std::size_t j = 0;; ++j) {
        if (term.abs() < cutoff) break;
        if (j >= kMaxProductFactors) throw ConvergenceError("q-Pochhammer: infinite product exceeds the factor budget");
        prod *= one - term;
        if (prod.is_zero()) return prod;
        term *= q;
    }
    return prod;
}

}  // namespace

HPReal qpoch_num(const HPReal& a, const HPReal& q, const Subscript& sub, const EvalContext& ctx) {
    require_unit_interval(q);
    if (const auto* f = std::get_if<FiniteSub>(&sub)) return finite_product(a, q, f->n, ctx);
    if (std::holds_alternative<InfiniteSub>(sub)) return infinite_product(a, q, ctx);
    const auto& g = std::get<GeneralSub>(sub);
    const HPReal shifted = a * hp_exp(g.x * hp_ln(q, ctx), ctx);
    return infinite_product(a, q, ctx) / infinite_product(shifted, q, ctx);
}

namespace {

HPReal qpow_infinite(const BigRat& e, const HPReal& q, const EvalContext& ctx) {
    if (e.is_integer() && e.sign() <= 0) return HPReal(ctx.working_bits());
    return infinite_product(hp_pow(q, e, ctx), q, ctx);
}

}  // namespace

HPReal qpoch_qpow(const BigRat& e, const HPReal& q, const Subscript& sub, const EvalContext& ctx) {
    require_unit_interval(q);
    if (const auto* f = std::get_if<FiniteSub>(&sub)) return finite_product(hp_pow(q, e, ctx), q, f->n, ctx);
    if (std::holds_alternative<InfiniteSub>(sub)) return qpow_infinite(e, q, ctx);
    const auto& g = std::get<GeneralSub>(sub);
    const HPReal num = qpow_infinite(e, q, ctx);
    const HPReal den = infinite_product(hp_pow(q, e, ctx) * hp_exp(g.x * hp_ln(q, ctx), ctx), q, ctx);
    if (den.is_zero()) throw PoleError("q-Pochhammer: denominator product vanishes");
    return num / den;
}

HPReal qpoch_qpow_rational(const BigRat& e, const BigRat& x, const HPReal& q, const EvalContext& ctx) {
    require_unit_interval(q);
    const BigRat shifted = e + x;
    if (shifted.is_integer() && shifted.sign() <= 0) throw PoleError("q-Pochhammer: denominator product vanishes");
    return qpow_infinite(e, q, ctx) / qpow_infinite(shifted, q, ctx);
}

HPReal qfactorial_reciprocal(const BigRat& x, const HPReal& q, const EvalContext& ctx) {
    require_unit_interval(q);
    const HPReal top = qpow_infinite(x + BigRat(1), q, ctx);
    return top / qpow_infinite(BigRat(1), q, ctx);
}

}  // namespace qwz
