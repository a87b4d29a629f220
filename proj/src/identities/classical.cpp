// Classical (q = 1) series: Guillera's pi^2 formula, Ramanujan's 4/pi series,
// the zeta(3) harmonic analogue, and the trigamma identity with its k = 1/2 case.

#include "qwz/errors.hpp"
#include "qwz/special.hpp"
#include "sides.hpp"

#include <algorithm>

namespace qwz::identities {

namespace detail {

SideValue guillera_lhs(const EvalContext& ctx) {
    // u_n = (1/4)^n [(1)_n / (3/2)_n]^3, u_{n+1}/u_n = 2 (n+1)^3 / (2n+3)^3
    HPReal u(1, ctx.working_bits());
    return from_sum(sum_until(
        [&](std::size_t idx) {
            const long n = static_cast<long>(idx);
            if (n > 0) {
                u *= 2 * n * n * n;
                u /= (2 * n + 1) * (2 * n + 1) * (2 * n + 1);
            }
            return u * (3 * n + 2);
        },
        ctx));
}

SideValue guillera_rhs(const EvalContext& ctx) {
    const HPReal pi = hp_constant_pi(ctx);
    return closed_form(pi * pi / 4);
}

SideValue ramanujan_lhs(const EvalContext& ctx) {
    // u_n = (1/4)^n [(1/2)_n / (1)_n]^3, u_{n+1}/u_n = (2n+1)^3 / (32 (n+1)^3)
    HPReal u(1, ctx.working_bits());
    return from_sum(sum_until(
        [&](std::size_t idx) {
            const long n = static_cast<long>(idx);
            if (n > 0) {
                u *= (2 * n - 1) * (2 * n - 1) * (2 * n - 1);
                u /= 32 * n * n * n;
            }
            return u * (6 * n + 1);
        },
        ctx));
}

SideValue ramanujan_rhs(const EvalContext& ctx) {
    HPReal four(4, ctx.working_bits());
    return closed_form(four / hp_constant_pi(ctx));
}

SideValue zeta3_harmonic_lhs(const EvalContext& ctx) {
    const mpfr_prec_t bits = ctx.working_bits();
    HPReal u(1, bits);
    HPReal odd_harmonic(1, bits);  // O_{n+1}
    const HPReal one(1, bits);
    return from_sum(sum_until(
        [&](std::size_t idx) {
            const long n = static_cast<long>(idx);
            if (n > 0) {
                u *= 2 * n * n * n;
                u /= (2 * n + 1) * (2 * n + 1) * (2 * n + 1);
                odd_harmonic += one / (2 * n + 1);
            }
            return u * (odd_harmonic * (6 * n + 4) - one);
        },
        ctx));
}

SideValue zeta3_harmonic_rhs(const EvalContext& ctx) { return closed_form(zeta3_num(ctx) * 7 / 2); }

}  // namespace detail

namespace {

void require_open_unit_k(const BigRat& k) {
    if (!(k > BigRat(0)) || !(k < BigRat(1))) throw DomainError("k must lie in (0,1)");
}

/// sin^2(k pi) / pi^2
HPReal sin2_over_pi2(const BigRat& k, const EvalContext& ctx) {
    const HPReal pi = hp_constant_pi(ctx);
    const HPReal s = hp_sin(HPReal(k, ctx.working_bits()) * pi, ctx);
    return s * s / (pi * pi);
}

}  // namespace

SideValue trigamma_identity_lhs(const BigRat& k, const EvalContext& ctx) {
    require_open_unit_k(k);
    const mpfr_prec_t bits = ctx.working_bits();
    // t_0 = (3 - 2k) / (2 Gamma(k)^2 Gamma(2-k)^2) = (3 - 2k) sin^2(pi k) / (2 (1-k)^2 pi^2)
    const BigRat one_minus_k = BigRat(1) - k;
    HPReal t = sin2_over_pi2(k, ctx) * HPReal((BigRat(3) - BigRat(2) * k) / (BigRat(2) * one_minus_k * one_minus_k), bits);
    return detail::from_sum(sum_until(
        [&](std::size_t idx) {
            if (idx > 0) {
                // t_n / t_{n-1} = n^4 (3n + 3 - 2k) / ((2n)(2n+1)(n+1-k)^2 (3n - 2k))
                const BigRat n(static_cast<long>(idx));
                const BigRat shift = n + BigRat(1) - k;
                const BigRat ratio = n.pow(4) * (BigRat(3) * n + BigRat(3) - BigRat(2) * k) /
                                     (BigRat(2) * n * (BigRat(2) * n + BigRat(1)) * shift * shift *
                                      (BigRat(3) * n - BigRat(2) * k));
                t *= HPReal(ratio, bits);
            }
            return t;
        },
        ctx));
}

HPReal trigamma_middle_term(const BigRat& k, long n, const EvalContext& ctx) {
    const BigRat z = k + BigRat(n);
    return sin2_over_pi2(k, ctx) / HPReal(z * z, ctx.working_bits());
}

SideValue trigamma_identity_middle(const BigRat& k, const EvalContext& ctx) {
    require_open_unit_k(k);
    const mpfr_prec_t bits = ctx.working_bits();
    // Terms n < M summed directly; the rest, sin^2/pi^2 * sum_{j>=0} 1/(z+j)^2
    // with z = k + M, by Euler-Maclaurin.
    const long cut = std::max(50, ctx.working_digits());
    HPReal partial(bits);
    for (long n = 0; n < cut; ++n) partial += trigamma_middle_term(k, n, ctx);

    const HPReal z(k + BigRat(cut), bits);
    const HPReal one(1, bits);
    const HPReal z2 = z * z;
    const HPReal eps = pow10_neg(ctx.working_digits(), bits);
    HPReal tail = one / z + one / (z2 * 2L);
    const auto bern = bernoulli_numbers(2 * static_cast<std::size_t>(cut));
    HPReal zpow = z2 * z;
    HPReal last(bits);
    for (std::size_t j = 1; 2 * j < bern.size(); ++j) {
        last = HPReal(bern[2 * j], bits) / zpow;
        if (last.abs() < eps) break;
        tail += last;
        zpow *= z2;
    }
    const HPReal tail_total = sin2_over_pi2(k, ctx) * tail;
    return {one - partial - tail_total, last.abs() * sin2_over_pi2(k, ctx), static_cast<std::size_t>(cut)};
}

HPReal trigamma_identity_closed(const BigRat& k, const EvalContext& ctx) {
    require_open_unit_k(k);
    const HPReal one(1, ctx.working_bits());
    return one - trigamma_num(HPReal(k, ctx.working_bits()), ctx) * sin2_over_pi2(k, ctx);
}

SideValue pi_k_half_sum(const EvalContext& ctx) {
    // t_0 = 2 / Gamma(3/2)^2 = 8/pi;
    // t_{n+1}/t_n = 4 (3n+5)(n+1)^4 / ((3n+2)(2n+3)^3 (2n+2))
    HPReal t = HPReal(8, ctx.working_bits()) / hp_constant_pi(ctx);
    return detail::from_sum(sum_until(
        [&](std::size_t idx) {
            if (idx > 0) {
                const long n = static_cast<long>(idx) - 1;
                t *= 4 * (3 * n + 5) * (n + 1) * (n + 1);
                t *= (n + 1) * (n + 1);
                t /= (3 * n + 2) * (2 * n + 3) * (2 * n + 3);
                t /= (2 * n + 3) * (2 * n + 2);
            }
            return t;
        },
        ctx));
}

}  // namespace qwz::identities
