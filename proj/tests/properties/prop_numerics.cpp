#include "doctest.h"

#include "gen.hpp"
#include "oracles.hpp"
#include "qwz/hpreal.hpp"
#include "qwz/qpoch.hpp"
#include "qwz/special.hpp"
#include "qwz/summation.hpp"

using namespace qwz;

namespace {

HPReal hp(const BigRat& v, const EvalContext& ctx) { return HPReal(v, ctx.working_bits()); }

}  // namespace

TEST_SUITE("precision laws") {
    TEST_CASE("raising D by 10 keeps the first D digits") {
        gen::Rng rng(1101);
        for (int i = 0; i < gen::kCases; ++i) {
            const int d = static_cast<int>(rng.integer(10, 60));
            const EvalContext lo(d), hi(d + 10);
            const BigRat x = rng.between(BigRat(1, 10), BigRat(5));
            const BigRat q = rng.between(BigRat(0), BigRat(9, 10));
            const BigRat e = rng.between(BigRat(-3), BigRat(3));
            CAPTURE(d);
            CAPTURE(x);
            CAPTURE(q);
            auto same = [&](auto f) { return oracle::agree(f(lo), f(hi), d); };
            CHECK(same([&](const EvalContext& c) { return hp_exp(hp(x, c), c); }));
            CHECK(same([&](const EvalContext& c) { return hp_ln(hp(x, c), c); }));
            CHECK(same([&](const EvalContext& c) { return hp_sin(hp(x, c), c); }));
            CHECK(same([&](const EvalContext& c) { return hp_pow(hp(x, c), e, c); }));
            CHECK(same([&](const EvalContext& c) { return hp_constant_pi(c); }));
            CHECK(same([&](const EvalContext& c) { return qpoch_qpow(BigRat(1), hp(q, c), InfiniteSub{}, c); }));
            CHECK(same([&](const EvalContext& c) { return trigamma_num(hp(x, c), c); }));
        }
    }

    TEST_CASE("pi matches MPFR at random precisions") {
        gen::Rng rng(1102);
        for (int i = 0; i < gen::kCases; ++i) {
            const EvalContext ctx(static_cast<int>(rng.integer(5, 400)));
            CHECK(oracle::agree(hp_constant_pi(ctx), oracle::mpfr_pi(ctx.working_bits()), ctx.working_digits() - 2));
        }
    }
}

TEST_SUITE("pochhammer numeric laws") {
    TEST_CASE("consecutive finite products differ by one factor") {
        gen::Rng rng(1201);
        const EvalContext ctx(30);
        for (int i = 0; i < gen::kCases; ++i) {
            const HPReal a = hp(rng.between(BigRat(-2), BigRat(2)), ctx);
            const HPReal q = hp(rng.between(BigRat(0), BigRat(1)), ctx);
            const auto n = static_cast<std::size_t>(rng.integer(1, 60));
            const HPReal num = qpoch_num(a, q, FiniteSub{n}, ctx);
            const HPReal prev = qpoch_num(a, q, FiniteSub{n - 1}, ctx);
            const HPReal factor = HPReal(1, ctx.working_bits()) - a * q.pow(static_cast<long>(n - 1));
            CHECK(oracle::agree(num, prev * factor, 35));
        }
    }

    TEST_CASE("an integer general subscript equals the finite product") {
        gen::Rng rng(1202);
        const EvalContext ctx(30);
        for (int i = 0; i < gen::kCases; ++i) {
            const HPReal a = hp(rng.between(BigRat(-1), BigRat(1)), ctx);
            const HPReal q = hp(rng.between(BigRat(0), BigRat(9, 10)), ctx);
            const auto n = static_cast<std::size_t>(rng.integer(0, 40));
            const HPReal finite = qpoch_num(a, q, FiniteSub{n}, ctx);
            const HPReal general = qpoch_num(a, q, GeneralSub{HPReal(static_cast<long>(n), ctx.working_bits())}, ctx);
            CAPTURE(n);
            CHECK(oracle::agree(finite, general, 30));
        }
    }

    TEST_CASE("the infinite product splits after n factors") {
        gen::Rng rng(1203);
        const EvalContext ctx(30);
        for (int i = 0; i < gen::kCases; ++i) {
            const HPReal a = hp(rng.between(BigRat(-1), BigRat(1)), ctx);
            const HPReal q = hp(rng.between(BigRat(0), BigRat(9, 10)), ctx);
            const auto n = static_cast<std::size_t>(rng.integer(0, 30));
            const HPReal whole = qpoch_num(a, q, InfiniteSub{}, ctx);
            const HPReal split = qpoch_num(a, q, FiniteSub{n}, ctx) *
                                 qpoch_num(a * q.pow(static_cast<long>(n)), q, InfiniteSub{}, ctx);
            CHECK(oracle::agree(whole, split, 30));
        }
    }
}

TEST_SUITE("summation laws") {
    TEST_CASE("geometric series land within the reported bound") {
        gen::Rng rng(1301);
        for (int i = 0; i < gen::kCases; ++i) {
            const EvalContext ctx(static_cast<int>(rng.integer(10, 60)));
            const BigRat r = rng.between(BigRat(-9, 10), BigRat(9, 10));
            const HPReal rr = hp(r, ctx);
            const SumResult s = sum_until([&](std::size_t n) { return rr.pow(static_cast<long>(n)); }, ctx);
            const HPReal exact = hp(BigRat(1) / (BigRat(1) - r), ctx);
            CAPTURE(r);
            CHECK((s.value - exact).abs() <= s.error_bound);
            CHECK(oracle::agree(s.value, exact, ctx.target_digits));
        }
    }
}

TEST_SUITE("trigamma laws") {
    TEST_CASE("recurrence psi'(x) - psi'(x+1) = 1/x^2") {
        gen::Rng rng(1401);
        const EvalContext ctx(30);
        for (int i = 0; i < gen::kCases; ++i) {
            const HPReal x = hp(rng.between(BigRat(0), BigRat(20)), ctx);
            const HPReal one(1, ctx.working_bits());
            CHECK(oracle::agree(trigamma_num(x, ctx) - trigamma_num(x + one, ctx), one / (x * x), 30));
        }
    }

    TEST_CASE("reflection psi'(k) + psi'(1-k) = pi^2 / sin^2(pi k)") {
        gen::Rng rng(1402);
        const EvalContext ctx(30);
        for (int i = 0; i < gen::kCases; ++i) {
            const BigRat k = rng.between(BigRat(0), BigRat(1));
            const HPReal pi = hp_constant_pi(ctx);
            const HPReal s = hp_sin(pi * hp(k, ctx), ctx);
            const HPReal lhs = trigamma_num(hp(k, ctx), ctx) + trigamma_num(hp(BigRat(1) - k, ctx), ctx);
            CAPTURE(k);
            CHECK(oracle::agree(lhs, pi * pi / (s * s), 30));
        }
    }
}
