#include "doctest.h"

#include "oracle_values.hpp"
#include "oracles.hpp"
#include "qwz/errors.hpp"
#include "qwz/qpoch.hpp"
#include "qwz/wz.hpp"

using namespace qwz;
using namespace qwz::wz;

namespace {

HPReal hp(const BigRat& v, const EvalContext& ctx) { return HPReal(v, ctx.working_bits()); }

}  // namespace

TEST_SUITE("certificate") {
    TEST_CASE("the difference equation holds exactly") {
        const CheckOutcome o = certificate_identity_check();
        CHECK(o.pass);
        CHECK(o.mode == CheckMode::ExactRatFunc);
    }

    TEST_CASE("changing the numerator constant to 3 breaks it") {
        const CheckOutcome o = certificate_identity_check(WZPair::with_certificate_constant(BigRat(3)));
        CHECK_FALSE(o.pass);
        REQUIRE(o.witness.has_value());
        CHECK_FALSE(o.witness->empty());
    }

    TEST_CASE("both sides agree at q = 1/3, n = 2, k = 1") {
        const auto [a, b] = WZPair::standard().difference_sides();
        const EvalPoint p{BigRat(1, 3), BigRat(1, 9), BigRat(1, 3)};
        const BigRat av = a.eval(p);
        const BigRat bv = b.eval(p);
        CHECK(av == bv);
        const EvalContext ctx(30);
        CHECK((hp(av, ctx) - hp(bv, ctx)).abs() < pow10_neg(30, ctx.working_bits()));
    }

    TEST_CASE("shift quotients match the q-binomial definition at integer points") {
        // F(n+1,k)/F(n,k) and F(n,k+1)/F(n,k) against exact F values.
        const BigRat q(2, 7);
        auto f_exact = [&](long n, long k) {
            return q.pow(k * k) * gaussian_binomial(n, k).eval(q).pow(2) / gaussian_binomial(2 * n, n).eval(q);
        };
        for (long n = 1; n <= 4; ++n) {
            for (long k = 0; k <= n - 1; ++k) {
                const EvalPoint p{q, q.pow(n), q.pow(k)};
                CHECK(WZPair::f_shift_n().eval(p) == f_exact(n + 1, k) / f_exact(n, k));
                CHECK(WZPair::f_shift_k().eval(p) == f_exact(n, k + 1) / f_exact(n, k));
            }
        }
    }

    TEST_CASE("seeded spot checks") {
        CHECK(certificate_spot_check(0, 100).pass);
        CHECK_FALSE(certificate_spot_check(0, 20, WZPair::with_certificate_constant(BigRat(3))).pass);
    }
}

TEST_SUITE("qbinomial") {
    TEST_CASE("small cases") {
        CHECK(qbinomial_sum_check(0).pass);
        CHECK(qbinomial_sum_check(2).pass);
    }

    TEST_CASE("n = 2 expands to 1 + q + 2q^2 + q^3 + q^4") {
        UniPoly lhs;
        for (long k = 0; k <= 2; ++k) lhs += UniPoly::monomial(static_cast<std::size_t>(k * k)) * gaussian_binomial(2, k).pow(2);
        CHECK(lhs.to_string() == gaussian_binomial(4, 2).to_string());
        CHECK(gaussian_binomial(4, 2).coefficients() ==
              std::vector<BigRat>{BigRat(1), BigRat(1), BigRat(2), BigRat(1), BigRat(1)});
    }

    TEST_CASE("all n up to 40") {
        for (long n = 0; n <= 40; ++n) {
            CAPTURE(n);
            CHECK(qbinomial_sum_check(n).pass);
        }
    }

    TEST_CASE("negative n is rejected") { CHECK_THROWS_AS(qbinomial_sum_check(-1), DomainError); }
}

TEST_SUITE("pair values") {
    TEST_CASE("F(0,0) = 1") {
        for (const BigRat& q : {BigRat(1, 10), BigRat(1, 2), BigRat(9, 10)}) {
            const EvalContext ctx(25);
            CHECK(oracle::agree(f_num(0, BigRat(0), hp(q, ctx), ctx), HPReal(1, ctx.working_bits()), 25));
        }
    }

    TEST_CASE("F(2,1) at q = 1/2 agrees with the exact value") {
        const EvalContext ctx(25);
        const BigRat exact(oracle::kF21HalfNum, oracle::kF21HalfDen);
        const HPReal numeric = f_num(2, BigRat(1), hp(BigRat(1, 2), ctx), ctx);
        CHECK(oracle::agree(numeric, hp(exact, ctx), 25));
        const BigRat from_series = series_eval(f_series(2, 1, 200), BigRat(1, 2));
        CHECK(oracle::agree(numeric, hp(from_series, ctx), 25));
    }

    TEST_CASE("G vanishes far to the right") {
        const EvalContext ctx(25);
        const HPReal g = g_num(1, BigRat(3, 10) + BigRat(41), hp(BigRat(1, 2), ctx), ctx);
        CHECK(g.abs() < pow10_neg(20, ctx.working_bits()));
    }

    TEST_CASE("eval_pair reports the certificate pole") {
        const EvalContext ctx(20);
        CHECK_THROWS_AS(eval_pair(1, BigRat(2), hp(BigRat(1, 2), ctx), ctx), PoleError);
        CHECK_NOTHROW(g_num(1, BigRat(2), hp(BigRat(1, 2), ctx), ctx));
    }

    TEST_CASE("F vanishes for integer k > n") {
        const EvalContext ctx(20);
        CHECK(f_num(2, BigRat(3), hp(BigRat(1, 2), ctx), ctx).is_zero());
        CHECK(f_series(2, 3, 30).is_zero());
    }

    TEST_CASE("G = R F away from the pole") {
        const EvalContext ctx(30);
        const HPReal q = hp(BigRat(2, 5), ctx);
        const PairValue v = eval_pair(3, BigRat(7, 10), q, ctx);
        CHECK(oracle::agree(v.g, g_num(3, BigRat(7, 10), q, ctx), 30));
    }
}

TEST_SUITE("telescoping") {
    TEST_CASE("m = 0, k = 1, exact to order 40") {
        CHECK(telescoping_check(0, BigRat(1), ExactSeriesMode{40}).pass);
    }

    TEST_CASE("m = 5, k = 2, exact to order 60") {
        CHECK(telescoping_check(5, BigRat(2), ExactSeriesMode{60}).pass);
    }

    TEST_CASE("m = 10, k = 0.7, q = 0.4 numerically") {
        const EvalContext ctx(25);
        CHECK(telescoping_check(10, BigRat(7, 10), NumericMode{hp(BigRat(2, 5), ctx), ctx}).pass);
    }

    TEST_CASE("a wrong certificate fails telescoping") {
        const WZPair bad = WZPair::with_certificate_constant(BigRat(3));
        const CheckOutcome o = telescoping_check(2, BigRat(1), ExactSeriesMode{30}, bad);
        CHECK_FALSE(o.pass);
        CHECK(o.witness.has_value());
    }

    TEST_CASE("exact mode rejects non-integer k") {
        CHECK_THROWS_AS(telescoping_check(1, BigRat(1, 2), ExactSeriesMode{10}), DomainError);
    }
}

TEST_SUITE("h identity") {
    TEST_CASE("k = 0.3 and k = 1 at q = 0.5") {
        const EvalContext ctx(25);
        const HPReal q = hp(BigRat(1, 2), ctx);
        CHECK(h_identity_check(BigRat(3, 10), q, ctx).pass);
        CHECK(h_identity_check(BigRat(1), q, ctx).pass);
    }

    TEST_CASE("closed form against frozen values") {
        const EvalContext ctx(40);
        const HPReal q = hp(BigRat(1, 2), ctx);
        CHECK(oracle::agree(h_closed_form(BigRat(3, 10), q, ctx),
                            oracle::value(oracle::kHClosed03Half, ctx.working_bits()), 40));
        CHECK(oracle::agree(h_closed_form(BigRat(1), q, ctx), oracle::value(oracle::kHClosed1Half, ctx.working_bits()), 40));
    }

    TEST_CASE("k = 1 reduces to q^3 (q^2;q)^2 / (q;q)") {
        const EvalContext ctx(25);
        const HPReal q = hp(BigRat(1, 2), ctx);
        const HPReal qq = qpoch_num(q, q, InfiniteSub{}, ctx);
        const HPReal q2 = qpoch_num(q * q, q, InfiniteSub{}, ctx);
        CHECK(oracle::agree(h_closed_form(BigRat(1), q, ctx), q.pow(3) * q2 * q2 / qq, 25));
    }

    TEST_CASE("k = 0.3 at q = 0.9 with slower convergence") {
        const EvalContext ctx(15);
        CHECK(h_identity_check(BigRat(3, 10), hp(BigRat(9, 10), ctx), ctx).pass);
    }

    TEST_CASE("double telescoping") {
        const EvalContext ctx(25);
        CHECK(double_telescoping_check(3, BigRat(1, 2), hp(BigRat(3, 5), ctx), ctx).pass);
    }
}
