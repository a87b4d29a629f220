// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "oracle_values.hpp"
#include "oracles.hpp"
#include "qwz/identities.hpp"
#include "qwz/qseries.hpp"
#include "qwz/unipoly.hpp"
#include "qwz/wz.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace qwz;
using namespace qwz::identities;

namespace {

struct Criterion {
    int number;
    std::string title;
    /// Seconds; zero means no limit.
    double limit;
};

HPReal hp(const BigRat& v, const EvalContext& ctx) { return HPReal(v, ctx.working_bits()); }

std::string require_pass(const VerificationReport& r) {
    if (r.passed()) return {};
    std::ostringstream os;
    os << r.id << " " << to_string(r.status);
    for (const auto& [name, value] : r.params) os << " " << name << "=" << value;
    os << " diff=" << r.abs_diff_or_first_mismatch << " " << r.message;
    return os.str();
}

std::string require_pass(const wz::CheckOutcome& o, const std::string& what) {
    if (o.pass) return {};
    return what + ": " + o.witness.value_or("") + " " + o.detail;
}

/// Sum of up to `max_terms` terms of a numeric side against an oracle.
std::string partial_sum_against(const std::string& id, const char* oracle_text, const HPReal& oracle_mpfr,
                                std::size_t max_terms, int tolerance_digits) {
    const EvalContext ctx(50);
    const VerificationReport r = verify_numeric(id, {}, ctx);
    if (!r.passed()) return require_pass(r);
    const SideValue lhs = find_identity(id).lhs({}, ctx);
    if (lhs.terms > max_terms) return id + " used " + std::to_string(lhs.terms) + " terms";
    const HPReal tol = pow10_neg(tolerance_digits, ctx.working_bits());
    if (!((lhs.value - oracle_mpfr).abs() < tol)) return id + " misses the MPFR oracle";
    if (!((lhs.value - oracle::value(oracle_text, ctx.working_bits())).abs() < tol)) {
        return id + " misses the frozen oracle";
    }
    return {};
}

/// Empty on success, otherwise what went wrong.
std::string run_criterion(int n) {
    switch (n) {
        case 1:
            return require_pass(wz::certificate_identity_check(), "certificate");
        case 2:
            for (long m = 0; m <= 40; ++m) {
                const std::string e = require_pass(wz::qbinomial_sum_check(m), "n=" + std::to_string(m));
                if (!e.empty()) return e;
            }
            return {};
        case 3: {
            const mpfr_prec_t bits = EvalContext(50).working_bits();
            const HPReal pi = oracle::mpfr_pi(bits);
            return partial_sum_against("guillera_pi2", oracle::kPiSquaredOver4, pi * pi / 4L, 120, 50);
        }
        case 4: {
            const mpfr_prec_t bits = EvalContext(50).working_bits();
            const HPReal pi = oracle::mpfr_pi(bits);
            return partial_sum_against("ramanujan_4pi", oracle::kFourOverPi, HPReal(4, bits) / pi, 120, 50);
        }
        case 5:
            for (const char* id : {"hks1", "hks2"}) {
                for (const BigRat& q : {BigRat(3, 10), BigRat(1, 2), BigRat(7, 10)}) {
                    const std::string e = require_pass(verify_numeric(id, {{"q", q}}, EvalContext(30)));
                    if (!e.empty()) return e;
                }
                const std::string e = require_pass(verify_series(id, {}, 100));
                if (!e.empty()) return e;
            }
            return {};
        case 6:
            for (const BigRat& q : {BigRat(1, 5), BigRat(1, 2), BigRat(4, 5)}) {
                for (const BigRat& k : {BigRat(1, 4), BigRat(1, 2), BigRat(3, 4)}) {
                    const std::string e = require_pass(verify_numeric("main_theorem", {{"q", q}, {"k", k}}, EvalContext(30)));
                    if (!e.empty()) return e;
                }
            }
            for (long k : {1L, 2L, 3L}) {
                const std::string e = require_pass(verify_series("main_theorem", {{"k", BigRat(k)}}, 100));
                if (!e.empty()) return e;
            }
            return {};
        case 7: {
            for (long k : {1L, 2L}) {
                for (long m = 0; m <= 5; ++m) {
                    const std::string e = require_pass(wz::telescoping_check(m, BigRat(k), wz::ExactSeriesMode{60}),
                                                       "telescoping k=" + std::to_string(k) + " m=" + std::to_string(m));
                    if (!e.empty()) return e;
                }
            }
            const EvalContext ctx(25);
            std::string e = require_pass(
                wz::telescoping_check(10, BigRat(7, 10), wz::NumericMode{hp(BigRat(2, 5), ctx), ctx}), "telescoping k=7/10");
            if (!e.empty()) return e;
            for (const BigRat& k : {BigRat(3, 10), BigRat(1)}) {
                e = require_pass(wz::h_identity_check(k, hp(BigRat(1, 2), ctx), ctx), "H(k) k=" + k.to_string());
                if (!e.empty()) return e;
            }
            return {};
        }
        case 8: {
            const std::string e = require_pass(verify_series("partition_gf", {}, 200));
            if (!e.empty()) return e;
            const auto counts = oracle::partition_counts(50);
            for (std::size_t order = 0; order <= 50; ++order) {
                const QSeries inv = series_invert(qpoch_inf_series(1, order));
                for (std::size_t j = 0; j <= order; ++j) {
                    if (inv[j] != BigRat(counts[j])) {
                        return "p(" + std::to_string(j) + ") at order " + std::to_string(order) + ": " +
                               inv[j].to_string() + " vs " + std::to_string(counts[j]);
                    }
                }
            }
            return {};
        }
        case 9: {
            const EvalContext ctx(25);
            const HPReal one(1, ctx.working_bits());
            for (long kn : {1L, 3L, 5L, 7L, 9L}) {
                const BigRat k(kn, 10);
                const std::string e = require_pass(verify_numeric("classical_limit_trigamma", {{"k", k}}, ctx));
                if (!e.empty()) return e;
                for (long n = 0; n <= 50; ++n) {
                    const HPReal g1 = oracle::gamma(hp(BigRat(1 - n) - k, ctx));
                    const HPReal g2 = oracle::gamma(hp(BigRat(1 + n) + k, ctx));
                    if (!oracle::agree(trigamma_middle_term(k, n, ctx), one / (g1 * g1 * g2 * g2), 30)) {
                        return "reflection term k=" + k.to_string() + " n=" + std::to_string(n);
                    }
                }
            }
            const EvalContext pctx(30);
            const VerificationReport r = verify_numeric("pi_k_half", {}, pctx);
            if (!r.passed()) return require_pass(r);
            if (!oracle::agree(pi_k_half_sum(pctx).value, oracle::mpfr_pi(pctx.working_bits()), 30)) {
                return "pi_k_half is not pi to 30 digits";
            }
            return {};
        }
        case 10: {
            const EvalContext ctx(25);
            const VerificationReport r = verify_numeric("zeta3_harmonic", {}, ctx);
            if (!r.passed()) return require_pass(r);
            const mpfr_prec_t bits = ctx.working_bits();
            const HPReal z3 = oracle::zeta3_central_binomial(bits);
            if (!oracle::agree(z3, oracle::value(oracle::kZeta3, bits), 40)) return "zeta(3) oracles disagree";
            const HPReal target = z3 * 7L / 2L;
            if (!oracle::agree(find_identity("zeta3_harmonic").lhs({}, ctx).value, target, 25)) {
                return "series misses 7 zeta(3)/2";
            }
            return {};
        }
        case 11: {
            const std::vector<BigRat> qs = {BigRat(9, 10), BigRat(99, 100), BigRat(999, 1000)};
            for (const char* id : {"qgamma_limit", "hks1_scaled"}) {
                const std::string e = require_pass(trend_check(id, qs, EvalContext(30)));
                if (!e.empty()) return e;
            }
            return {};
        }
        case 12: {
            const std::string cmd = std::string("\"") + QWZ_PROPERTY_TESTS + "\" > /dev/null 2>&1";
            const int rc = std::system(cmd.c_str());
            return rc == 0 ? std::string() : "property binary exited with status " + std::to_string(rc);
        }
        default:
            return "no such criterion";
    }
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "exact certificate verification", 5},
        {2, "q-binomial seed identity for n <= 40", 30},
        {3, "Guillera pi^2/4 within 120 terms to 1e-50", 5},
        {4, "Ramanujan 4/pi within 120 terms to 1e-50", 5},
        {5, "HKS1 and HKS2 numeric and series to order 100", 60},
        {6, "main theorem grid and series k = 1, 2, 3", 120},
        {7, "telescoping and H(k)", 0},
        {8, "partition generating function to order 200", 30},
        {9, "trigamma identity, reflection terms and pi_k_half", 0},
        {10, "zeta(3) identity against the central-binomial oracle", 10},
        {11, "q -> 1 trends toward pi/2 and pi^2/4", 0},
        {12, "property suites, 200 seeded cases per law", 0},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string problem;
        try {
            problem = run_criterion(c.number);
        } catch (const std::exception& e) {
            problem = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (problem.empty() && c.limit > 0 && seconds > c.limit) {
            problem = "took longer than " + std::to_string(static_cast<int>(c.limit)) + " s";
        }
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2f s", seconds);
        std::cout << (problem.empty() ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.title << " ("
                  << timing << ")";
        if (!problem.empty()) std::cout << " - " << problem;
        std::cout << "\n";
        if (!problem.empty()) ++failures;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
              << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
