#include "qwz/errors.hpp"
#include "qwz/identities.hpp"
#include "qwz/special.hpp"
#include "sides.hpp"

#include <algorithm>

namespace qwz::identities {

const char* to_string(Mode m) {
    switch (m) {
        case Mode::Numeric: return "numeric";
        case Mode::ExactSeries: return "exact-series";
        case Mode::Trend: return "trend";
    }
    return "?";
}

const char* to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::DomainError: return "domain-error";
        case Status::Pole: return "pole";
        case Status::Inconclusive: return "inconclusive";
    }
    return "?";
}

bool IdentityDescriptor::supports(Mode m) const { return std::find(modes.begin(), modes.end(), m) != modes.end(); }

namespace detail {

void require_unit_q(const Params& p) {
    const BigRat& q = p.at("q");
    if (!(q > BigRat(0)) || !(q < BigRat(1))) throw DomainError("q must lie in (0,1), got " + q.to_string());
}

HPReal q_param(const Params& p, const EvalContext& ctx) {
    require_unit_q(p);
    return HPReal(p.at("q"), ctx.working_bits());
}

}  // namespace detail

namespace {

using detail::q_param;

const BigRat kHalf(1, 2);

ParamSpec q_spec() { return {"q", "(0,1)", kHalf}; }

NumericSide constant_side(SideValue (*f)(const EvalContext&)) {
    return [f](const Params&, const EvalContext& ctx) { return f(ctx); };
}

NumericSide q_side(SideValue (*f)(const HPReal&, const EvalContext&)) {
    return [f](const Params& p, const EvalContext& ctx) { return f(q_param(p, ctx), ctx); };
}

SeriesSide plain_series(QSeries (*f)(std::size_t)) {
    return [f](const Params&, std::size_t order) { return f(order); };
}

void no_check(const Params&) {}

void check_main_theorem_numeric(const Params& p) {
    detail::require_unit_q(p);
    const BigRat& k = p.at("k");
    const bool unit = k > BigRat(0) && k < BigRat(1);
    const bool positive_integer = k.is_integer() && k >= BigRat(1);
    if (!unit && !positive_integer) throw DomainError("k must lie in (0,1) or be an integer >= 1, got " + k.to_string());
}

void check_integer_k(const Params& p) {
    const BigRat& k = p.at("k");
    if (!k.is_integer() || k < BigRat(1)) throw DomainError("exact series mode needs an integer k >= 1, got " + k.to_string());
}

void check_open_unit_k(const Params& p) {
    const BigRat& k = p.at("k");
    if (!(k > BigRat(0)) || !(k < BigRat(1))) throw DomainError("k must lie in (0,1), got " + k.to_string());
}

std::vector<IdentityDescriptor> build_registry() {
    std::vector<IdentityDescriptor> r;

    {
        IdentityDescriptor d;
        d.id = "guillera_pi2";
        d.title = "sum_n (1/4)^n (3n+2) [(1)_n/(3/2)_n]^3 = pi^2/4";
        d.source = "Guillera's series for pi^2";
        d.modes = {Mode::Numeric};
        d.lhs = constant_side(detail::guillera_lhs);
        d.rhs = constant_side(detail::guillera_rhs);
        d.validate_numeric = no_check;
        r.push_back(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "ramanujan_4pi";
        d.title = "sum_n (1/4)^n (6n+1) [(1/2)_n/(1)_n]^3 = 4/pi";
        d.source = "Ramanujan's series for 4/pi";
        d.modes = {Mode::Numeric};
        d.lhs = constant_side(detail::ramanujan_lhs);
        d.rhs = constant_side(detail::ramanujan_rhs);
        d.validate_numeric = no_check;
        r.push_back(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "hks1";
        d.title = "sum_n q^{2n(n+1)} (1+q^{2n+2}-2q^{4n+3}) (q^2;q^2)_n^3 / ((q;q^2)_{n+1}^3 (-1;q)_{2n+3}) "
                  "= 1/2 sum_n q^{2n}/(1-q^{2n+1})^2";
        d.source = "first Hou-Krattenthaler-Sun q-analogue of Guillera's series";
        d.numeric_params = {q_spec()};
        d.modes = {Mode::Numeric, Mode::ExactSeries};
        d.lhs = q_side(detail::hks1_lhs);
        d.rhs = q_side(detail::hks1_rhs);
        d.validate_numeric = detail::require_unit_q;
        d.lhs_series = plain_series(detail::hks1_lhs_series);
        d.rhs_series = plain_series(detail::hks1_rhs_series);
        d.validate_series = no_check;
        r.push_back(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "hks2";
        d.title = "sum_n q^{n(n+1)/2} (1-q^{3n+2})/(1-q) (q;q)_n^3 (-q;q)_n / (q^3;q^2)_n^3 "
                  "= (1-q)^2 (q^2;q^2)_inf^4 / (q;q^2)_inf^4";
        d.source = "second Hou-Krattenthaler-Sun q-analogue of Guillera's series";
        d.numeric_params = {q_spec()};
        d.modes = {Mode::Numeric, Mode::ExactSeries};
        d.lhs = q_side(detail::hks2_lhs);
        d.rhs = q_side(detail::hks2_rhs);
        d.validate_numeric = detail::require_unit_q;
        d.lhs_series = plain_series(detail::hks2_lhs_series);
        d.rhs_series = plain_series(detail::hks2_rhs_series);
        d.validate_series = no_check;
        r.push_back(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "main_theorem";
        d.title = "q sum_n q^{n-2k+k^2} (2q^k-q^{n+1}-q^{2n+2})/(1+q^{n+1}) (q;q)_n^4 / "
                  "((q;q)_{k-1}^2 (q;q)_{2n+1} (q;q)_{n-k+1}^2) = "
                  "(q;q)_inf^{-4} sum_n q^{(k+n)^2} ((q;q)_inf^3 - (q^{1-n-k};q)_inf^2) (q^{1+n+k};q)_inf^2";
        d.source = "one-parameter q-analogue of Guillera's series obtained from a q-WZ pair";
        d.numeric_params = {q_spec(), {"k", "(0,1) or integer >= 1", BigRat(1, 4)}};
        d.series_params = {{"k", "integer >= 1", BigRat(1)}};
        d.modes = {Mode::Numeric, Mode::ExactSeries};
        d.lhs = [](const Params& p, const EvalContext& ctx) {
            return detail::main_theorem_lhs(p.at("k"), q_param(p, ctx), ctx);
        };
        d.rhs = [](const Params& p, const EvalContext& ctx) {
            return detail::main_theorem_rhs(p.at("k"), q_param(p, ctx), ctx);
        };
        d.validate_numeric = check_main_theorem_numeric;
        d.lhs_series = [](const Params& p, std::size_t order) {
            return detail::main_theorem_lhs_series(p.at("k").to_long(), order);
        };
        d.rhs_series = [](const Params& p, std::size_t order) {
            return detail::main_theorem_rhs_series(p.at("k").to_long(), order);
        };
        d.validate_series = check_integer_k;
        r.push_back(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "partition_gf";
        d.title = "1/(q;q)_inf = sum_n q^{n^2} / (q;q)_n^2";
        d.source = "Durfee square decomposition of the partition generating function";
        d.numeric_params = {q_spec()};
        d.modes = {Mode::Numeric, Mode::ExactSeries};
        d.lhs = q_side(detail::partition_lhs);
        d.rhs = q_side(detail::partition_rhs);
        d.validate_numeric = detail::require_unit_q;
        d.lhs_series = plain_series(detail::partition_lhs_series);
        d.rhs_series = plain_series(detail::partition_rhs_series);
        d.validate_series = no_check;
        r.push_back(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "classical_limit_trigamma";
        d.title = "1/2 sum_n (3-2k+3n) (1)_n^4 / ((1)_{k-1}^2 (1)_{2n+1} (1)_{n-k+1}^2) "
                  "= 1 - sum_n 1/((1)_{-k-n}^2 (1)_{k+n}^2) = 1 - psi'(k) sin^2(k pi)/pi^2";
        d.source = "q -> 1 limit of the one-parameter q-analogue";
        d.numeric_params = {{"k", "(0,1)", kHalf}};
        d.modes = {Mode::Numeric};
        d.lhs = [](const Params& p, const EvalContext& ctx) { return trigamma_identity_lhs(p.at("k"), ctx); };
        d.rhs = [](const Params& p, const EvalContext& ctx) {
            return detail::closed_form(trigamma_identity_closed(p.at("k"), ctx));
        };
        d.middle = [](const Params& p, const EvalContext& ctx) { return trigamma_identity_middle(p.at("k"), ctx); };
        d.validate_numeric = check_open_unit_k;
        r.push_back(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "pi_k_half";
        d.title = "sum_n (3n+2) (1)_n^4 / ((1)_{n+1/2}^2 (1)_{2n+1}) = pi";
        d.source = "k = 1/2 case of the trigamma identity";
        d.modes = {Mode::Numeric};
        d.lhs = constant_side(pi_k_half_sum);
        d.rhs = [](const Params&, const EvalContext& ctx) { return detail::closed_form(hp_constant_pi(ctx)); };
        d.validate_numeric = no_check;
        r.push_back(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "zeta3_harmonic";
        d.title = "sum_n (1/4)^n [(1)_n/(3/2)_n]^3 ((6n+4) O_{n+1} - 1) = 7 zeta(3)/2";
        d.source = "harmonic-sum analogue of Guillera's series from differentiating in k";
        d.modes = {Mode::Numeric};
        d.lhs = constant_side(detail::zeta3_harmonic_lhs);
        d.rhs = constant_side(detail::zeta3_harmonic_rhs);
        d.validate_numeric = no_check;
        r.push_back(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "qgamma_limit";
        d.title = "(1-q) (q^2;q^2)_inf^2 / (q;q^2)_inf^2 -> pi/2 as q -> 1";
        d.source = "q-Gamma function at 1/2";
        d.modes = {Mode::Trend};
        d.scaled = detail::qgamma_scaled;
        d.limit = [](const EvalContext& ctx) { return hp_constant_pi(ctx) / 2; };
        d.limit_name = "pi/2";
        r.push_back(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "hks1_scaled";
        d.title = "4 (1-q)^2 * lhs(hks1) -> pi^2/4 as q -> 1";
        d.source = "q -> 1 limit of the first Hou-Krattenthaler-Sun identity";
        d.modes = {Mode::Trend};
        d.scaled = detail::hks1_scaled;
        d.limit = [](const EvalContext& ctx) {
            const HPReal pi = hp_constant_pi(ctx);
            return pi * pi / 4;
        };
        d.limit_name = "pi^2/4";
        r.push_back(std::move(d));
    }
    return r;
}

/// Fills in defaults and rejects names the identity does not take.
Params merge_params(const std::vector<ParamSpec>& specs, const Params& given, const std::string& id) {
    Params out;
    for (const auto& s : specs) out[s.name] = s.default_value;
    for (const auto& [name, value] : given) {
        if (!out.count(name)) throw UsageError("identity '" + id + "' takes no parameter '" + name + "'");
        out[name] = value;
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> param_strings(const Params& p) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [name, value] : p) out.emplace_back(name, value.to_string());
    return out;
}

const IdentityDescriptor& require_mode(const std::string& id, Mode m) {
    const IdentityDescriptor& d = find_identity(id);
    if (!d.supports(m)) throw UsageError("identity '" + id + "' does not support " + to_string(m) + " mode");
    return d;
}

/// Runs body, turning the engine's error kinds into report statuses.
template <class Body>
void guarded(VerificationReport& rep, Body&& body) {
    try {
        body();
    } catch (const PoleError& e) {
        rep.status = Status::Pole;
        rep.message = e.what();
    } catch (const ConvergenceError& e) {
        rep.status = Status::Inconclusive;
        rep.message = e.what();
    } catch (const UsageError&) {
        throw;
    } catch (const std::domain_error& e) {
        rep.status = Status::DomainError;
        rep.message = e.what();
    }
}

std::string series_head(const QSeries& s) { return s.to_string(); }

}  // namespace

const std::vector<IdentityDescriptor>& registry_list() {
    static const std::vector<IdentityDescriptor> registry = build_registry();
    return registry;
}

const IdentityDescriptor& find_identity(const std::string& id) {
    for (const auto& d : registry_list()) {
        if (d.id == id) return d;
    }
    throw UsageError("unknown identity '" + id + "'");
}

VerificationReport verify_numeric(const std::string& id, const Params& params, const EvalContext& ctx) {
    const IdentityDescriptor& d = require_mode(id, Mode::Numeric);
    const Params p = merge_params(d.numeric_params, params, id);
    VerificationReport rep;
    rep.id = id;
    rep.mode = Mode::Numeric;
    rep.params = param_strings(p);
    rep.digits_or_order = ctx.target_digits;

    guarded(rep, [&] {
        d.validate_numeric(p);
        const int shown = ctx.target_digits;
        const SideValue lhs = d.lhs(p, ctx);
        const SideValue rhs = d.rhs(p, ctx);
        const HPReal diff = (lhs.value - rhs.value).abs();
        const HPReal bound = lhs.bound + rhs.bound;
        const HPReal threshold = pow10_neg(ctx.target_digits, ctx.working_bits()) + bound;
        bool ok = diff < threshold;

        rep.lhs = lhs.value.to_string(shown);
        rep.rhs = rhs.value.to_string(shown);
        rep.abs_diff_or_first_mismatch = diff.to_string(6);
        rep.bound = bound.to_string(6);
        rep.lhs_terms = lhs.terms;
        rep.rhs_terms = rhs.terms;
        rep.diff_value = diff;

        if (d.middle) {
            const SideValue mid = d.middle(p, ctx);
            const HPReal to_lhs = (mid.value - lhs.value).abs();
            const HPReal to_rhs = (mid.value - rhs.value).abs();
            const HPReal mid_threshold = threshold + mid.bound;
            rep.extra.emplace_back("middle", mid.value.to_string(shown));
            rep.extra.emplace_back("abs_diff_middle_lhs", to_lhs.to_string(6));
            rep.extra.emplace_back("abs_diff_middle_rhs", to_rhs.to_string(6));
            ok = ok && to_lhs < mid_threshold && to_rhs < mid_threshold;
        }
        rep.status = ok ? Status::Pass : Status::Fail;
        if (!ok) rep.message = "sides differ beyond 10^-" + std::to_string(ctx.target_digits) + " plus the reported bounds";
    });
    return rep;
}

VerificationReport verify_series(const std::string& id, const Params& params, std::size_t order) {
    const IdentityDescriptor& d = require_mode(id, Mode::ExactSeries);
    if (order < 1) throw UsageError("order must be at least 1");
    const Params p = merge_params(d.series_params, params, id);
    VerificationReport rep;
    rep.id = id;
    rep.mode = Mode::ExactSeries;
    rep.params = param_strings(p);
    rep.digits_or_order = static_cast<long>(order);
    rep.bound = "0";

    guarded(rep, [&] {
        d.validate_series(p);
        const QSeries lhs = d.lhs_series(p, order);
        const QSeries rhs = d.rhs_series(p, order);
        rep.lhs = series_head(lhs);
        rep.rhs = series_head(rhs);
        if (const auto at = first_mismatch(lhs, rhs)) {
            rep.status = Status::Fail;
            rep.abs_diff_or_first_mismatch = std::to_string(*at);
            rep.message = "coefficient of q^" + std::to_string(*at) + ": lhs " + lhs[*at].to_string() + ", rhs " +
                          rhs[*at].to_string();
        } else {
            rep.status = Status::Pass;
            rep.abs_diff_or_first_mismatch = "none";
        }
    });
    return rep;
}

VerificationReport trend_check(const std::string& id, const std::vector<BigRat>& q_list, const EvalContext& ctx) {
    const IdentityDescriptor& d = require_mode(id, Mode::Trend);
    if (q_list.size() < 3) throw UsageError("trend needs at least three q values");
    for (std::size_t i = 0; i < q_list.size(); ++i) {
        if (!(q_list[i] > BigRat(0)) || !(q_list[i] < BigRat(1))) {
            throw UsageError("trend q values must lie in (0,1), got " + q_list[i].to_string());
        }
        if (i > 0 && !(q_list[i - 1] < q_list[i])) throw UsageError("trend q values must be strictly increasing");
    }

    VerificationReport rep;
    rep.id = id;
    rep.mode = Mode::Trend;
    std::string qs;
    for (const auto& q : q_list) qs += (qs.empty() ? "" : ",") + q.to_string();
    rep.params = {{"q", qs}};
    rep.digits_or_order = ctx.target_digits;

    guarded(rep, [&] {
        const mpfr_prec_t bits = ctx.working_bits();
        const HPReal limit = d.limit(ctx);
        bool decreasing = true;
        HPReal previous(bits);
        HPReal value(bits);
        HPReal err(bits);
        for (std::size_t i = 0; i < q_list.size(); ++i) {
            value = d.scaled(HPReal(q_list[i], bits), ctx);
            err = (value - limit).abs();
            if (i > 0 && !(err < previous)) decreasing = false;
            rep.extra.emplace_back("q=" + q_list[i].to_string(),
                                   "value " + value.to_string(12) + ", error " + err.to_string(6));
            previous = err;
        }
        const HPReal relative = err / limit.abs();
        const HPReal threshold = HPReal(BigRat::parse(std::to_string(d.final_relative_error)), bits);
        rep.lhs = value.to_string(ctx.target_digits);
        rep.rhs = limit.to_string(ctx.target_digits);
        rep.abs_diff_or_first_mismatch = err.to_string(6);
        rep.bound = (threshold * limit.abs()).to_string(6);
        rep.extra.emplace_back("limit", d.limit_name);
        rep.extra.emplace_back("final_relative_error", relative.to_string(6));
        const bool close = relative < threshold;
        rep.status = decreasing && close ? Status::Pass : Status::Fail;
        if (!decreasing) {
            rep.message = "error against " + d.limit_name + " is not strictly decreasing";
        } else if (!close) {
            rep.message = "final relative error is not below " + threshold.to_string(3);
        }
    });
    return rep;
}

}  // namespace qwz::identities
