#include "qwz/cli.hpp"

#include "qwz/errors.hpp"
#include "qwz/identities.hpp"
#include "qwz/report.hpp"
#include "qwz/wz.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <thread>
#include <variant>

namespace qwz::cli {

namespace {

using identities::Params;
using identities::Status;
using identities::VerificationReport;

struct Config {
    std::string id;
    std::optional<std::string> q;
    std::optional<std::string> k;
    int digits = 30;
    std::size_t order = 100;
    std::string format = "text";
    std::uint64_t seed = 0;
    unsigned threads = 0;
    std::string q_list;
};

using Result = std::variant<VerificationReport, CheckReport>;
using Job = std::function<Result()>;

Status status_of(const Result& r) {
    return std::visit([](const auto& x) { return x.status; }, r);
}

int exit_code(const std::vector<Result>& results) {
    std::vector<Status> statuses;
    statuses.reserve(results.size());
    for (const auto& r : results) statuses.push_back(status_of(r));
    return aggregate_exit_code(statuses);
}

void validate(const Config& c) {
    if (c.digits < 5) throw UsageError("--digits must be at least 5");
    if (c.order < 1) throw UsageError("--order must be at least 1");
    if (c.format != "text" && c.format != "json") throw UsageError("--format must be text or json");
}

BigRat parse_q(const std::string& text) {
    const BigRat q = BigRat::parse(text);
    if (!(q > BigRat(0)) || !(q < BigRat(1))) throw DomainError("q must lie in (0,1), got " + text);
    return q;
}

std::vector<BigRat> parse_q_list(const std::string& text) {
    std::vector<BigRat> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        out.push_back(parse_q(item));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

/// Runs a wz check, mapping engine errors onto statuses.
CheckReport check(std::string id, std::string label, std::vector<std::pair<std::string, std::string>> params,
                  long digits_or_order, const std::function<wz::CheckOutcome()>& body) {
    CheckReport r{std::move(id), std::move(label), Status::Fail, {}, std::move(params), digits_or_order};
    try {
        r.outcome = body();
        r.status = r.outcome.pass ? Status::Pass : Status::Fail;
    } catch (const PoleError& e) {
        r.status = Status::Pole;
        r.outcome.detail = e.what();
    } catch (const ConvergenceError& e) {
        r.status = Status::Inconclusive;
        r.outcome.detail = e.what();
    } catch (const std::domain_error& e) {
        r.status = Status::DomainError;
        r.outcome.detail = e.what();
    }
    return r;
}

std::vector<Job> certify_jobs(const Config& c) {
    std::vector<Job> jobs;
    const EvalContext ctx(c.digits);
    jobs.push_back([] {
        return check("certificate", "certificate: exact", {}, 0, [] { return wz::certificate_identity_check(); });
    });
    const std::uint64_t seed = c.seed;
    jobs.push_back([seed] {
        return check("certificate_spot", "certificate spot checks (seed " + std::to_string(seed) + ", 100 points):",
                     {{"seed", std::to_string(seed)}}, 0, [seed] { return wz::certificate_spot_check(seed, 100); });
    });
    jobs.push_back([] {
        return check("qbinomial", "qbinomial n≤40:", {{"n_max", "40"}}, 0, [] {
            for (long n = 0; n <= 40; ++n) {
                wz::CheckOutcome o = wz::qbinomial_sum_check(n);
                if (!o.pass) return o;
            }
            return wz::CheckOutcome::passed(wz::CheckMode::ExactSeries, "n = 0..40");
        });
    });
    for (long k : {0L, 1L, 2L}) {
        jobs.push_back([k] {
            const std::string ks = std::to_string(k);
            return check("telescoping", "telescoping k=" + ks + " m≤5 order 60:", {{"k", ks}, {"m_max", "5"}}, 60, [k] {
                for (long m = 0; m <= 5; ++m) {
                    wz::CheckOutcome o = wz::telescoping_check(m, BigRat(k), wz::ExactSeriesMode{60});
                    if (!o.pass) return o;
                }
                return wz::CheckOutcome::passed(wz::CheckMode::ExactSeries, "m = 0..5");
            });
        });
    }
    jobs.push_back([ctx] {
        return check("telescoping", "telescoping k=7/10 q=2/5 m=10:", {{"k", "7/10"}, {"q", "2/5"}, {"m", "10"}},
                     ctx.target_digits, [ctx] {
                         const HPReal q(BigRat(2, 5), ctx.working_bits());
                         return wz::telescoping_check(10, BigRat(7, 10), wz::NumericMode{q, ctx});
                     });
    });
    for (const BigRat& k : {BigRat(3, 10), BigRat(1)}) {
        jobs.push_back([ctx, k] {
            return check("h_identity", "H(k) k=" + k.to_string() + " q=1/2:", {{"k", k.to_string()}, {"q", "1/2"}},
                         ctx.target_digits, [ctx, k] {
                             return wz::h_identity_check(k, HPReal(BigRat(1, 2), ctx.working_bits()), ctx);
                         });
        });
    }
    jobs.push_back([ctx] {
        return check("double_telescoping", "double telescoping k=1/2 q=3/5 m=3:",
                     {{"k", "1/2"}, {"q", "3/5"}, {"m", "3"}}, ctx.target_digits, [ctx] {
                         return wz::double_telescoping_check(3, BigRat(1, 2), HPReal(BigRat(3, 5), ctx.working_bits()), ctx);
                     });
    });
    return jobs;
}

/// The full suite: certificate checks, then every identity in registry order
/// over its parameter grid.
std::vector<Job> all_jobs(const Config& c) {
    std::vector<Job> jobs = certify_jobs(c);
    const EvalContext ctx(c.digits);
    const std::size_t order = c.order;
    auto numeric = [&](const std::string& id, Params p) {
        jobs.push_back([id, p, ctx] { return identities::verify_numeric(id, p, ctx); });
    };
    auto series = [&](const std::string& id, Params p) {
        jobs.push_back([id, p, order] { return identities::verify_series(id, p, order); });
    };
    const std::vector<BigRat> trend_q = {BigRat(9, 10), BigRat(99, 100), BigRat(999, 1000)};

    for (const auto& d : identities::registry_list()) {
        if (d.id == "hks1" || d.id == "hks2") {
            for (const BigRat& q : {BigRat(3, 10), BigRat(1, 2), BigRat(7, 10)}) numeric(d.id, {{"q", q}});
            series(d.id, {});
        } else if (d.id == "main_theorem") {
            for (const BigRat& q : {BigRat(1, 5), BigRat(1, 2), BigRat(4, 5)}) {
                for (const BigRat& k : {BigRat(1, 4), BigRat(1, 2), BigRat(3, 4)}) numeric(d.id, {{"q", q}, {"k", k}});
            }
            for (long k : {1L, 2L, 3L}) series(d.id, {{"k", BigRat(k)}});
        } else if (d.id == "classical_limit_trigamma") {
            for (long k : {1L, 3L, 5L, 7L, 9L}) numeric(d.id, {{"k", BigRat(k, 10)}});
        } else if (d.id == "partition_gf") {
            numeric(d.id, {});
            jobs.push_back([id = d.id, order] { return identities::verify_series(id, {}, std::max<std::size_t>(order, 200)); });
        } else {
            if (d.supports(identities::Mode::Numeric)) numeric(d.id, {});
            if (d.supports(identities::Mode::ExactSeries)) series(d.id, {});
        }
        if (d.supports(identities::Mode::Trend)) {
            jobs.push_back([id = d.id, trend_q, ctx] { return identities::trend_check(id, trend_q, ctx); });
        }
    }
    return jobs;
}

/// Runs jobs on up to `threads` workers; results keep job order.
std::vector<Result> run_jobs(const std::vector<Job>& jobs, unsigned threads) {
    std::vector<std::optional<Result>> slots(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) slots[i] = jobs[i]();
    };
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const auto count = static_cast<unsigned>(std::min<std::size_t>(threads == 0 ? hw : threads, jobs.size()));
    if (count <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::vector<Result> out;
    out.reserve(jobs.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

nlohmann::ordered_json result_json(const Result& r) {
    return std::visit([](const auto& x) { return to_json(x); }, r);
}

void render(std::ostream& out, const Result& r) {
    std::visit([&](const auto& x) { render_text(out, x); }, r);
}

int emit_suite(const std::vector<Result>& results, const Config& c, std::ostream& out) {
    const int code = exit_code(results);
    std::size_t counts[5] = {0, 0, 0, 0, 0};
    for (const auto& r : results) ++counts[static_cast<int>(status_of(r))];
    if (c.format == "json") {
        nlohmann::ordered_json reports = nlohmann::ordered_json::array();
        for (const auto& r : results) reports.push_back(result_json(r));
        nlohmann::ordered_json summary;
        summary["total"] = results.size();
        summary["pass"] = counts[static_cast<int>(Status::Pass)];
        summary["fail"] = counts[static_cast<int>(Status::Fail)];
        summary["domain-error"] = counts[static_cast<int>(Status::DomainError)];
        summary["pole"] = counts[static_cast<int>(Status::Pole)];
        summary["inconclusive"] = counts[static_cast<int>(Status::Inconclusive)];
        summary["exit_code"] = code;
        out << nlohmann::ordered_json{{"reports", reports}, {"summary", summary}}.dump(2) << "\n";
    } else {
        for (const auto& r : results) render(out, r);
        out << "summary: " << results.size() << " checks, " << counts[static_cast<int>(Status::Pass)] << " pass, "
            << counts[static_cast<int>(Status::Fail)] << " fail, "
            << counts[static_cast<int>(Status::DomainError)] + counts[static_cast<int>(Status::Pole)]
            << " domain/pole, " << counts[static_cast<int>(Status::Inconclusive)] << " inconclusive\n";
    }
    return code;
}

int emit_single(const VerificationReport& r, const Config& c, std::ostream& out) {
    if (c.format == "json") {
        out << to_json(r).dump(2) << "\n";
    } else {
        render_text(out, r);
    }
    return exit_code({r});
}

int cmd_list(const Config& c, std::ostream& out) {
    if (c.format == "json") {
        nlohmann::ordered_json a = nlohmann::ordered_json::array();
        for (const auto& d : identities::registry_list()) a.push_back(to_json(d));
        out << a.dump(2) << "\n";
    } else {
        render_registry(out, identities::registry_list());
    }
    return kPass;
}

int cmd_verify(const Config& c, std::ostream& out) {
    Params p;
    if (c.q) p["q"] = parse_q(*c.q);
    if (c.k) p["k"] = BigRat::parse(*c.k);
    identities::find_identity(c.id);
    return emit_single(identities::verify_numeric(c.id, p, EvalContext(c.digits)), c, out);
}

int cmd_series(const Config& c, std::ostream& out) {
    Params p;
    if (c.q) throw UsageError("series mode takes no --q");
    if (c.k) p["k"] = BigRat::parse(*c.k);
    identities::find_identity(c.id);
    return emit_single(identities::verify_series(c.id, p, c.order), c, out);
}

int cmd_trend(const Config& c, std::ostream& out) {
    identities::find_identity(c.id);
    const std::vector<BigRat> qs = parse_q_list(c.q_list);
    return emit_single(identities::trend_check(c.id, qs, EvalContext(c.digits)), c, out);
}

}  // namespace

int aggregate_exit_code(const std::vector<Status>& statuses) {
    bool fail = false, domain = false, inconclusive = false;
    for (Status s : statuses) {
        switch (s) {
            case Status::Pass: break;
            case Status::Fail: fail = true; break;
            case Status::DomainError:
            case Status::Pole: domain = true; break;
            case Status::Inconclusive: inconclusive = true; break;
        }
    }
    if (fail) return kFail;
    if (domain) return kUsage;
    if (inconclusive) return kInconclusive;
    return kPass;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config c;
    CLI::App app{"Verifies q-series identities, a q-WZ certificate and their classical limits"};
    app.require_subcommand(1);

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", c.format, "Output format: text or json")->capture_default_str();
    };
    auto add_digits = [&](CLI::App* sub) {
        sub->add_option("--digits", c.digits, "Target decimal digits D (>= 5)")->capture_default_str();
    };
    auto add_threads = [&](CLI::App* sub) {
        sub->add_option("--threads", c.threads, "Worker threads (0 = hardware concurrency)")->capture_default_str();
    };
    auto add_seed = [&](CLI::App* sub) {
        sub->add_option("--seed", c.seed, "Seed for randomized spot checks")->capture_default_str();
    };

    CLI::App* list = app.add_subcommand("list", "Print the identity registry");
    add_format(list);

    CLI::App* verify = app.add_subcommand("verify", "Numeric verification of one identity");
    verify->add_option("id", c.id, "Identity id")->required();
    verify->add_option("--q", c.q, "q in (0,1), decimal or p/q");
    verify->add_option("--k", c.k, "k, decimal or p/q");
    add_digits(verify);
    add_format(verify);

    CLI::App* series = app.add_subcommand("series", "Exact power-series verification of one identity");
    series->add_option("id", c.id, "Identity id")->required();
    series->add_option("--k", c.k, "Integer k");
    series->add_option("--q", c.q, "Not accepted in series mode")->group("");
    series->add_option("--order", c.order, "Truncation order N (>= 1)")->capture_default_str();
    add_format(series);

    CLI::App* certify = app.add_subcommand("certify", "Exact certificate, q-binomial sweep and telescoping samples");
    add_digits(certify);
    add_seed(certify);
    add_threads(certify);
    add_format(certify);

    CLI::App* trend = app.add_subcommand("trend", "q -> 1 trend check");
    trend->add_option("id", c.id, "Identity id")->required();
    trend->add_option("--q", c.q_list, "Comma-separated increasing q values")->required();
    add_digits(trend);
    add_format(trend);

    CLI::App* all = app.add_subcommand("all", "Full verification suite");
    add_digits(all);
    all->add_option("--order", c.order, "Truncation order N for series checks (>= 1)")->capture_default_str();
    add_seed(all);
    add_threads(all);
    add_format(all);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kPass;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        validate(c);
        if (*list) return cmd_list(c, out);
        if (*verify) return cmd_verify(c, out);
        if (*series) return cmd_series(c, out);
        if (*trend) return cmd_trend(c, out);
        if (*certify) return emit_suite(run_jobs(certify_jobs(c), c.threads), c, out);
        if (*all) return emit_suite(run_jobs(all_jobs(c), c.threads), c, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        if (std::string(e.what()).rfind("unknown identity", 0) == 0) {
            err << "registered identities:\n";
            render_registry(err, identities::registry_list());
        }
        return kUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << "\n";
        return kInconclusive;
    }
    return kUsage;
}

}  // namespace qwz::cli
