#pragma once

#include "qwz/bigrat.hpp"
#include "qwz/hpreal.hpp"
#include "qwz/qseries.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qwz::identities {

enum class Mode { Numeric, ExactSeries, Trend };
const char* to_string(Mode m);

enum class Status { Pass, Fail, DomainError, Pole, Inconclusive };
const char* to_string(Status s);

using Params = std::map<std::string, BigRat>;

struct ParamSpec {
    std::string name;
    std::string domain;
    /// Used when the caller leaves the parameter out.
    BigRat default_value;
};

/// One side of an identity evaluated numerically.
struct SideValue {
    HPReal value;
    /// Tail estimate plus rounding; zero for closed forms.
    HPReal bound;
    std::size_t terms = 0;
};

using NumericSide = std::function<SideValue(const Params&, const EvalContext&)>;
using SeriesSide = std::function<QSeries(const Params&, std::size_t)>;

struct IdentityDescriptor {
    std::string id;
    std::string title;
    /// Where the identity comes from.
    std::string source;
    std::vector<ParamSpec> numeric_params;
    std::vector<ParamSpec> series_params;
    std::vector<Mode> modes;

    NumericSide lhs;
    NumericSide rhs;
    /// Optional third expression that must agree with both sides.
    NumericSide middle;
    /// Throws DomainError when the numeric parameters are out of range.
    std::function<void(const Params&)> validate_numeric;

    SeriesSide lhs_series;
    SeriesSide rhs_series;
    std::function<void(const Params&)> validate_series;

    /// Trend identities: the q-dependent quantity and its q -> 1 limit.
    std::function<HPReal(const HPReal& q, const EvalContext&)> scaled;
    std::function<HPReal(const EvalContext&)> limit;
    std::string limit_name;
    /// Largest admissible relative error at the last q.
    double final_relative_error = 0.01;

    bool supports(Mode m) const;
};

/// Every registered identity, in a fixed order.
const std::vector<IdentityDescriptor>& registry_list();
/// Throws UsageError for an unknown id.
const IdentityDescriptor& find_identity(const std::string& id);

struct VerificationReport {
    std::string id;
    Mode mode = Mode::Numeric;
    std::vector<std::pair<std::string, std::string>> params;
    /// Digits D for numeric and trend runs, order N for series runs.
    long digits_or_order = 0;
    std::string lhs;
    std::string rhs;
    /// |lhs - rhs| (numeric, trend) or the first mismatching power ("none" on success).
    std::string abs_diff_or_first_mismatch;
    std::string bound;
    Status status = Status::Fail;
    std::string message;
    /// Extra named values (e.g. the middle expression of a three-way identity,
    /// per-q errors of a trend run).
    std::vector<std::pair<std::string, std::string>> extra;
    std::size_t lhs_terms = 0;
    std::size_t rhs_terms = 0;
    /// Numeric runs keep the raw difference for programmatic checks.
    std::optional<HPReal> diff_value;

    bool passed() const { return status == Status::Pass; }
};

/// Evaluates both sides independently and compares them: pass iff
/// |lhs - rhs| < 10^{-D} + both reported bounds.
VerificationReport verify_numeric(const std::string& id, const Params& params, const EvalContext& ctx);

/// Expands both sides to order N with exact coefficients.
VerificationReport verify_series(const std::string& id, const Params& params, std::size_t order);

/// Evaluates the scaled quantity along q_list: pass iff the error against the
/// limit strictly decreases and ends below the identity's relative threshold.
/// A precision or term budget overrun is Inconclusive.
VerificationReport trend_check(const std::string& id, const std::vector<BigRat>& q_list, const EvalContext& ctx);

// Pieces of the classical-limit identities, exposed for property checks --------

/// Left series of the trigamma identity:
/// 1/2 sum_n (3 - 2k + 3n) (1)_n^4 / ((1)_{k-1}^2 (1)_{2n+1} (1)_{n-k+1}^2).
SideValue trigamma_identity_lhs(const BigRat& k, const EvalContext& ctx);
/// Middle series 1 - sum_n 1/((1)_{-k-n}^2 (1)_{k+n}^2), summed termwise after
/// the reflection reduction.
SideValue trigamma_identity_middle(const BigRat& k, const EvalContext& ctx);
/// Closed form 1 - psi'(k) sin^2(k pi) / pi^2.
HPReal trigamma_identity_closed(const BigRat& k, const EvalContext& ctx);
/// sin^2(k pi) / (pi^2 (k + n)^2), the reduced n-th middle term.
HPReal trigamma_middle_term(const BigRat& k, long n, const EvalContext& ctx);

/// sum_n (3n + 2) (1)_n^4 / ((1)_{n+1/2}^2 (1)_{2n+1}).
SideValue pi_k_half_sum(const EvalContext& ctx);

}  // namespace qwz::identities
