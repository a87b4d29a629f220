#pragma once

#include "qwz/bigrat.hpp"
#include "qwz/hpreal.hpp"
#include "qwz/multipoly.hpp"
#include "qwz/qseries.hpp"
#include "qwz/summation.hpp"
#include "qwz/unipoly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>

namespace qwz::wz {

enum class CheckMode { ExactRatFunc, ExactSeries, Numeric };
const char* to_string(CheckMode m);

struct CheckOutcome {
    bool pass = false;
    CheckMode mode = CheckMode::ExactRatFunc;
    /// Always present on failure: a monomial, a power of q or a numeric discrepancy.
    std::optional<std::string> witness;
    std::string detail;

    static CheckOutcome passed(CheckMode mode, std::string detail = {});
    static CheckOutcome failed(CheckMode mode, std::string witness, std::string detail = {});
};

/// F(n,k) = q^{k^2} [n,k]_q^2 / [2n,n]_q together with its certificate R,
/// written over Q = q, X = q^n, Y = q^k.
///
/// R = Q^3 X (1-Y)^2 (QX + Q^2X^2 - cY) / ((Y - QX)^2 (1 + QX)(1 - QX^2))
/// with c = 2 for the genuine pair. Other values of c exist so the checks can
/// be shown to reject a wrong certificate.
class WZPair {
public:
    static WZPair standard() { return WZPair(BigRat(2)); }
    static WZPair with_certificate_constant(const BigRat& c) { return WZPair(c); }

    const RatFunc& certificate() const { return r_; }
    /// R (Y - QX)^2 / Y^2: the certificate with its double pole at Y = QX removed.
    const RatFunc& certificate_reduced() const { return r_reduced_; }
    /// F(n+1,k) / F(n,k) = Y^2 (1-QX)^4 / ((Y-QX)^2 (1-QX^2)(1-Q^2X^2)).
    static RatFunc f_shift_n();
    /// F(n,k+1) / F(n,k) = Q (Y-X)^2 / (1-QY)^2, the Q Y^2 from q^{(k+1)^2-k^2}
    /// having cancelled against the q-binomial quotient.
    static RatFunc f_shift_k();

    /// Both sides of the difference equation divided by F(n,k):
    /// A = Q^2 (F(n+1,k)/F(n,k) - 1), B = R(n,k+1) F(n,k+1)/F(n,k) - R(n,k).
    std::pair<RatFunc, RatFunc> difference_sides() const;

private:
    explicit WZPair(const BigRat& c);
    RatFunc r_;
    RatFunc r_reduced_;
};

/// Exact check of q^2 F(n+1,k) - q^2 F(n,k) = G(n,k+1) - G(n,k) as rational functions.
CheckOutcome certificate_identity_check(const WZPair& pair = WZPair::standard());

/// Evaluates both sides of the difference equation at pseudo-random rational
/// points (q, X, Y) drawn from the seed and requires exact equality. Points on
/// a pole of either side are redrawn.
CheckOutcome certificate_spot_check(std::uint64_t seed, std::size_t points,
                                    const WZPair& pair = WZPair::standard());

/// sum_{k=0}^n q^{k^2} [n,k]_q^2 == [2n,n]_q as polynomials.
CheckOutcome qbinomial_sum_check(long n);

/// Q^a X^b Y^c -> q^{a + n b + k c}.
UniPoly specialize(const MultiPoly& p, long n, long k);

// Numeric evaluation -------------------------------------------------------

struct PairValue {
    HPReal f;
    HPReal g;
};

/// F(n,k) and G(n,k) = R(n,k) F(n,k) evaluated literally. Non-integer k goes
/// through general-subscript Pochhammer quotients. Throws PoleError at k = n + 1
/// where R has its double pole.
PairValue eval_pair(long n, const BigRat& k, const HPReal& q, const EvalContext& ctx,
                    const WZPair& pair = WZPair::standard());

HPReal f_num(long n, const BigRat& k, const HPReal& q, const EvalContext& ctx);

/// G(n,k) through the reduced certificate, so the removable singularity at
/// integer k = n + 1 (double zero of F against the double pole of R) is finite.
HPReal g_num(long n, const BigRat& k, const HPReal& q, const EvalContext& ctx,
             const WZPair& pair = WZPair::standard());

/// H(k) = q^{k^2+2} ((q;q)^3 - (q^{1-k};q)^2) (q^{k+1};q)^2 / (q;q)^4, all
/// products infinite.
HPReal h_closed_form(const BigRat& k, const HPReal& q, const EvalContext& ctx);

/// sum_{n>=0} (G(n,k+1) - G(n,k)).
SumResult h_series(const BigRat& k, const HPReal& q, const EvalContext& ctx);

// Exact series evaluation (integer k) ---------------------------------------

QSeries f_series(long n, long k, std::size_t order);
QSeries g_series(long n, long k, std::size_t order, const WZPair& pair = WZPair::standard());

// Telescoping ---------------------------------------------------------------

struct ExactSeriesMode {
    std::size_t order = 60;
};
struct NumericMode {
    HPReal q;
    EvalContext ctx;
};
using TelescopingMode = std::variant<ExactSeriesMode, NumericMode>;

/// q^2 F(m+1,k) - q^2 F(0,k) == sum_{n=0}^m (G(n,k+1) - G(n,k)).
/// Exact mode requires an integer k >= 0.
CheckOutcome telescoping_check(long m, const BigRat& k, const TelescopingMode& mode,
                               const WZPair& pair = WZPair::standard());

/// H(k) closed form against its series.
CheckOutcome h_identity_check(const BigRat& k, const HPReal& q, const EvalContext& ctx);

/// sum_{n=0}^m H(k+n) against sum_{n>=0} (G(n,k+m+1) - G(n,k)).
CheckOutcome double_telescoping_check(long m, const BigRat& k, const HPReal& q, const EvalContext& ctx);

}  // namespace qwz::wz
