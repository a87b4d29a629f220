#pragma once

#include "qwz/bigrat.hpp"
#include "qwz/hpreal.hpp"

#include <cstddef>
#include <variant>

namespace qwz {

struct FiniteSub {
    std::size_t n = 0;
};
struct InfiniteSub {};
/// Real subscript, interpreted as (a;q)_inf / (a q^x;q)_inf.
struct GeneralSub {
    HPReal x;
};
using Subscript = std::variant<FiniteSub, InfiniteSub, GeneralSub>;

/// Upper limit on factors in one infinite product before giving up.
inline constexpr std::size_t kMaxProductFactors = 20'000'000;

/// (a;q)_sub for 0 < q < 1. Throws DomainError for q outside (0,1) and
/// ConvergenceError when the product would need more than kMaxProductFactors.
HPReal qpoch_num(const HPReal& a, const HPReal& q, const Subscript& sub, const EvalContext& ctx);

/// (q^e;q)_sub with an exact exponent. Factors that are exactly zero
/// (integer e + j = 0) make the infinite product exactly zero, which is
/// returned as such. A General subscript whose denominator product vanishes
/// is a PoleError (the General subscript is only checked numerically; see
/// qpoch_qpow_rational for exact subscripts).
HPReal qpoch_qpow(const BigRat& e, const HPReal& q, const Subscript& sub, const EvalContext& ctx);

/// (q^e;q)_x for a rational subscript, with exact zero and pole detection.
HPReal qpoch_qpow_rational(const BigRat& e, const BigRat& x, const HPReal& q, const EvalContext& ctx);

/// 1/(q;q)_x = (q^{x+1};q)_inf / (q;q)_inf, which is zero at negative integers.
HPReal qfactorial_reciprocal(const BigRat& x, const HPReal& q, const EvalContext& ctx);

}  // namespace qwz
