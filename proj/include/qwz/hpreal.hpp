#pragma once

#include "qwz/bigrat.hpp"

#include <mpfr.h>

#include <compare>
#include <string>

namespace qwz {

/// Digit budget for one evaluation: target digits D plus guard digits g.
/// Everything intermediate runs at D + g decimal digits.
struct EvalContext {
    int target_digits = 30;
    int guard_digits = 20;

    EvalContext() = default;
    EvalContext(int digits, int guard = 20);

    int working_digits() const { return target_digits + guard_digits; }
    mpfr_prec_t working_bits() const;
    /// Same guard, different target.
    EvalContext with_digits(int digits) const { return EvalContext(digits, guard_digits); }
};

mpfr_prec_t digits_to_bits(int digits);

/// Arbitrary-precision real (RAII wrapper around mpfr_t). Binary operations
/// run at the larger precision of the two operands, rounding to nearest.
class HPReal {
public:
    explicit HPReal(mpfr_prec_t bits = 128);
    HPReal(long v, mpfr_prec_t bits);
    HPReal(const BigRat& v, mpfr_prec_t bits);
    /// Parses a decimal string.
    HPReal(const std::string& decimal, mpfr_prec_t bits);

    HPReal(const HPReal& o);
    HPReal(HPReal&& o) noexcept;
    HPReal& operator=(const HPReal& o);
    HPReal& operator=(HPReal&& o) noexcept;
    ~HPReal();

    static HPReal from(const BigRat& v, const EvalContext& ctx) { return HPReal(v, ctx.working_bits()); }
    static HPReal from(long v, const EvalContext& ctx) { return HPReal(v, ctx.working_bits()); }

    mpfr_prec_t bits() const { return mpfr_get_prec(v_); }
    /// Decimal digits carried by the representation.
    int digits() const;
    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// floor(log10 |x|); very negative for zero.
    long exponent10() const;

    HPReal operator-() const;
    HPReal& operator+=(const HPReal& o);
    HPReal& operator-=(const HPReal& o);
    HPReal& operator*=(const HPReal& o);
    /// Throws DomainError on an exactly zero divisor.
    HPReal& operator/=(const HPReal& o);
    HPReal& operator*=(long s);
    HPReal& operator/=(long s);
    friend HPReal operator+(HPReal a, const HPReal& b) { return a += b; }
    friend HPReal operator-(HPReal a, const HPReal& b) { return a -= b; }
    friend HPReal operator*(HPReal a, const HPReal& b) { return a *= b; }
    friend HPReal operator/(HPReal a, const HPReal& b) { return a /= b; }
    friend HPReal operator*(HPReal a, long s) { return a *= s; }
    friend HPReal operator/(HPReal a, long s) { return a /= s; }

    friend bool operator==(const HPReal& a, const HPReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend std::partial_ordering operator<=>(const HPReal& a, const HPReal& b);

    HPReal abs() const;
    HPReal sqrt() const;
    HPReal pow(long e) const;

    /// Scientific notation with the given number of significant digits.
    std::string to_string(int significant) const;
    /// Fixed notation with the given number of digits after the point.
    std::string to_fixed(int decimals) const;

private:
    mpfr_t v_;
};

/// 10^{-d} at the given precision.
HPReal pow10_neg(int d, mpfr_prec_t bits);

/// Smallest of two HPReals / largest.
HPReal max(const HPReal& a, const HPReal& b);

enum class Transcendental { Exp, Ln, Sin, Cos };

/// Elementary function at working precision; ln of a nonpositive value is a DomainError.
HPReal hp_transcendental(Transcendental f, const HPReal& x, const EvalContext& ctx);
inline HPReal hp_exp(const HPReal& x, const EvalContext& ctx) { return hp_transcendental(Transcendental::Exp, x, ctx); }
inline HPReal hp_ln(const HPReal& x, const EvalContext& ctx) { return hp_transcendental(Transcendental::Ln, x, ctx); }
inline HPReal hp_sin(const HPReal& x, const EvalContext& ctx) { return hp_transcendental(Transcendental::Sin, x, ctx); }

/// x^e for a real exponent via exp(e ln x); integer e uses repeated squaring.
HPReal hp_pow(const HPReal& x, const BigRat& e, const EvalContext& ctx);

/// pi by Machin's arctangent formula, memoized per precision.
HPReal hp_constant_pi(const EvalContext& ctx);

}  // namespace qwz
