#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace qwz {

/// Exact rational number, always in lowest terms with a positive denominator.
class BigRat {
public:
    BigRat() = default;
    BigRat(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    BigRat(long num, long den);
    BigRat(const mpz_class& num, const mpz_class& den);
    explicit BigRat(const mpz_class& v) : v_(v) {}
    explicit BigRat(const mpq_class& v);

    /// Accepts "p/q", integers and decimals with optional exponent ("-1.25e-3").
    static BigRat parse(std::string_view text);

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    /// Requires is_integer() and a value that fits in a long.
    long to_long() const;
    double to_double() const { return v_.get_d(); }

    /// Largest integer not exceeding the value.
    mpz_class floor() const;

    BigRat operator-() const { return BigRat(mpq_class(-v_)); }
    BigRat& operator+=(const BigRat& o);
    BigRat& operator-=(const BigRat& o);
    BigRat& operator*=(const BigRat& o);
    BigRat& operator/=(const BigRat& o);

    friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
    friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
    friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
    friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }

    friend bool operator==(const BigRat& a, const BigRat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const BigRat& a, const BigRat& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    BigRat abs() const { return BigRat(mpq_class(::abs(v_))); }
    BigRat reciprocal() const;
    /// Integer power; negative exponents require a nonzero base.
    BigRat pow(long e) const;

    std::string to_string() const { return v_.get_str(); }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const BigRat& r);

}  // namespace qwz
