#pragma once

#include "qwz/bigrat.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace qwz {

/// Dense polynomial in q with BigRat coefficients, c[0] + c[1] q + ...
/// Trailing zeros are trimmed; the zero polynomial has no coefficients.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(const BigRat& c);  // NOLINT(google-explicit-constructor)
    UniPoly(long c) : UniPoly(BigRat(c)) {}  // NOLINT(google-explicit-constructor)
    explicit UniPoly(std::vector<BigRat> coeffs);
    /// c * q^e
    static UniPoly monomial(std::size_t e, const BigRat& c = BigRat(1));

    const std::vector<BigRat>& coefficients() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    /// Index of the lowest nonzero coefficient; requires a nonzero polynomial.
    std::size_t valuation() const;
    BigRat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigRat(); }

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
    friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

    UniPoly pow(unsigned e) const;
    /// Multiplies by (1 + c q^j) in place.
    UniPoly& mul_binomial(const BigRat& c, std::size_t j);
    /// Exact division by (1 + c q^j); returns false (leaving *this unspecified)
    /// when the division leaves a remainder.
    bool div_binomial_exact(const BigRat& c, std::size_t j);

    BigRat eval(const BigRat& q) const;
    std::string to_string() const;

private:
    void trim();
    std::vector<BigRat> c_;
};

/// Quotient and remainder with deg(rem) < deg(divisor).
std::pair<UniPoly, UniPoly> divmod(const UniPoly& dividend, const UniPoly& divisor);

/// prod_{j=0}^{m-1} (1 - q^{e+j}).
UniPoly qpoch_finite_poly(long e, long m);

/// Gaussian binomial [n choose k]_q; zero when k < 0 or k > n.
UniPoly gaussian_binomial(long n, long k);

}  // namespace qwz
