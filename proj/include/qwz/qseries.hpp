#pragma once

#include "qwz/bigrat.hpp"
#include "qwz/unipoly.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace qwz {

/// Truncated power series c_0 + c_1 q + ... + c_N q^N, known modulo q^{N+1}.
/// Binary operations truncate at the smaller order of the operands.
class QSeries {
public:
    /// Zero series of the given order.
    explicit QSeries(std::size_t order);
    QSeries(std::size_t order, std::vector<BigRat> coeffs);
    static QSeries constant(std::size_t order, const BigRat& c);
    /// c q^e, which is zero when e > order.
    static QSeries monomial(std::size_t order, std::size_t e, const BigRat& c = BigRat(1));
    static QSeries from_poly(const UniPoly& p, std::size_t order);

    std::size_t order() const { return c_.size() - 1; }
    const std::vector<BigRat>& coefficients() const { return c_; }
    const BigRat& operator[](std::size_t i) const { return c_[i]; }
    bool is_zero() const;

    QSeries truncate(std::size_t order) const;

    QSeries operator-() const;
    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);
    QSeries& operator*=(const BigRat& s);
    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    friend QSeries operator*(QSeries a, const BigRat& s) { return a *= s; }
    QSeries& operator*=(const QSeries& o) { return *this = *this * o; }
    friend bool operator==(const QSeries& a, const QSeries& b) = default;

    /// Multiplies by q^e, dropping what falls past the order.
    QSeries& shift(std::size_t e);
    /// Multiplies by (1 + c q^j).
    QSeries& mul_binomial(const BigRat& c, std::size_t j);
    /// Multiplies by 1/(1 + c q^j); requires j > 0 or c != -1.
    QSeries& div_binomial(const BigRat& c, std::size_t j);

    QSeries pow(unsigned e) const;

    std::string to_string() const;

private:
    std::vector<BigRat> c_;
};

/// (q^e; q)_inf modulo q^{N+1}. Requires e >= 1.
QSeries qpoch_inf_series(long e, std::size_t order);

/// t with s t = 1 modulo q^{order+1}; throws NotInvertibleError when c_0 = 0.
QSeries series_invert(const QSeries& s);

/// Sum of c_j q0^j over the stored coefficients.
BigRat series_eval(const QSeries& s, const BigRat& q0);

/// First power where the two series differ, comparing through the smaller order.
std::optional<std::size_t> first_mismatch(const QSeries& a, const QSeries& b);

/// Expands num/den to the given order. The denominator may carry a factor q^v
/// provided the numerator is divisible by it.
QSeries series_from_ratio(const UniPoly& num, const UniPoly& den, std::size_t order);

}  // namespace qwz
