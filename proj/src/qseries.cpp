#include "qwz/qseries.hpp"

#include "qwz/errors.hpp"

#include <algorithm>
#include <sstream>

namespace qwz {

QSeries::QSeries(std::size_t order) : c_(order + 1) {}

QSeries::QSeries(std::size_t order, std::vector<BigRat> coeffs) : c_(std::move(coeffs)) { c_.resize(order + 1); }

QSeries QSeries::constant(std::size_t order, const BigRat& c) {
    QSeries s(order);
    s.c_[0] = c;
    return s;
}

QSeries QSeries::monomial(std::size_t order, std::size_t e, const BigRat& c) {
    QSeries s(order);
    if (e <= order) s.c_[e] = c;
    return s;
}

QSeries QSeries::from_poly(const UniPoly& p, std::size_t order) {
    const auto& pc = p.coefficients();
    std::vector<BigRat> v(pc.begin(), pc.begin() + static_cast<std::ptrdiff_t>(std::min(pc.size(), order + 1)));
    return QSeries(order, std::move(v));
}

bool QSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const BigRat& c) { return c.is_zero(); });
}

QSeries QSeries::truncate(std::size_t order) const {
    if (order > this->order()) throw DomainError("QSeries::truncate: cannot raise the order");
    return QSeries(order, std::vector<BigRat>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(order + 1)));
}

QSeries QSeries::operator-() const {
    QSeries r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

QSeries& QSeries::operator+=(const QSeries& o) {
    c_.resize(std::min(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
    c_.resize(std::min(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

QSeries& QSeries::operator*=(const BigRat& s) {
    for (auto& c : c_) c *= s;
    return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    const std::size_t n = std::min(a.c_.size(), b.c_.size());
    std::vector<BigRat> r(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < n; ++j) {
            if (!b.c_[j].is_zero()) r[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return QSeries(n - 1, std::move(r));
}

QSeries& QSeries::shift(std::size_t e) {
    if (e == 0) return *this;
    const std::size_t n = c_.size();
    for (std::size_t i = n; i-- > 0;) c_[i] = i >= e ? c_[i - e] : BigRat();
    return *this;
}

QSeries& QSeries::mul_binomial(const BigRat& c, std::size_t j) {
    if (c.is_zero()) return *this;
    if (j == 0) return *this *= (BigRat(1) + c);
    for (std::size_t i = c_.size(); i-- > j;) {
        if (!c_[i - j].is_zero()) c_[i] += c * c_[i - j];
    }
    return *this;
}

QSeries& QSeries::div_binomial(const BigRat& c, std::size_t j) {
    if (c.is_zero()) return *this;
    if (j == 0) {
        const BigRat d = BigRat(1) + c;
        if (d.is_zero()) throw NotInvertibleError("QSeries::div_binomial: factor has zero constant term");
        return *this *= d.reciprocal();
    }
    for (std::size_t i = j; i < c_.size(); ++i) {
        if (!c_[i - j].is_zero()) c_[i] -= c * c_[i - j];
    }
    return *this;
}

QSeries QSeries::pow(unsigned e) const {
    QSeries result = constant(order(), BigRat(1));
    QSeries base = *this;
    while (e) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e) base *= base;
    }
    return result;
}

std::string QSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[i];
        if (i) os << "*q^" << i;
    }
    if (first) os << "0";
    os << " + O(q^" << c_.size() << ")";
    return os.str();
}

QSeries qpoch_inf_series(long e, std::size_t order) {
    if (e < 1) throw DomainError("qpoch_inf_series: e must be positive");
    QSeries s = QSeries::constant(order, BigRat(1));
    for (auto j = static_cast<std::size_t>(e); j <= order; ++j) s.mul_binomial(BigRat(-1), j);
    return s;
}

QSeries series_invert(const QSeries& s) {
    const auto& c = s.coefficients();
    if (c[0].is_zero()) throw NotInvertibleError("series_invert: constant coefficient is zero");
    const std::size_t n = c.size();
    const BigRat inv0 = c[0].reciprocal();
    std::vector<BigRat> t(n);
    t[0] = inv0;
    for (std::size_t i = 1; i < n; ++i) {
        BigRat acc;
        for (std::size_t j = 1; j <= i; ++j) {
            if (!c[j].is_zero() && !t[i - j].is_zero()) acc += c[j] * t[i - j];
        }
        t[i] = -acc * inv0;
    }
    return QSeries(n - 1, std::move(t));
}

BigRat series_eval(const QSeries& s, const BigRat& q0) {
    BigRat acc;
    const auto& c = s.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * q0 + c[i];
    return acc;
}

std::optional<std::size_t> first_mismatch(const QSeries& a, const QSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    for (std::size_t i = 0; i <= n; ++i) {
        if (!(a[i] == b[i])) return i;
    }
    return std::nullopt;
}

QSeries series_from_ratio(const UniPoly& num, const UniPoly& den, std::size_t order) {
    if (den.is_zero()) throw DomainError("series_from_ratio: zero denominator");
    if (num.is_zero()) return QSeries(order);
    const std::size_t v = den.valuation();
    if (num.valuation() < v) throw NotInvertibleError("series_from_ratio: result has negative powers of q");
    const auto& dc = den.coefficients();
    const auto& nc = num.coefficients();
    const std::size_t width = order + 1;
    std::vector<BigRat> d(dc.begin() + static_cast<std::ptrdiff_t>(v),
                          dc.begin() + static_cast<std::ptrdiff_t>(std::min(dc.size(), v + width)));
    std::vector<BigRat> p(nc.begin() + static_cast<std::ptrdiff_t>(v),
                          nc.begin() + static_cast<std::ptrdiff_t>(std::min(nc.size(), v + width)));
    return QSeries(order, std::move(p)) * series_invert(QSeries(order, std::move(d)));
}

}  // namespace qwz
