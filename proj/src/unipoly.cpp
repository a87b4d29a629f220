#include "qwz/unipoly.hpp"

#include "qwz/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qwz {

UniPoly::UniPoly(const BigRat& c) {
    if (!c.is_zero()) c_.push_back(c);
}

UniPoly::UniPoly(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(std::size_t e, const BigRat& c) {
    if (c.is_zero()) return {};
    std::vector<BigRat> v(e + 1);
    v[e] = c;
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::size_t UniPoly::valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i].is_zero()) return i;
    }
    throw DomainError("valuation of the zero polynomial");
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

namespace {

bool integral(const std::vector<BigRat>& c) {
    return std::all_of(c.begin(), c.end(), [](const BigRat& x) { return x.is_integer(); });
}

}  // namespace

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (integral(a.c_) && integral(b.c_)) {
        // Integer coefficients: accumulate in mpz and skip the rational normalization.
        std::vector<mpz_class> acc(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            const mpz_srcptr x = a.c_[i].raw().get_num_mpz_t();
            if (mpz_sgn(x) == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                mpz_addmul(acc[i + j].get_mpz_t(), x, b.c_[j].raw().get_num_mpz_t());
            }
        }
        std::vector<BigRat> r;
        r.reserve(acc.size());
        for (auto& z : acc) r.emplace_back(z);
        return UniPoly(std::move(r));
    }
    std::vector<BigRat> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            r[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return UniPoly(std::move(r));
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly result(1);
    UniPoly base = *this;
    while (e) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e) base *= base;
    }
    return result;
}

UniPoly& UniPoly::mul_binomial(const BigRat& c, std::size_t j) {
    if (c.is_zero() || c_.empty()) return *this;
    const std::size_t old = c_.size();
    c_.resize(old + j);
    for (std::size_t i = old; i-- > 0;) {
        if (!c_[i].is_zero()) c_[i + j] += c * c_[i];
    }
    trim();
    return *this;
}

bool UniPoly::div_binomial_exact(const BigRat& c, std::size_t j) {
    if (c.is_zero() || c_.empty()) return true;
    if (j == 0) {
        const BigRat d = BigRat(1) + c;
        if (d.is_zero()) return false;
        for (auto& x : c_) x /= d;
        return true;
    }
    // Synthetic division from the low end: t_i = s_i - c t_{i-j}.
    for (std::size_t i = j; i < c_.size(); ++i) {
        if (!c_[i - j].is_zero()) c_[i] -= c * c_[i - j];
    }
    // The top j coefficients now hold the remainder.
    if (c_.size() <= j) return false;
    for (std::size_t i = c_.size() - j; i < c_.size(); ++i) {
        if (!c_[i].is_zero()) return false;
    }
    c_.resize(c_.size() - j);
    trim();
    return true;
}

BigRat UniPoly::eval(const BigRat& q) const {
    BigRat acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * q + c_[i];
    return acc;
}

std::string UniPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[i];
        if (i) os << "*q^" << i;
    }
    return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& dividend, const UniPoly& divisor) {
    if (divisor.is_zero()) throw DomainError("divmod: division by the zero polynomial");
    std::vector<BigRat> rem = dividend.coefficients();
    const auto& d = divisor.coefficients();
    const std::size_t dd = d.size() - 1;
    if (rem.size() < d.size()) return {UniPoly(), dividend};
    std::vector<BigRat> quot(rem.size() - dd);
    const BigRat lead_inv = d.back().reciprocal();
    for (std::size_t i = rem.size(); i-- > dd;) {
        if (rem[i].is_zero()) continue;
        const BigRat f = rem[i] * lead_inv;
        quot[i - dd] = f;
        for (std::size_t j = 0; j <= dd; ++j) {
            if (!d[j].is_zero()) rem[i - dd + j] -= f * d[j];
        }
    }
    rem.resize(dd);
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly qpoch_finite_poly(long e, long m) {
    if (e < 1 || m < 0) throw DomainError("qpoch_finite_poly: requires e >= 1 and m >= 0");
    UniPoly p(1);
    for (long j = 0; j < m; ++j) p.mul_binomial(BigRat(-1), static_cast<std::size_t>(e + j));
    return p;
}

UniPoly gaussian_binomial(long n, long k) {
    if (n < 0) throw DomainError("gaussian_binomial: n must be nonnegative");
    if (k < 0 || k > n) return {};
    // (q;q)_n / ((q;q)_k (q;q)_{n-k}), dividing out one factor at a time.
    // The smaller denominator factorial cancels the matching prefix of the numerator.
    const long lo = std::min(k, n - k);
    const long hi = n - lo;
    UniPoly p = qpoch_finite_poly(hi + 1, n - hi);
    for (long j = 1; j <= lo; ++j) {
        if (!p.div_binomial_exact(BigRat(-1), static_cast<std::size_t>(j))) {
            throw std::logic_error("gaussian_binomial: nonzero remainder in exact division");
        }
    }
    return p;
}

}  // namespace qwz
