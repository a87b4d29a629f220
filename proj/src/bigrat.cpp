#include "qwz/bigrat.hpp"

#include "qwz/errors.hpp"

#include <cctype>
#include <climits>

namespace qwz {

BigRat::BigRat(long num, long den) : BigRat(mpz_class(num), mpz_class(den)) {}

BigRat::BigRat(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DomainError("BigRat: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

BigRat::BigRat(const mpq_class& v) : v_(v) {
    if (v_.get_den() == 0) throw DomainError("BigRat: zero denominator");
    v_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

mpz_class parse_signed_integer(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw DomainError("malformed number: '" + std::string(whole) + "'");
    mpz_class z(std::string(s), 10);
    return negative ? mpz_class(-z) : z;
}

}  // namespace

BigRat BigRat::parse(std::string_view text) {
    const std::string_view whole = text;
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw DomainError("malformed number: empty string");

    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const mpz_class num = parse_signed_integer(text.substr(0, slash), whole);
        const std::string_view den_text = text.substr(slash + 1);
        if (!all_digits(den_text)) throw DomainError("malformed number: '" + std::string(whole) + "'");
        const mpz_class den(std::string(den_text), 10);
        if (den == 0) throw DomainError("malformed number: zero denominator in '" + std::string(whole) + "'");
        return BigRat(num, den);
    }

    bool negative = false;
    if (text.front() == '+' || text.front() == '-') {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    long exponent = 0;
    if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        const mpz_class ez = parse_signed_integer(text.substr(e + 1), whole);
        if (!ez.fits_slong_p() || ::abs(ez) > 100000) throw DomainError("exponent out of range: '" + std::string(whole) + "'");
        exponent = ez.get_si();
        text = text.substr(0, e);
    }
    std::string digits;
    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        const std::string_view int_part = text.substr(0, dot);
        const std::string_view frac_part = text.substr(dot + 1);
        if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
            (!frac_part.empty() && !all_digits(frac_part))) {
            throw DomainError("malformed number: '" + std::string(whole) + "'");
        }
        digits = std::string(int_part) + std::string(frac_part);
        exponent -= static_cast<long>(frac_part.size());
    } else {
        if (!all_digits(text)) throw DomainError("malformed number: '" + std::string(whole) + "'");
        digits = std::string(text);
    }
    mpz_class mant(digits, 10);
    if (negative) mant = -mant;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    return exponent >= 0 ? BigRat(mpz_class(mant * scale)) : BigRat(mant, scale);
}

long BigRat::to_long() const {
    if (!is_integer() || !v_.get_num().fits_slong_p()) throw DomainError("BigRat::to_long: not a machine integer");
    return v_.get_num().get_si();
}

mpz_class BigRat::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

BigRat& BigRat::operator+=(const BigRat& o) {
    v_ += o.v_;
    return *this;
}

BigRat& BigRat::operator-=(const BigRat& o) {
    v_ -= o.v_;
    return *this;
}

BigRat& BigRat::operator*=(const BigRat& o) {
    v_ *= o.v_;
    return *this;
}

BigRat& BigRat::operator/=(const BigRat& o) {
    if (o.is_zero()) throw DomainError("BigRat: division by zero");
    v_ /= o.v_;
    return *this;
}

BigRat BigRat::reciprocal() const {
    if (is_zero()) throw DomainError("BigRat: reciprocal of zero");
    return BigRat(mpq_class(1) / v_);
}

BigRat BigRat::pow(long e) const {
    if (e < 0) return reciprocal().pow(-e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    mpq_class r;
    mpq_set_num(r.get_mpq_t(), num.get_mpz_t());
    mpq_set_den(r.get_mpq_t(), den.get_mpz_t());
    return BigRat(r);
}

std::ostream& operator<<(std::ostream& os, const BigRat& r) { return os << r.to_string(); }

}  // namespace qwz
