#include "qwz/multipoly.hpp"

#include "qwz/errors.hpp"

#include <sstream>

namespace qwz {

std::string to_string(const Term& t) {
    std::ostringstream os;
    os << t.coefficient;
    if (t.monomial.q) os << "*Q^" << t.monomial.q;
    if (t.monomial.x) os << "*X^" << t.monomial.x;
    if (t.monomial.y) os << "*Y^" << t.monomial.y;
    return os.str();
}

MultiPoly::MultiPoly(const BigRat& c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

MultiPoly MultiPoly::monomial(const Monomial& m, const BigRat& c) {
    MultiPoly p;
    p.add_term(m, c);
    return p;
}

void MultiPoly::add_term(const Monomial& m, const BigRat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Term MultiPoly::leading_term() const {
    if (terms_.empty()) throw DomainError("leading_term of the zero polynomial");
    const auto& [m, c] = *terms_.rbegin();
    return {m, c};
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    }
    return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ib = b.terms_.begin();
    for (const auto& [m, c] : a.terms_) {
        if (!(ib->first == m) || !(ib->second == c)) return false;
        ++ib;
    }
    return true;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly result(1);
    MultiPoly base = *this;
    while (e) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e) base *= base;
    }
    return result;
}

BigRat MultiPoly::eval(const BigRat& q, const BigRat& x, const BigRat& y) const {
    BigRat sum;
    for (const auto& [m, c] : terms_) {
        sum += c * q.pow(m.q) * x.pow(m.x) * y.pow(m.y);
    }
    return sum;
}

MultiPoly MultiPoly::compose(const MultiPoly& q_image, const MultiPoly& x_image, const MultiPoly& y_image) const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) {
        r += MultiPoly(c) * q_image.pow(m.q) * x_image.pow(m.x) * y_image.pow(m.y);
    }
    return r;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += qwz::to_string(Term{it->first, it->second});
    }
    return out;
}

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("RatFunc: zero denominator");
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.reciprocal(); }

RatFunc RatFunc::reciprocal() const {
    if (num_.is_zero()) throw DomainError("RatFunc: reciprocal of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(unsigned e) const { return RatFunc(num_.pow(e), den_.pow(e)); }

BigRat RatFunc::eval(const EvalPoint& p) const {
    const BigRat d = den_.eval(p.q, p.x, p.y);
    if (d.is_zero()) throw PoleError("RatFunc: denominator vanishes at evaluation point");
    return num_.eval(p.q, p.x, p.y) / d;
}

RatFunc RatFunc::compose(const MultiPoly& q_image, const MultiPoly& x_image, const MultiPoly& y_image) const {
    return RatFunc(num_.compose(q_image, x_image, y_image), den_.compose(q_image, x_image, y_image));
}

std::string RatFunc::to_string() const { return "(" + num_.to_string() + ") / (" + den_.to_string() + ")"; }

EqualityWitness ratfunc_equal(const RatFunc& a, const RatFunc& b) {
    const MultiPoly diff = a.num() * b.den() - b.num() * a.den();
    if (diff.is_zero()) return {true, std::nullopt};
    return {false, diff.leading_term()};
}

}  // namespace qwz
