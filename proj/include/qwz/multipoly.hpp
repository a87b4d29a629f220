#pragma once

#include "qwz/bigrat.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace qwz {

/// Exponent triple for the formal variables Q (q itself), X (stands for q^n)
/// and Y (stands for q^k).
struct Monomial {
    std::uint32_t q = 0;
    std::uint32_t x = 0;
    std::uint32_t y = 0;

    std::uint32_t degree() const { return q + x + y; }
    friend bool operator==(const Monomial&, const Monomial&) = default;
    Monomial operator*(const Monomial& o) const { return {q + o.q, x + o.x, y + o.y}; }
};

/// Graded lexicographic order on (Q, X, Y).
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        if (a.q != b.q) return a.q < b.q;
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

struct Term {
    Monomial monomial;
    BigRat coefficient;
};

std::string to_string(const Term& t);

/// Sparse polynomial over BigRat in Q, X, Y. Zero coefficients are never
/// stored, so equal polynomials have identical term maps.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, BigRat, GrlexLess>;

    MultiPoly() = default;
    MultiPoly(const BigRat& c);  // NOLINT(google-explicit-constructor)
    MultiPoly(long c) : MultiPoly(BigRat(c)) {}  // NOLINT(google-explicit-constructor)
    static MultiPoly monomial(const Monomial& m, const BigRat& c = BigRat(1));
    static MultiPoly var_q() { return monomial({1, 0, 0}); }
    static MultiPoly var_x() { return monomial({0, 1, 0}); }
    static MultiPoly var_y() { return monomial({0, 0, 1}); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    /// Largest term in graded lex order; requires a nonzero polynomial.
    Term leading_term() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

    MultiPoly pow(unsigned e) const;
    BigRat eval(const BigRat& q, const BigRat& x, const BigRat& y) const;
    /// Replaces each variable by a polynomial.
    MultiPoly compose(const MultiPoly& q_image, const MultiPoly& x_image, const MultiPoly& y_image) const;

    std::string to_string() const;

private:
    void add_term(const Monomial& m, const BigRat& c);
    TermMap terms_;
};

struct EvalPoint {
    BigRat q;
    BigRat x;
    BigRat y;
};

/// num/den with den != 0. No gcd cancellation is performed.
class RatFunc {
public:
    RatFunc(MultiPoly num, MultiPoly den = MultiPoly(1));

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    RatFunc operator-() const { return RatFunc(-num_, den_); }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc reciprocal() const;
    RatFunc pow(unsigned e) const;

    /// Throws PoleError when the denominator vanishes at the point.
    BigRat eval(const EvalPoint& p) const;
    RatFunc compose(const MultiPoly& q_image, const MultiPoly& x_image, const MultiPoly& y_image) const;

    std::string to_string() const;

private:
    MultiPoly num_;
    MultiPoly den_;
};

struct EqualityWitness {
    bool equal = false;
    /// One nonzero term of num1*den2 - num2*den1 when unequal.
    std::optional<Term> witness;
    explicit operator bool() const { return equal; }
};

/// Exact equality by cross-multiplication.
EqualityWitness ratfunc_equal(const RatFunc& a, const RatFunc& b);

}  // namespace qwz
