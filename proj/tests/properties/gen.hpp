// Seeded generators shared by the property suites.
#pragma once

#include "qwz/bigrat.hpp"
#include "qwz/multipoly.hpp"
#include "qwz/qseries.hpp"

#include <cstdint>
#include <random>

namespace gen {

/// Cases per law.
inline constexpr int kCases = 200;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }
    bool coin() { return integer(0, 1) == 1; }

    /// num/den with |num| <= span, den in [1, den_max].
    qwz::BigRat rational(long span = 50, long den_max = 30) {
        return qwz::BigRat(integer(-span, span), integer(1, den_max));
    }
    qwz::BigRat nonzero_rational(long span = 50, long den_max = 30) {
        for (;;) {
            qwz::BigRat r = rational(span, den_max);
            if (r.sign() != 0) return r;
        }
    }
    /// A rational strictly inside (lo, hi) on a grid of step 1/den.
    qwz::BigRat between(const qwz::BigRat& lo, const qwz::BigRat& hi, long den = 997) {
        const qwz::BigRat step(1, den);
        const long slots = ((hi - lo) / step).floor().get_si();
        return lo + step * qwz::BigRat(integer(1, slots - 1));
    }

    qwz::MultiPoly multipoly(int max_terms = 5, int max_exp = 3) {
        qwz::MultiPoly p;
        const long terms = integer(0, max_terms);
        for (long i = 0; i < terms; ++i) {
            const qwz::Monomial m{static_cast<std::uint32_t>(integer(0, max_exp)),
                                  static_cast<std::uint32_t>(integer(0, max_exp)),
                                  static_cast<std::uint32_t>(integer(0, max_exp))};
            p += qwz::MultiPoly::monomial(m, rational(9, 6));
        }
        return p;
    }
    qwz::MultiPoly nonzero_multipoly(int max_terms = 4, int max_exp = 2) {
        for (;;) {
            qwz::MultiPoly p = multipoly(max_terms, max_exp);
            if (!p.is_zero()) return p;
        }
    }

    qwz::QSeries series(std::size_t order) {
        std::vector<qwz::BigRat> c(order + 1);
        for (auto& x : c) x = rational(9, 6);
        return qwz::QSeries(order, std::move(c));
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace gen
