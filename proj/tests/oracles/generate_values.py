"""Reference values for the test suites, computed with mpmath and fractions.

Run from the repository root:
    python3 tests/oracles/generate_values.py > tests/oracle_values.hpp
"""

from fractions import Fraction

import mpmath as mp

mp.mp.dps = 80
DIGITS = 60


def qp_inf(a, q):
    """prod_{j>=0} (1 - a q^j), stopped once the factor is 1 to working precision."""
    p = mp.mpf(1)
    t = mp.mpf(a)
    eps = mp.mpf(10) ** (-mp.mp.dps - 5)
    while abs(t) > eps:
        p *= 1 - t
        t *= q
    return p


def qp_fin(a, q, n):
    p = mp.mpf(1)
    for j in range(n):
        p *= 1 - a * q**j
    return p


def rqfac(x, q):
    """1/(q;q)_x = (q^{x+1};q)_inf / (q;q)_inf."""
    return qp_inf(q ** (x + 1), q) / qp_inf(q, q)


def main_lhs(k, q):
    total = mp.mpf(0)
    n = 0
    while True:
        t = (q ** (n - 2 * k + k * k + 1) * (2 * q**k - q ** (n + 1) - q ** (2 * n + 2)) / (1 + q ** (n + 1))
             * qp_fin(q, q, n) ** 4 * rqfac(k - 1, q) ** 2 / qp_fin(q, q, 2 * n + 1) * rqfac(n - k + 1, q) ** 2)
        total += t
        if n > 5 and abs(t) < mp.mpf(10) ** (-mp.mp.dps):
            return total
        n += 1


def main_rhs(k, q):
    big = qp_inf(q, q)
    total = mp.mpf(0)
    n = 0
    while True:
        t = q ** ((k + n) ** 2) * (big**3 - qp_inf(q ** (1 - n - k), q) ** 2) * qp_inf(q ** (1 + n + k), q) ** 2
        total += t
        if n > 5 and abs(t) < mp.mpf(10) ** (-mp.mp.dps):
            return total / big**4
        n += 1


def hks1_lhs(q):
    total = mp.mpf(0)
    for n in range(200):
        num = q ** (2 * n * (n + 1)) * (1 + q ** (2 * n + 2) - 2 * q ** (4 * n + 3)) * qp_fin(q * q, q * q, n) ** 3
        den = qp_fin(q, q * q, n + 1) ** 3 * qp_fin(-1, q, 2 * n + 3)
        total += num / den
    return total


def hks2_rhs(q):
    return (1 - q) ** 2 * qp_inf(q * q, q * q) ** 4 / qp_inf(q, q * q) ** 4


def h_closed(k, q):
    big = qp_inf(q, q)
    return q ** (k * k + 2) * (big**3 - qp_inf(q ** (1 - k), q) ** 2) * qp_inf(q ** (k + 1), q) ** 2 / big**4


def qgamma_scaled(q):
    return (1 - q) * qp_inf(q * q, q * q) ** 2 / qp_inf(q, q * q) ** 2


def trigamma_closed(k):
    return 1 - mp.psi(1, k) * mp.sin(k * mp.pi) ** 2 / mp.pi**2


def gauss(n, k, q):
    return qp_fin(q, q, n) / (qp_fin(q, q, k) * qp_fin(q, q, n - k))


def fmt(x):
    return mp.nstr(x, DIGITS, min_fixed=1, max_fixed=0)


def emit(name, value):
    print(f'inline const char* const {name} = "{fmt(value)}";')


def main():
    half = mp.mpf(1) / 2
    print("// Generated by tests/oracles/generate_values.py; do not edit by hand.")
    print("#pragma once\n")
    print("namespace oracle {\n")
    emit("kPi", mp.pi)
    emit("kPiSquaredOver4", mp.pi**2 / 4)
    emit("kFourOverPi", 4 / mp.pi)
    emit("kPiOver2", mp.pi / 2)
    emit("kTrigammaHalf", mp.psi(1, half))
    emit("kTrigammaOne", mp.psi(1, 1))
    emit("kTrigamma03", mp.psi(1, mp.mpf("0.3")))
    emit("kTrigamma37", mp.psi(1, mp.mpf("3.7")))
    emit("kZeta3", mp.zeta(3))
    emit("kSevenZeta3Over2", 7 * mp.zeta(3) / 2)
    for k in ("0.1", "0.3", "0.5", "0.7", "0.9"):
        emit("kTrigammaClosed" + k.replace("0.", "0"), trigamma_closed(mp.mpf(k)))
    emit("kEulerProductTenth", qp_inf(mp.mpf("0.1"), mp.mpf("0.1")))
    emit("kEulerProductHalf", qp_inf(half, half))
    emit("kMainLhsHalfQuarter", main_lhs(mp.mpf(1) / 4, half))
    emit("kMainRhsHalfQuarter", main_rhs(mp.mpf(1) / 4, half))
    emit("kMainLhsFifthThreeQuarters", main_lhs(mp.mpf(3) / 4, mp.mpf(1) / 5))
    emit("kMainLhsHalfTwo", main_lhs(2, half))
    emit("kHks1LhsHalf", hks1_lhs(half))
    emit("kHks2RhsHalf", hks2_rhs(half))
    emit("kHClosed03Half", h_closed(mp.mpf("0.3"), half))
    emit("kHClosed1Half", h_closed(1, half))
    emit("kQgammaScaled09", qgamma_scaled(mp.mpf("0.9")))
    emit("kQgammaScaled0999", qgamma_scaled(mp.mpf("0.999")))
    emit("kHks1Scaled09", 4 * (1 - mp.mpf("0.9")) ** 2 * hks1_lhs(mp.mpf("0.9")))
    emit("kQpochFiniteThird", qp_fin(mp.mpf("0.3"), half, 4))

    # F(2,1) at q = 1/2 with exact fractions.
    qf = Fraction(1, 2)

    def gauss_exact(n, k):
        def fin(m):
            p = Fraction(1)
            for j in range(1, m + 1):
                p *= 1 - qf**j
            return p
        return fin(n) / (fin(k) * fin(n - k))

    f21 = qf * gauss_exact(2, 1) ** 2 / gauss_exact(4, 2)
    print(f"inline constexpr long kF21HalfNum = {f21.numerator};")
    print(f"inline constexpr long kF21HalfDen = {f21.denominator};")
    g42 = gauss_exact(4, 2)
    print(f"inline constexpr long kGauss42HalfNum = {g42.numerator};")
    print(f"inline constexpr long kGauss42HalfDen = {g42.denominator};")
    print("\n}  // namespace oracle")


if __name__ == "__main__":
    main()
