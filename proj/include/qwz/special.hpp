#pragma once

#include "qwz/bigrat.hpp"
#include "qwz/hpreal.hpp"

#include <cstddef>
#include <vector>

namespace qwz {

/// B_0, B_1, ..., B_m with B_1 = -1/2.
std::vector<BigRat> bernoulli_numbers(std::size_t m);

/// psi^(1)(k) for k > 0: upward recurrence to a large argument, then the
/// asymptotic series 1/z + 1/(2z^2) + sum_j B_{2j}/z^{2j+1}.
HPReal trigamma_num(const HPReal& k, const EvalContext& ctx);

/// zeta(3) from 5/2 sum_{n>=1} (-1)^{n+1} / (n^3 binom(2n,n)).
HPReal zeta3_num(const EvalContext& ctx);

/// The first `count` partial sums of the series used by zeta3_num.
std::vector<HPReal> zeta3_partial_sums(std::size_t count, const EvalContext& ctx);

}  // namespace qwz
