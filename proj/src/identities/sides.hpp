#pragma once

#include "qwz/identities.hpp"
#include "qwz/summation.hpp"

#include <initializer_list>
#include <utility>

namespace qwz::identities::detail {

inline SideValue closed_form(HPReal v) {
    const mpfr_prec_t bits = v.bits();
    return {std::move(v), HPReal(bits), 0};
}

inline SideValue from_sum(SumResult r) { return {std::move(r.value), std::move(r.error_bound), r.terms}; }

/// s * sum_i c_i q^{e_i}
inline QSeries mul_sparse(const QSeries& s, std::initializer_list<std::pair<std::size_t, long>> poly) {
    QSeries out(s.order());
    for (const auto& [e, c] : poly) {
        QSeries part = s;
        part.shift(e);
        out += part * BigRat(c);
    }
    return out;
}

/// q parameter lifted to working precision, validated to lie in (0,1).
HPReal q_param(const Params& p, const EvalContext& ctx);
void require_unit_q(const Params& p);

// Classical series (no parameters).
SideValue guillera_lhs(const EvalContext& ctx);
SideValue guillera_rhs(const EvalContext& ctx);
SideValue ramanujan_lhs(const EvalContext& ctx);
SideValue ramanujan_rhs(const EvalContext& ctx);
SideValue zeta3_harmonic_lhs(const EvalContext& ctx);
SideValue zeta3_harmonic_rhs(const EvalContext& ctx);

// Hou-Krattenthaler-Sun pair.
SideValue hks1_lhs(const HPReal& q, const EvalContext& ctx);
SideValue hks1_rhs(const HPReal& q, const EvalContext& ctx);
SideValue hks2_lhs(const HPReal& q, const EvalContext& ctx);
SideValue hks2_rhs(const HPReal& q, const EvalContext& ctx);
QSeries hks1_lhs_series(std::size_t order);
QSeries hks1_rhs_series(std::size_t order);
QSeries hks2_lhs_series(std::size_t order);
QSeries hks2_rhs_series(std::size_t order);
/// (1-q) (q^2;q^2)_inf^2 / (q;q^2)_inf^2
HPReal qgamma_scaled(const HPReal& q, const EvalContext& ctx);
/// 4 (1-q)^2 times the left side of HKS1.
HPReal hks1_scaled(const HPReal& q, const EvalContext& ctx);

// Main theorem and the partition identity.
SideValue main_theorem_lhs(const BigRat& k, const HPReal& q, const EvalContext& ctx);
SideValue main_theorem_rhs(const BigRat& k, const HPReal& q, const EvalContext& ctx);
QSeries main_theorem_lhs_series(long k, std::size_t order);
QSeries main_theorem_rhs_series(long k, std::size_t order);
SideValue partition_lhs(const HPReal& q, const EvalContext& ctx);
SideValue partition_rhs(const HPReal& q, const EvalContext& ctx);
QSeries partition_lhs_series(std::size_t order);
QSeries partition_rhs_series(std::size_t order);

}  // namespace qwz::identities::detail
