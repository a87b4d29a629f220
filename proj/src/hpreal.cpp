#include "qwz/hpreal.hpp"

#include "qwz/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace qwz {

mpfr_prec_t digits_to_bits(int digits) {
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 8;
}

EvalContext::EvalContext(int digits, int guard) : target_digits(digits), guard_digits(guard) {
    if (digits < 1) throw DomainError("EvalContext: target digits must be positive");
    if (guard < 10) throw DomainError("EvalContext: guard digits must be at least 10");
}

mpfr_prec_t EvalContext::working_bits() const { return digits_to_bits(working_digits()); }

HPReal::HPReal(mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
}

HPReal::HPReal(long v, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_si(v_, v, MPFR_RNDN);
}

HPReal::HPReal(const BigRat& v, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_q(v_, v.raw().get_mpq_t(), MPFR_RNDN);
}

HPReal::HPReal(const std::string& decimal, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
        mpfr_clear(v_);
        throw DomainError("HPReal: malformed decimal '" + decimal + "'");
    }
}

HPReal::HPReal(const HPReal& o) {
    mpfr_init2(v_, o.bits());
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

HPReal::HPReal(HPReal&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
}

HPReal& HPReal::operator=(const HPReal& o) {
    if (this != &o) {
        mpfr_set_prec(v_, o.bits());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

HPReal& HPReal::operator=(HPReal&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
}

HPReal::~HPReal() { mpfr_clear(v_); }

int HPReal::digits() const { return static_cast<int>(std::floor((bits() - 8) * 0.30102999566398120)); }

long HPReal::exponent10() const {
    if (is_zero()) return -1000000000L;
    if (!is_finite()) return 1000000000L;
    long e2 = 0;
    const double m = mpfr_get_d_2exp(&e2, v_, MPFR_RNDN);
    return static_cast<long>(std::floor(std::log10(std::fabs(m)) + static_cast<double>(e2) * 0.30102999566398120));
}

namespace {

void widen(mpfr_ptr target, mpfr_srcptr other) {
    if (mpfr_get_prec(other) > mpfr_get_prec(target)) mpfr_prec_round(target, mpfr_get_prec(other), MPFR_RNDN);
}

}  // namespace

HPReal HPReal::operator-() const {
    HPReal r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
}

HPReal& HPReal::operator+=(const HPReal& o) {
    widen(v_, o.v_);
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

HPReal& HPReal::operator-=(const HPReal& o) {
    widen(v_, o.v_);
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

HPReal& HPReal::operator*=(const HPReal& o) {
    widen(v_, o.v_);
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

HPReal& HPReal::operator/=(const HPReal& o) {
    if (o.is_zero()) throw DomainError("HPReal: division by zero");
    widen(v_, o.v_);
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

HPReal& HPReal::operator*=(long s) {
    mpfr_mul_si(v_, v_, s, MPFR_RNDN);
    return *this;
}

HPReal& HPReal::operator/=(long s) {
    if (s == 0) throw DomainError("HPReal: division by zero");
    mpfr_div_si(v_, v_, s, MPFR_RNDN);
    return *this;
}

std::partial_ordering operator<=>(const HPReal& a, const HPReal& b) {
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

HPReal HPReal::abs() const {
    HPReal r(*this);
    mpfr_abs(r.v_, r.v_, MPFR_RNDN);
    return r;
}

HPReal HPReal::sqrt() const {
    if (sign() < 0) throw DomainError("HPReal: sqrt of a negative number");
    HPReal r(*this);
    mpfr_sqrt(r.v_, r.v_, MPFR_RNDN);
    return r;
}

HPReal HPReal::pow(long e) const {
    if (e < 0 && is_zero()) throw DomainError("HPReal: negative power of zero");
    HPReal r(bits());
    mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
    return r;
}

std::string HPReal::to_string(int significant) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", std::max(significant - 1, 0), v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

std::string HPReal::to_fixed(int decimals) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rf", std::max(decimals, 0), v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

HPReal pow10_neg(int d, mpfr_prec_t bits) {
    HPReal r(10, bits);
    return r.pow(-d);
}

HPReal max(const HPReal& a, const HPReal& b) { return a < b ? b : a; }

HPReal hp_transcendental(Transcendental f, const HPReal& x, const EvalContext& ctx) {
    HPReal r(std::max(ctx.working_bits(), x.bits()));
    switch (f) {
        case Transcendental::Exp:
            mpfr_exp(r.get(), x.get(), MPFR_RNDN);
            break;
        case Transcendental::Ln:
            if (x.sign() <= 0) throw DomainError("ln: argument must be positive");
            mpfr_log(r.get(), x.get(), MPFR_RNDN);
            break;
        case Transcendental::Sin:
            mpfr_sin(r.get(), x.get(), MPFR_RNDN);
            break;
        case Transcendental::Cos:
            mpfr_cos(r.get(), x.get(), MPFR_RNDN);
            break;
    }
    return r;
}

HPReal hp_pow(const HPReal& x, const BigRat& e, const EvalContext& ctx) {
    if (e.is_integer() && e.numerator().fits_slong_p()) {
        HPReal base(ctx.working_bits());
        base = x;
        if (base.bits() < ctx.working_bits()) mpfr_prec_round(base.get(), ctx.working_bits(), MPFR_RNDN);
        return base.pow(e.to_long());
    }
    if (x.sign() <= 0) throw DomainError("hp_pow: non-integer power of a nonpositive base");
    return hp_exp(HPReal(e, ctx.working_bits()) * hp_ln(x, ctx), ctx);
}

namespace {

/// arctan(1/m) = sum_j (-1)^j / ((2j+1) m^{2j+1})
HPReal arctan_inverse(long m, mpfr_prec_t bits) {
    HPReal power(1, bits);
    power /= m;  // 1/m^{2j+1}
    HPReal sum(bits);
    HPReal eps(1, bits);
    mpfr_mul_2si(eps.get(), eps.get(), -static_cast<long>(bits) - 4, MPFR_RNDN);
    const long m2 = m * m;
    for (long j = 0;; ++j) {
        HPReal term = power / (2 * j + 1);
        if (j % 2) {
            sum -= term;
        } else {
            sum += term;
        }
        if (term < eps) break;
        power /= m2;
    }
    return sum;
}

std::mutex pi_mutex;
std::map<mpfr_prec_t, HPReal>& pi_cache() {
    static std::map<mpfr_prec_t, HPReal> cache;
    return cache;
}

}  // namespace

HPReal hp_constant_pi(const EvalContext& ctx) {
    const mpfr_prec_t bits = ctx.working_bits();
    {
        std::lock_guard lock(pi_mutex);
        if (auto it = pi_cache().find(bits); it != pi_cache().end()) return it->second;
    }
    const mpfr_prec_t inner = bits + 16;
    HPReal pi = arctan_inverse(5, inner) * 16L - arctan_inverse(239, inner) * 4L;
    mpfr_prec_round(pi.get(), bits, MPFR_RNDN);
    std::lock_guard lock(pi_mutex);
    pi_cache().emplace(bits, pi);
    return pi;
}

}  // namespace qwz
