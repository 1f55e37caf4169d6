#include "fibzeta/real.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>

namespace fibzeta {

namespace {

mpfr_prec_t bits_for(int digits10) {
    if (digits10 < 1) digits10 = 1;
    // log2(10) with head room so every single rounding stays below 10^(1-P).
    return static_cast<mpfr_prec_t>(std::ceil(digits10 * 3.3219280948873626)) + 8;
}

int checked_digits(int digits10) {
    if (digits10 < 1) throw domain_error("precision must be positive");
    return digits10;
}

} // namespace

Real::Real(int digits10, mpfr_prec_t prec_bits) : digits10_(digits10) {
    mpfr_init2(v_, prec_bits);
}

Real::Real(long value, int digits10) : Real(checked_digits(digits10), bits_for(digits10)) {
    mpfr_set_si(v_, value, MPFR_RNDN);
}

Real::Real(const BigInt& value, int digits10)
    : Real(checked_digits(digits10), bits_for(digits10)) {
    mpfr_set_z(v_, value.backend().data(), MPFR_RNDN);
}

Real::Real(const Real& other) : Real(other.digits10_, mpfr_get_prec(other.v_)) {
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept : digits10_(other.digits10_) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
        digits10_ = other.digits10_;
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    if (this != &other) {
        mpfr_swap(v_, other.v_);
        digits10_ = other.digits10_;
    }
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::from_rational(const BigRational& q, int digits10) {
    Real result(checked_digits(digits10), bits_for(digits10));
    mpfr_set_q(result.v_, q.backend().data(), MPFR_RNDN);
    return result;
}

Real Real::from_rational(const BigInt& num, const BigInt& den, int digits10) {
    if (den == 0) throw domain_error("zero denominator");
    return from_rational(BigRational(num, den), digits10);
}

namespace {
// Result carries the wider of the two operand precisions.
int join_digits(const Real& a, const Real& b) {
    return std::max(a.digits10(), b.digits10());
}
} // namespace

Real Real::operator-() const {
    Real result(*this);
    mpfr_neg(result.v_, result.v_, MPFR_RNDN);
    return result;
}

#define FIBZETA_REAL_BINOP(op, mpfr_fn)                                     \
    Real Real::operator op(const Real& rhs) const {                        \
        const int d = join_digits(*this, rhs);                             \
        Real result(d, bits_for(d));                                       \
        mpfr_fn(result.v_, v_, rhs.v_, MPFR_RNDN);                         \
        return result;                                                     \
    }

FIBZETA_REAL_BINOP(+, mpfr_add)
FIBZETA_REAL_BINOP(-, mpfr_sub)
FIBZETA_REAL_BINOP(*, mpfr_mul)
#undef FIBZETA_REAL_BINOP

Real Real::operator/(const Real& rhs) const {
    if (rhs.is_zero()) throw domain_error("division by zero");
    const int d = join_digits(*this, rhs);
    Real result(d, bits_for(d));
    mpfr_div(result.v_, v_, rhs.v_, MPFR_RNDN);
    return result;
}

Real Real::operator*(long rhs) const {
    Real result(*this);
    mpfr_mul_si(result.v_, v_, rhs, MPFR_RNDN);
    return result;
}

Real Real::operator/(long rhs) const {
    if (rhs == 0) throw domain_error("division by zero");
    Real result(*this);
    mpfr_div_si(result.v_, v_, rhs, MPFR_RNDN);
    return result;
}

Real Real::abs() const {
    Real result(*this);
    mpfr_abs(result.v_, result.v_, MPFR_RNDN);
    return result;
}

Real Real::sqrt() const {
    if (sign() < 0) throw domain_error("sqrt of a negative value");
    Real result(*this);
    mpfr_sqrt(result.v_, v_, MPFR_RNDN);
    return result;
}

Real Real::ln() const {
    if (sign() <= 0) throw domain_error("log of a non-positive value");
    Real result(*this);
    mpfr_log(result.v_, v_, MPFR_RNDN);
    return result;
}

Real Real::pow_int(long e) const {
    if (e < 0 && is_zero()) throw domain_error("zero to a negative power");
    Real result(*this);
    mpfr_pow_si(result.v_, v_, e, MPFR_RNDN);
    return result;
}

Real Real::floor() const {
    Real result(*this);
    mpfr_floor(result.v_, v_);
    return result;
}

Real Real::round_to(int digits10) const {
    Real result(checked_digits(digits10), bits_for(digits10));
    mpfr_set(result.v_, v_, MPFR_RNDN);
    return result;
}

long Real::to_long_rounded() const {
    Real r(*this);
    mpfr_round(r.v_, v_);
    if (!mpfr_fits_slong_p(r.v_, MPFR_RNDN)) throw domain_error("value out of long range");
    return mpfr_get_si(r.v_, MPFR_RNDN);
}

std::string Real::to_string() const { return to_string(digits10_); }

std::string Real::to_string(int significant_digits) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return sign() < 0 ? "-inf" : "inf";
    if (is_zero()) return "0";
    if (significant_digits < 2) significant_digits = 2;

    mpfr_exp_t exp = 0;
    char* raw = mpfr_get_str(nullptr, &exp, 10, static_cast<size_t>(significant_digits),
                             v_, MPFR_RNDN);
    std::string digits(raw);
    mpfr_free_str(raw);

    std::string sign_part;
    if (!digits.empty() && digits[0] == '-') {
        sign_part = "-";
        digits.erase(digits.begin());
    }
    // mpfr_get_str scales the mantissa as 0.ddd * 10^exp; re-normalize to
    // the usual d.ddd e(exp-1) scientific form.
    const long sci_exp = static_cast<long>(exp) - 1;
    std::string out = sign_part + digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    out += "e";
    out += (sci_exp < 0 ? "-" : "+");
    const long mag = sci_exp < 0 ? -sci_exp : sci_exp;
    std::string es = std::to_string(mag);
    if (es.size() < 2) es.insert(es.begin(), '0');
    out += es;
    return out;
}

Real Real::pow10(long e, int digits10) {
    Real result(checked_digits(digits10), bits_for(digits10));
    mpfr_set_si(result.v_, 10, MPFR_RNDN);
    mpfr_pow_si(result.v_, result.v_, e, MPFR_RNDN);
    return result;
}

Real abs(const Real& x) { return x.abs(); }

Real const_pi(int digits10) {
    Real result(checked_digits(digits10), bits_for(digits10));
    mpfr_const_pi(result.v_, MPFR_RNDN);
    return result;
}

Real const_sqrt5(int digits10) {
    Real result(checked_digits(digits10), bits_for(digits10));
    mpfr_sqrt_ui(result.v_, 5, MPFR_RNDN);
    return result;
}

// Trig kernels used by the cot evaluators; arguments are pre-reduced.
Real sin_pi_times(const Real& x) {
    Real t = const_pi(x.digits10()) * x;
    Real result(t);
    mpfr_sin(result.v_, t.v_, MPFR_RNDN);
    return result;
}

Real cos_pi_times(const Real& x) {
    Real t = const_pi(x.digits10()) * x;
    Real result(t);
    mpfr_cos(result.v_, t.v_, MPFR_RNDN);
    return result;
}

// cot(pi x) for x already reduced into (0, 1).
Real cot_pi_reduced(const Real& x) {
    Real t = const_pi(x.digits10()) * x;
    Real result(t);
    mpfr_cot(result.v_, t.v_, MPFR_RNDN);
    return result;
}

Real cot_pi(const Real& x, int digits10) {
    checked_digits(digits10);
    const int work = digits10 + 10;
    Real xw = x.round_to(work);
    Real frac = xw - xw.floor();
    const Real guard = Real::pow10(5 - digits10, work);
    if (frac < guard || (Real(1L, work) - frac) < guard)
        throw pole_error("cot(pi x) pole: argument within tolerance of an integer");
    return cot_pi_reduced(frac).round_to(digits10);
}

} // namespace fibzeta
