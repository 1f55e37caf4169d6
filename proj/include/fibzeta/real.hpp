#pragma once

#include "fibzeta/bigint.hpp"
#include "fibzeta/errors.hpp"

#include <mpfr.h>

#include <compare>
#include <string>

namespace fibzeta {

// Extended-precision real number. The working precision is carried per
// value, in decimal digits; every operation is correctly rounded by the
// MPFR backend at the wider of the operand precisions, so each step keeps
// relative error below 10^(1-P). The backend is an implementation detail
// of this class; nothing outside this header touches mpfr directly.
class Real {
public:
    static constexpr int min_digits = 30;

    Real() : Real(0L, min_digits) {}
    Real(long value, int digits10);
    Real(const BigInt& value, int digits10);
    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    static Real from_rational(const BigRational& q, int digits10);
    static Real from_rational(const BigInt& num, const BigInt& den, int digits10);

    int digits10() const { return digits10_; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    Real operator-() const;
    Real operator+(const Real& rhs) const;
    Real operator-(const Real& rhs) const;
    Real operator*(const Real& rhs) const;
    Real operator/(const Real& rhs) const;
    Real& operator+=(const Real& rhs) { return *this = *this + rhs; }
    Real& operator-=(const Real& rhs) { return *this = *this - rhs; }
    Real& operator*=(const Real& rhs) { return *this = *this * rhs; }
    Real& operator/=(const Real& rhs) { return *this = *this / rhs; }

    Real operator*(long rhs) const;
    Real operator/(long rhs) const;

    Real abs() const;
    Real sqrt() const;        // requires a non-negative value
    Real ln() const;          // requires a positive value
    Real pow_int(long e) const;
    Real floor() const;

    // Value rounded (correctly) to a different working precision.
    Real round_to(int digits10) const;

    bool operator==(const Real& rhs) const { return mpfr_cmp(v_, rhs.v_) == 0; }
    std::strong_ordering operator<=>(const Real& rhs) const {
        const int c = mpfr_cmp(v_, rhs.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    int compare_to_long(long rhs) const { return mpfr_cmp_si(v_, rhs); }

    // Nearest integer (exact; the value must be in long range).
    long to_long_rounded() const;
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // Scientific decimal string with the value's full working precision,
    // e.g. "5.4464e+2". Locale independent.
    std::string to_string() const;
    std::string to_string(int significant_digits) const;

    // Power of ten at the given exponent, handy for tolerances: 10^e.
    static Real pow10(long e, int digits10);

private:
    friend Real sin_pi_times(const Real&);
    friend Real cos_pi_times(const Real&);
    friend Real cot_pi_reduced(const Real&);

    explicit Real(int digits10, mpfr_prec_t prec_bits);

    mpfr_t v_;
    int digits10_;
};

Real abs(const Real& x);

// Trig kernels on pre-reduced arguments; cot_pi_reduced requires x in (0, 1).
Real sin_pi_times(const Real& x);
Real cos_pi_times(const Real& x);
Real cot_pi_reduced(const Real& x);

// pi to relative error <= 10^(1-P).
Real const_pi(int digits10);

// sqrt(5) to relative error <= 10^(1-P).
Real const_sqrt5(int digits10);

// Euler-Mascheroni constant, computed as -psi(1) through the digamma
// pipeline (recurrence shift plus asymptotic expansion, which never
// references gamma itself). Relative error <= 10^(5-P).
Real const_euler_gamma(int digits10);

// cot(pi * x) with numeric reduction of x into (0, 1). Arguments within
// 10^(5-P) of an integer are treated as poles.
Real cot_pi(const Real& x, int digits10);

} // namespace fibzeta
