#pragma once

#include "fibzeta/bigint.hpp"
#include "fibzeta/real.hpp"

#include <compare>
#include <string>

namespace fibzeta {

// Exact element a + b*sqrt(5) of the quadratic field Q(sqrt(5)). The golden
// ratio and its conjugate live here, as do all the arguments the identity
// layer feeds to polygamma and cot. Components stay in lowest terms with
// positive denominators (mpq invariant), so equality and ordering are exact.
class QS5 {
public:
    QS5() : a_(0), b_(0) {}
    QS5(BigRational a, BigRational b) : a_(std::move(a)), b_(std::move(b)) {}
    explicit QS5(const BigRational& rational) : a_(rational), b_(0) {}
    explicit QS5(long rational) : a_(rational), b_(0) {}

    static QS5 alpha() { return {BigRational(1, 2), BigRational(1, 2)}; }
    static QS5 beta() { return {BigRational(1, 2), BigRational(-1, 2)}; }
    static QS5 sqrt5() { return {BigRational(0), BigRational(1)}; }

    const BigRational& a() const { return a_; }
    const BigRational& b() const { return b_; }

    bool is_rational() const { return b_ == 0; }
    bool is_integer() const { return b_ == 0 && denominator(a_) == 1; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    QS5 conj() const { return {a_, -b_}; }
    BigRational norm() const { return a_ * a_ - 5 * b_ * b_; }

    QS5 operator-() const { return {-a_, -b_}; }
    QS5 operator+(const QS5& rhs) const { return {a_ + rhs.a_, b_ + rhs.b_}; }
    QS5 operator-(const QS5& rhs) const { return {a_ - rhs.a_, b_ - rhs.b_}; }
    QS5 operator*(const QS5& rhs) const;
    QS5 operator/(const QS5& rhs) const;
    QS5& operator+=(const QS5& rhs) { a_ += rhs.a_; b_ += rhs.b_; return *this; }

    QS5 inverse() const;
    QS5 pow(long e) const;

    // Exact sign of the represented real number: -1, 0, or +1.
    int sign() const;

    bool operator==(const QS5& rhs) const { return a_ == rhs.a_ && b_ == rhs.b_; }
    std::strong_ordering operator<=>(const QS5& rhs) const;

    QS5 abs() const { return sign() < 0 ? -*this : *this; }

    // "(p + q*sqrt(5))/d" over the common denominator, collapsing to plain
    // rational / sqrt(5)-multiple forms where possible.
    std::string to_string() const;

private:
    BigRational a_;
    BigRational b_;
};

inline int compare(const QS5& x, const QS5& y) {
    const auto c = x <=> y;
    return c < 0 ? -1 : c > 0 ? 1 : 0;
}

// Greatest integer <= x, decided by rational interval refinement of
// sqrt(5); no floating point is involved, so cot-pole detection stays exact.
BigInt floor(const QS5& x);

// a + b*sqrt(5) evaluated numerically; relative error <= 10^(2-P).
Real to_real(const QS5& x, int digits10);

// Exact golden-ratio power (binary exponentiation in the field; negative
// exponents use that alpha is a unit).
QS5 alpha_pow(long n);

// Fibonacci / Lucas numbers by fast doubling, extended to negative index
// by F(-n) = (-1)^(n+1) F(n) and L(-n) = (-1)^n L(n).
BigInt fib(long n);
BigInt lucas(long n);

// cot(pi * x) with exact mod-1 argument reduction; exact pole test.
Real cot_pi(const QS5& x, int digits10);

} // namespace fibzeta
