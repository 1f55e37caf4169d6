#include "fibzeta/qsqrt5.hpp"

#include "fibzeta/errors.hpp"

#include <utility>

namespace fibzeta {

QS5 QS5::operator*(const QS5& rhs) const {
    return {a_ * rhs.a_ + 5 * b_ * rhs.b_, a_ * rhs.b_ + b_ * rhs.a_};
}

QS5 QS5::inverse() const {
    const BigRational n = norm();
    if (n == 0) {
        // a^2 = 5 b^2 has no rational solution besides a = b = 0.
        throw domain_error("inverse of zero in Q(sqrt(5))");
    }
    return {a_ / n, -b_ / n};
}

QS5 QS5::operator/(const QS5& rhs) const { return *this * rhs.inverse(); }

QS5 QS5::pow(long e) const {
    QS5 base = *this;
    unsigned long n;
    if (e < 0) {
        base = inverse();
        n = static_cast<unsigned long>(-e);
    } else {
        n = static_cast<unsigned long>(e);
    }
    QS5 result(1);
    while (n > 0) {
        if (n & 1) result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

int QS5::sign() const {
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Mixed signs: compare a^2 against 5 b^2; the larger magnitude wins.
    const BigRational lhs = a_ * a_;
    const BigRational rhs = 5 * b_ * b_;
    if (lhs == rhs) return 0; // unreachable for b != 0 (sqrt(5) irrational)
    return lhs > rhs ? sa : sb;
}

std::strong_ordering QS5::operator<=>(const QS5& rhs) const {
    const int s = (*this - rhs).sign();
    return s < 0 ? std::strong_ordering::less
         : s > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
}

std::string QS5::to_string() const {
    if (b_ == 0) return fibzeta::to_string(a_);
    const BigInt d = denominator(a_) * denominator(b_) /
                     gcd(denominator(a_), denominator(b_));
    const BigInt p = numerator(a_) * (d / denominator(a_));
    const BigInt q = numerator(b_) * (d / denominator(b_));
    const BigInt qa = q < 0 ? BigInt(-q) : q;
    const std::string sqrt_part = qa == 1 ? "sqrt(5)" : qa.str() + "*sqrt(5)";
    std::string core;
    if (p == 0)
        core = (q < 0 ? "-" : "") + sqrt_part;
    else
        core = p.str() + (q < 0 ? " - " : " + ") + sqrt_part;
    if (d == 1) return core;
    return "(" + core + ")/" + d.str();
}

BigInt floor(const QS5& x) {
    if (x.is_rational()) return rational_floor(x.a());

    // Refine a rational enclosure of sqrt(5), starting from (2, 3), until
    // both endpoint images share a floor. The enclosed value is irrational,
    // so no integer can stay inside the interval forever.
    BigRational lo(2), hi(3);
    for (int iter = 0; iter < 4096; ++iter) {
        const BigRational xlo = x.b() > 0 ? x.a() + x.b() * lo : x.a() + x.b() * hi;
        const BigRational xhi = x.b() > 0 ? x.a() + x.b() * hi : x.a() + x.b() * lo;
        const BigInt flo = rational_floor(xlo);
        const BigInt fhi = rational_floor(xhi);
        if (flo == fhi) return flo;
        const BigRational mid = (lo + hi) / 2;
        if (mid * mid < 5)
            lo = mid;
        else
            hi = mid;
    }
    throw precision_error("floor(QS5): interval refinement failed to separate");
}

Real to_real(const QS5& x, int digits10) {
    const int work = digits10 + 5;
    const Real a = Real::from_rational(x.a(), work);
    const Real b = Real::from_rational(x.b(), work);
    return (a + b * const_sqrt5(work)).round_to(digits10);
}

QS5 alpha_pow(long n) { return QS5::alpha().pow(n); }

namespace {

// Fast doubling: returns (F(n), F(n+1)) for n >= 0.
std::pair<BigInt, BigInt> fib_pair(unsigned long n) {
    if (n == 0) return {BigInt(0), BigInt(1)};
    auto [a, b] = fib_pair(n >> 1); // a = F(k), b = F(k+1)
    BigInt c = a * (2 * b - a);     // F(2k)
    BigInt d = a * a + b * b;       // F(2k+1)
    if (n & 1) return {d, c + d};
    return {c, d};
}

} // namespace

BigInt fib(long n) {
    const bool neg = n < 0;
    const unsigned long k = static_cast<unsigned long>(neg ? -n : n);
    BigInt f = fib_pair(k).first;
    if (neg && k % 2 == 0) f = -f;
    return f;
}

BigInt lucas(long n) {
    const bool neg = n < 0;
    const unsigned long k = static_cast<unsigned long>(neg ? -n : n);
    auto [fk, fk1] = fib_pair(k);
    BigInt l = 2 * fk1 - fk; // L(k) = F(k+1) + F(k-1) = 2F(k+1) - F(k)
    if (neg && k % 2 == 1) l = -l;
    return l;
}

Real cot_pi(const QS5& x, int digits10) {
    if (x.is_integer()) throw pole_error("cot(pi x) pole at integer argument");
    const QS5 frac = x - QS5(BigRational(floor(x)));
    // frac is in (0, 1) exactly; cot(pi/2) = 0 exactly in the rational case.
    if (frac == QS5(BigRational(1, 2))) return Real(0L, digits10);
    const int work = digits10 + 10;
    return cot_pi_reduced(to_real(frac, work)).round_to(digits10);
}

} // namespace fibzeta
