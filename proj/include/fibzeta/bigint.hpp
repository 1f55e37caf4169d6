#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace fibzeta {

// Arbitrary-size integers and rationals (GMP backed). mpq_rational keeps
// values in lowest terms with positive denominators, which is exactly the
// representation invariant the exact layers rely on.
using BigInt = boost::multiprecision::mpz_int;
using BigRational = boost::multiprecision::mpq_rational;

inline BigInt numerator(const BigRational& q) {
    return boost::multiprecision::numerator(q);
}

inline BigInt denominator(const BigRational& q) {
    return boost::multiprecision::denominator(q);
}

// Greatest integer <= p/q, exact for any sign of p.
BigInt rational_floor(const BigRational& q);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

// Exact integer power with negative exponents allowed for rationals.
BigInt pow(const BigInt& base, unsigned exp);
BigRational pow(const BigRational& base, long exp);

// "p/q" (or just "p" when q == 1), locale independent.
std::string to_string(const BigRational& q);

} // namespace fibzeta
