#include "fibzeta/bigint.hpp"

#include "fibzeta/errors.hpp"

namespace fibzeta {

BigInt rational_floor(const BigRational& q) {
    BigInt result;
    mpz_fdiv_q(result.backend().data(), numerator(q).backend().data(),
               denominator(q).backend().data());
    return result;
}

BigInt factorial(unsigned n) {
    BigInt result = 1;
    for (unsigned i = 2; i <= n; ++i) result *= i;
    return result;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (unsigned i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

BigInt pow(const BigInt& base, unsigned exp) {
    BigInt result;
    mpz_pow_ui(result.backend().data(), base.backend().data(), exp);
    return result;
}

BigRational pow(const BigRational& base, long exp) {
    if (exp == 0) return BigRational(1);
    if (base == 0 && exp < 0) throw domain_error("0 cannot be raised to a negative power");
    const unsigned e = static_cast<unsigned>(exp < 0 ? -exp : exp);
    BigRational result(pow(numerator(base), e), pow(denominator(base), e));
    if (exp < 0) result = BigRational(1) / result;
    return result;
}

std::string to_string(const BigRational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

} // namespace fibzeta
