#pragma once

#include "fibzeta/qsqrt5.hpp"
#include "fibzeta/real.hpp"

#include <vector>

namespace fibzeta {

// Exact Bernoulli number B_n (B_1 = -1/2 convention), from the defining
// recurrence sum_{j<=m} C(m+1,j) B_j = 0, memoized. Thread safe
// (write-once registry).
BigRational bernoulli(unsigned n);

// zeta(k) for integer k >= 2: direct Dirichlet sum plus Euler-Maclaurin
// tail with Bernoulli terms; relative error <= 10^(5-P). Memoized per
// (k, P); thread safe.
Real zeta_int(unsigned k, int digits10);

// Integer-coefficient polynomial P_m with d^m/dz^m cot(z) = P_m(cot z).
// deg P_m = m+1 and P_m has the parity of m+1.
struct CotDerivPoly {
    unsigned order = 0;
    std::vector<BigInt> coeffs; // coeffs[i] multiplies u^i
};

CotDerivPoly cot_deriv_poly(unsigned m);

// d^m/dz^m cot(pi z) at z = x, i.e. pi^m * P_m(cot(pi x)).
// Relative error <= 10^(8-P) for m <= 8.
Real cot_deriv(unsigned m, const QS5& x, int digits10);
Real cot_deriv(unsigned m, const Real& x, int digits10);

// Polygamma psi^(m)(x) to relative error <= 10^(10-P) for m <= 8.
// Arguments left of 1/2 (including negative non-integers) are lifted by
// the recurrence with exact bookkeeping of the shift terms, then the
// Bernoulli asymptotic expansion is applied above the working threshold.
Real polygamma(unsigned m, const QS5& x, int digits10);
Real polygamma(unsigned m, const Real& x, int digits10);

namespace testing {
// Self-test fault hook: flips the sign of one cached Bernoulli number on
// retrieval so the whole asymptotic layer goes visibly wrong.
void inject_bernoulli_sign_fault(bool enabled);
} // namespace testing

} // namespace fibzeta
