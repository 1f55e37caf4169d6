#include "fibzeta/series.hpp"

#include "fibzeta/errors.hpp"
#include "fibzeta/specfun.hpp"

#include <cstdlib>
#include <utility>

namespace fibzeta {

SeriesSpec::SeriesSpec(SeriesKind kind_, unsigned m_, long r_, BigRational z_)
    : kind(kind_), m(m_), r(r_), z(std::move(z_)) {
    if (kind == SeriesKind::L && m == 0)
        throw usage_error("L-kind series requires m >= 1 (the j = 0 term needs zeta(m+1))");
}

ConvergenceCheck converges(long r, const BigRational& z) {
    const long ra = r < 0 ? -r : r;
    QS5 ratio = alpha_pow(ra);
    BigRational za = z < 0 ? BigRational(-z) : z;
    ratio = ratio * QS5(za);
    return {ratio < QS5(1L), ratio};
}

namespace {

// Exact upper bound on X_(n+1)/X_n valid for every n >= n0: the ratios
// oscillate around the golden ratio with shrinking amplitude, so the
// larger of the first two is a supremum.
BigRational ratio_sup(SeriesKind kind, long n0) {
    const auto at = [&](long n) -> BigRational {
        if (kind == SeriesKind::F) return BigRational(fib(n + 1), fib(n));
        return BigRational(lucas(n + 1), lucas(n));
    };
    const BigRational r0 = at(n0);
    const BigRational r1 = at(n0 + 1);
    return r0 > r1 ? r0 : r1;
}

// q >= sup_{j >= J} |t_(j+1) / t_j|, exact. Uses that (m+j+1)/(j+1) and the
// zeta factor are non-increasing in j and bounds the Fibonacci/Lucas step
// by ratio_sup^|r|.
BigRational tail_ratio_bound(const SeriesSpec& spec, long J) {
    const long ra = spec.r < 0 ? -spec.r : spec.r;
    const BigRational za = spec.z < 0 ? BigRational(-spec.z) : spec.z;
    BigRational q(spec.m + J + 1, J + 1);
    q *= za;
    if (ra > 0) q *= pow(ratio_sup(spec.kind, ra * J), ra);
    return q;
}

} // namespace

SumResult sum_series(const SeriesSpec& spec, int digits10, const Real& tol,
                     long max_terms) {
    const auto check = converges(spec.r, spec.z);
    if (!check.convergent) return {std::nullopt, 0, std::nullopt, Classification::divergent};

    const int work = digits10 + 20;
    const Real tol_w = tol.round_to(work);

    // All-zero F series (r = 0 makes every F_{rj} vanish).
    if (spec.kind == SeriesKind::F && (spec.r == 0 || spec.z == 0))
        return {Real(0L, digits10), 0, Real(0L, digits10), Classification::convergent};

    const long j_start = spec.kind == SeriesKind::F ? 1 : 0;

    // Incremental exact state: the Fibonacci pair (F_n, F_(n+1)) at n = r j,
    // advanced r steps at a time through the addition formulas, and z^j.
    const BigInt fr_m1 = fib(spec.r - 1);
    const BigInt fr = fib(spec.r);
    const BigInt fr_p1 = fib(spec.r + 1);
    BigInt fn = fib(spec.r * j_start);
    BigInt fn1 = fib(spec.r * j_start + 1);
    BigRational zp = pow(spec.z, j_start);

    Real sum(0L, work);
    long terms = 0;
    BigRational q(0);
    bool have_q = false;
    Real q_real(0L, work);
    Real last_mag(0L, work);

    for (long j = j_start;; ++j) {
        if (terms >= max_terms) {
            SumResult partial{sum.round_to(digits10), terms, std::nullopt,
                              Classification::convergent};
            if (!have_q) {
                q = tail_ratio_bound(spec, j);
                if (q < 1) {
                    have_q = true;
                    q_real = Real::from_rational(q, work);
                }
            }
            if (have_q) {
                const Real bound = last_mag * q_real / (Real(1L, work) - q_real);
                partial.tail_bound = bound.round_to(digits10);
            }
            throw truncation_error("sum_series: max_terms exceeded", std::move(partial));
        }

        BigInt rising = 1; // (m+j)!/j! = (j+1)(j+2)...(j+m)
        for (unsigned i = 1; i <= spec.m; ++i) rising *= BigInt(j + i);

        BigRational coeff(rising);
        if (spec.kind == SeriesKind::F) {
            coeff *= BigRational(fn);
            if (j % 2 == 0) coeff = -coeff; // (-1)^(j+1)
        } else {
            coeff *= BigRational(2 * fn1 - fn); // L_n = 2 F_(n+1) - F_n
            if (j % 2 == 1) coeff = -coeff;     // (-1)^j
        }
        coeff *= zp;

        const unsigned k = spec.m + static_cast<unsigned>(j) + 1;
        const Real term = Real::from_rational(coeff, work) * zeta_int(k, work);
        sum += term;
        ++terms;

        const Real term_mag = term.abs();
        last_mag = term_mag;
        if (j > j_start && term_mag < tol_w) {
            if (!have_q) {
                q = tail_ratio_bound(spec, j);
                if (q < 1) {
                    have_q = true;
                    q_real = Real::from_rational(q, work);
                }
            }
            if (have_q) {
                const Real bound = term_mag * q_real / (Real(1L, work) - q_real);
                if (bound < tol_w)
                    return {sum.round_to(digits10), terms, bound.round_to(digits10),
                            Classification::convergent};
            }
        }

        // Advance the exact state to j + 1.
        const BigInt next_fn = fr * fn1 + fr_m1 * fn;
        const BigInt next_fn1 = fr_p1 * fn1 + fr * fn;
        fn = next_fn;
        fn1 = next_fn1;
        zp *= spec.z;
    }
}

} // namespace fibzeta
