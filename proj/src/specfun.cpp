#include "fibzeta/specfun.hpp"

#include "fibzeta/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

namespace fibzeta {

// --- Bernoulli numbers ------------------------------------------------------

namespace {

std::mutex g_bernoulli_mutex;
std::vector<BigRational> g_bernoulli_table; // B_0, B_1, ...
std::atomic<bool> g_bernoulli_fault{false};

// Defining recurrence: sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1.
void extend_bernoulli_locked(unsigned n) {
    if (g_bernoulli_table.empty()) g_bernoulli_table.emplace_back(1);
    while (g_bernoulli_table.size() <= n) {
        const unsigned m = static_cast<unsigned>(g_bernoulli_table.size());
        BigRational acc(0);
        for (unsigned j = 0; j < m; ++j)
            acc += BigRational(binomial(m + 1, j)) * g_bernoulli_table[j];
        g_bernoulli_table.push_back(-acc / BigRational(m + 1));
    }
}

} // namespace

BigRational bernoulli(unsigned n) {
    std::lock_guard lock(g_bernoulli_mutex);
    extend_bernoulli_locked(n);
    BigRational b = g_bernoulli_table[n];
    if (g_bernoulli_fault.load(std::memory_order_relaxed) && n == 8) b = -b;
    return b;
}

namespace testing {
void inject_bernoulli_sign_fault(bool enabled) {
    g_bernoulli_fault.store(enabled, std::memory_order_relaxed);
}
} // namespace testing

// --- zeta at integer arguments ----------------------------------------------

namespace {

std::mutex g_zeta_mutex;
std::map<std::pair<unsigned, int>, Real> g_zeta_cache;

// Dirichlet sum over n <= N plus the Euler-Maclaurin tail
//   N^(1-k)/(k-1) + N^(-k)/2 + sum_j B_2j/(2j)! (k)_(2j-1) N^(-k-2j+1),
// truncated when the term drops below eps. Returns nothing if the
// asymptotic terms start growing first (caller enlarges N).
std::optional<Real> zeta_euler_maclaurin(unsigned k, long n_direct, int work,
                                         const Real& eps) {
    const long ks = static_cast<long>(k);
    Real sum(0L, work);
    for (long n = 1; n <= n_direct; ++n) sum += Real(n, work).pow_int(-ks);

    const Real n_real(n_direct, work);
    sum += n_real.pow_int(1 - ks) / (ks - 1);
    sum -= n_real.pow_int(-ks) / 2;

    // rising = (k)(k+1)...(k+2j-2); pw = N^-(k+2j-1).
    BigInt rising = 1;
    Real pw = n_real.pow_int(-(ks + 1));
    const Real inv_n2 = n_real.pow_int(-2);
    Real prev_mag(0L, work);
    for (unsigned j = 1; j <= 512; ++j) {
        if (j == 1)
            rising = ks;
        else
            rising *= BigInt(ks + 2 * j - 3) * BigInt(ks + 2 * j - 2);
        const BigRational coeff =
            bernoulli(2 * j) * BigRational(rising, factorial(2 * j));
        const Real term = Real::from_rational(coeff, work) * pw;
        const Real mag = term.abs();
        if (mag < eps) {
            sum += term;
            return sum;
        }
        if (j > 1 && mag > prev_mag) return std::nullopt; // asymptotic blow-up
        sum += term;
        prev_mag = mag;
        pw *= inv_n2;
    }
    return std::nullopt;
}

} // namespace

Real zeta_int(unsigned k, int digits10) {
    if (k < 2) throw domain_error("zeta_int requires k >= 2");
    {
        std::lock_guard lock(g_zeta_mutex);
        auto it = g_zeta_cache.find({k, digits10});
        if (it != g_zeta_cache.end()) return it->second;
    }

    const int work = digits10 + 10;
    const Real eps = Real::pow10(-(work - 2), work);

    // Direct terms stop paying off past n = 10^(D/k).
    long n_direct = 10 + (2 * work) / 5;
    const double full_direct = std::pow(10.0, static_cast<double>(work + 2) / k);
    if (full_direct < static_cast<double>(n_direct))
        n_direct = std::max(2L, static_cast<long>(full_direct) + 1);

    std::optional<Real> value;
    for (int attempt = 0; attempt < 8 && !value; ++attempt) {
        value = zeta_euler_maclaurin(k, n_direct, work, eps);
        if (!value) n_direct *= 2;
    }
    if (!value) throw precision_error("zeta_int: Euler-Maclaurin failed to converge");

    Real rounded = value->round_to(digits10);
    std::lock_guard lock(g_zeta_mutex);
    auto [it, inserted] = g_zeta_cache.emplace(std::make_pair(k, digits10), rounded);
    return it->second;
}

// --- cot derivative polynomials ---------------------------------------------

namespace {

std::mutex g_cotpoly_mutex;
std::vector<CotDerivPoly> g_cotpoly_table;

// P_0(u) = u, P_(m+1)(u) = -(1 + u^2) P_m'(u).
void extend_cotpoly_locked(unsigned m) {
    if (g_cotpoly_table.empty())
        g_cotpoly_table.push_back({0, {BigInt(0), BigInt(1)}});
    while (g_cotpoly_table.size() <= m) {
        const auto& prev = g_cotpoly_table.back().coeffs;
        std::vector<BigInt> deriv(prev.size() > 1 ? prev.size() - 1 : 1, BigInt(0));
        for (size_t i = 1; i < prev.size(); ++i) deriv[i - 1] = prev[i] * BigInt(i);
        std::vector<BigInt> next(deriv.size() + 2, BigInt(0));
        for (size_t i = 0; i < deriv.size(); ++i) {
            next[i] -= deriv[i];
            next[i + 2] -= deriv[i];
        }
        g_cotpoly_table.push_back(
            {static_cast<unsigned>(g_cotpoly_table.size()), std::move(next)});
    }
}

Real horner(const CotDerivPoly& poly, const Real& u, int work) {
    Real acc(0L, work);
    for (size_t i = poly.coeffs.size(); i-- > 0;)
        acc = acc * u + Real(poly.coeffs[i], work);
    return acc;
}

Real cot_deriv_from_cot(unsigned m, const Real& cot_value, int work, int digits10) {
    Real value = horner(cot_deriv_poly(m), cot_value, work);
    if (m > 0) value *= const_pi(work).pow_int(static_cast<long>(m));
    return value.round_to(digits10);
}

} // namespace

CotDerivPoly cot_deriv_poly(unsigned m) {
    std::lock_guard lock(g_cotpoly_mutex);
    extend_cotpoly_locked(m);
    return g_cotpoly_table[m];
}

Real cot_deriv(unsigned m, const QS5& x, int digits10) {
    const int work = digits10 + 12;
    return cot_deriv_from_cot(m, cot_pi(x, work), work, digits10);
}

Real cot_deriv(unsigned m, const Real& x, int digits10) {
    const int work = digits10 + 12;
    return cot_deriv_from_cot(m, cot_pi(x, work), work, digits10);
}

// --- polygamma ----------------------------------------------------------------

namespace {

// Bernoulli asymptotic expansion at large w, truncated at the smallest
// term. Empty result means the series bottomed out before reaching the
// target accuracy (caller widens the shift threshold and retries).
//   psi(w)      ~ ln w - 1/(2w) - sum_j B_2j / (2j w^(2j))
//   psi^(m)(w)  ~ (-1)^(m-1) [ (m-1)!/w^m + m!/(2 w^(m+1))
//                              + sum_j B_2j (2j+m-1)!/((2j)! w^(2j+m)) ]
std::optional<Real> polygamma_asymptotic(unsigned m, const Real& w, int work) {
    const Real eps = Real::pow10(-(work + 2), work);
    Real sum(0L, work);
    if (m == 0) {
        sum = w.ln() - (Real(1L, work) / 2) / w;
    } else {
        const Real inv_wm = w.pow_int(-static_cast<long>(m));
        sum = Real(factorial(m - 1), work) * inv_wm;
        sum += Real(factorial(m), work) / 2 * inv_wm / w;
    }
    const Real scale_floor = sum.abs();

    Real pw = w.pow_int(-(static_cast<long>(m) + 2)); // w^-(m+2), the j = 1 power
    const Real inv_w2 = w.pow_int(-2);
    Real prev_mag(0L, work);
    bool converged = false;
    for (unsigned j = 1; j <= 1024; ++j) {
        BigRational coeff = bernoulli(2 * j);
        if (m == 0) {
            coeff /= -BigRational(2 * j); // the digamma sum enters subtracted
        } else {
            BigInt risen = 1; // (2j+1)(2j+2)...(2j+m-1) = (2j+m-1)!/(2j)!
            for (unsigned i = 1; i < m; ++i) risen *= 2 * j + i;
            coeff *= BigRational(risen);
        }
        // pw is w^-(2j+m); for m = 0 that is exactly the w^-2j the
        // digamma sum needs.
        const Real term = Real::from_rational(coeff, work) * pw;
        const Real mag = term.abs();
        if (mag < eps * scale_floor || mag < eps) {
            sum += term;
            converged = true;
            break;
        }
        if (j > 1 && mag > prev_mag) break;
        sum += term;
        prev_mag = mag;
        pw *= inv_w2;
    }
    if (!converged) return std::nullopt;
    if (m == 0) return sum;
    return (m % 2 == 0) ? -sum : sum;
}

long asym_threshold(int work) { return std::max(10L, (4L * work) / 5); }

constexpr long max_recurrence_shift = 1'000'000;

} // namespace

Real polygamma(unsigned m, const QS5& x, int digits10) {
    if (x.is_integer() && x.sign() <= 0)
        throw pole_error("polygamma pole at non-positive integer");

    const int base_work = digits10 + 25 + static_cast<int>(2 * m);
    for (int attempt = 0; attempt < 3; ++attempt) {
        const int work = base_work + attempt * (base_work / 2);
        const long threshold = asym_threshold(work);
        const BigInt fl = floor(x);
        long shift = 0;
        if (fl < threshold) shift = threshold - static_cast<long>(fl);
        if (shift > max_recurrence_shift)
            throw domain_error("polygamma argument too far left of the origin");

        // Exact bookkeeping of the recurrence terms sum_i (x+i)^-(m+1).
        QS5 shift_sum(0L);
        for (long i = 0; i < shift; ++i)
            shift_sum += (x + QS5(i)).pow(-(static_cast<long>(m) + 1));

        const Real w = to_real(x + QS5(shift), work);
        auto tail = polygamma_asymptotic(m, w, work);
        if (!tail) continue;
        Real correction = Real(factorial(m), work) * to_real(shift_sum, work);
        if (m % 2 == 1) correction = -correction;
        return (*tail - correction).round_to(digits10);
    }
    throw precision_error("polygamma: asymptotic expansion failed to reach tolerance");
}

Real polygamma(unsigned m, const Real& x, int digits10) {
    if (x.sign() <= 0) {
        const Real nearest = x - (x + Real::from_rational(BigRational(1, 2),
                                                          x.digits10())).floor();
        if (nearest.abs() < Real::pow10(5 - digits10, digits10))
            throw pole_error("polygamma pole at non-positive integer");
    }

    const int base_work = digits10 + 25 + static_cast<int>(2 * m);
    for (int attempt = 0; attempt < 3; ++attempt) {
        const int work = base_work + attempt * (base_work / 2);
        const long threshold = asym_threshold(work);
        const Real xs = x.round_to(work);
        const long fl = xs.floor().to_long_rounded();
        long shift = 0;
        if (fl < threshold) shift = threshold - fl;
        if (shift > max_recurrence_shift)
            throw domain_error("polygamma argument too far left of the origin");

        Real shift_sum(0L, work);
        for (long i = 0; i < shift; ++i)
            shift_sum += (xs + Real(i, work)).pow_int(-(static_cast<long>(m) + 1));

        const Real w = xs + Real(shift, work);
        auto tail = polygamma_asymptotic(m, w, work);
        if (!tail) continue;
        Real correction = Real(factorial(m), work) * shift_sum;
        if (m % 2 == 1) correction = -correction;
        return (*tail - correction).round_to(digits10);
    }
    throw precision_error("polygamma: asymptotic expansion failed to reach tolerance");
}

Real const_euler_gamma(int digits10) {
    return (-polygamma(0, QS5(1L), digits10 + 10)).round_to(digits10);
}

} // namespace fibzeta
