#pragma once

#include "fibzeta/qsqrt5.hpp"
#include "fibzeta/real.hpp"
#include "fibzeta/series.hpp"

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace fibzeta {

// --- Closed-form expression trees -----------------------------------------
//
// Right-hand sides of the catalog identities are built from a fixed set of
// exact atoms; evaluation at precision P keeps relative error <= 10^(12-P).

struct ClosedForm;
using ClosedFormPtr = std::shared_ptr<const ClosedForm>;

struct ExactScalar { QS5 value; };          // exact field / rational scalar
struct PiPow { long exponent = 1; };        // pi^k
struct CotDerivAt {                         // d^m/dz^m cot(pi z) at z
    unsigned order = 0;
    QS5 argument;                           // non-integer, checked at build
};
struct FibAtom { long index = 0; };
struct LucasAtom { long index = 0; };
struct FactorialAtom { unsigned n = 0; };
struct Add { std::vector<ClosedFormPtr> terms; };
struct Mul { std::vector<ClosedFormPtr> factors; };
struct Neg { ClosedFormPtr inner; };

struct ClosedForm {
    std::variant<ExactScalar, PiPow, CotDerivAt, FibAtom, LucasAtom,
                 FactorialAtom, Add, Mul, Neg>
        node;
};

ClosedFormPtr cf_scalar(QS5 v);
ClosedFormPtr cf_scalar(BigRational v);
ClosedFormPtr cf_pi(long exponent);
ClosedFormPtr cf_cot_deriv(unsigned order, QS5 argument);
ClosedFormPtr cf_fib(long index);
ClosedFormPtr cf_lucas(long index);
ClosedFormPtr cf_factorial(unsigned n);
ClosedFormPtr cf_add(std::vector<ClosedFormPtr> terms);
ClosedFormPtr cf_mul(std::vector<ClosedFormPtr> factors);
ClosedFormPtr cf_neg(ClosedFormPtr inner);

Real evaluate(const ClosedForm& form, int digits10);
bool structurally_equal(const ClosedForm& lhs, const ClosedForm& rhs);
std::string render(const ClosedForm& form);

// Exact part of the expression: the sum of additive terms free of pi and
// cot atoms. For every catalog family this collapses to a rational.
QS5 exact_constant_part(const ClosedForm& form);

// --- Identity catalog ------------------------------------------------------

enum class Family {
    THEOREM_F,
    THEOREM_L,
    COR2_F,
    COR2_L,
    COR3_F,
    COR3_L,
    COR4_F,
    COR4_L,
    COR5_F,
    COR5_L,
    EXAMPLE,
};

std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

// A catalog entry: a series (theorem coordinates) bound to its closed form
// and exact convergence classification. series_sign folds the theorem sum
// onto the catalog's printed series direction (-1 only where a negative z
// turns the alternating F sum into a non-alternating one).
struct Identity {
    std::string id;
    Family family = Family::EXAMPLE;
    unsigned m = 0;
    long r = 1;
    BigRational z;
    SeriesSpec lhs;
    int series_sign = 1;
    ClosedFormPtr rhs;
    bool convergent = false;
    QS5 dominant_ratio;
    std::string provenance;
};

// Right-hand side of the theorem: the polygamma combination at the exact
// field points 1 + alpha^r z and 1 + beta^r z.
Real theorem_rhs(SeriesKind kind, unsigned m, long r, const BigRational& z, int digits10);

// Residual between the psi(1 + w) form and the psi(w) form plus the exact
// Fibonacci/Lucas correction term; < 10^(12-P). F needs m even, L m odd.
Real shift_identity_check(SeriesKind kind, unsigned m, long r, const BigRational& z,
                          int digits10);

// The full catalog: every printed example plus generic instances of the
// four corollary families over admissible small (m, r).
std::vector<Identity> build_catalog();

const Identity* find_identity(const std::vector<Identity>& catalog, std::string_view id);

// --- Verification ----------------------------------------------------------

enum class VerifyMode { direct_sum, polygamma_form };
enum class Verdict { pass, fail, divergent_skipped_direct };

std::string_view mode_name(VerifyMode m);
std::string_view verdict_name(Verdict v);

struct VerificationReport {
    std::string id;
    VerifyMode mode = VerifyMode::polygamma_form;
    std::string lhs_value;
    std::string rhs_value;
    std::string abs_error;
    std::string rel_error;
    long terms_used = 0;
    int precision = 0;
    long elapsed_ms = 0;
    Verdict verdict = Verdict::fail;
    std::string diagnostic;

    bool ok() const { return verdict != Verdict::fail; }
};

// Default identity tolerance: 10^(20-P).
Real default_tolerance(int digits10);

// Checks the identity in every applicable mode: direct summation when the
// series converges, and always the polygamma form. Pole / truncation
// failures turn into a fail verdict with a diagnostic.
VerificationReport verify(const Identity& identity, int digits10, const Real& tol,
                          long max_terms = 20000);

// |rhs(a) - rhs(b)| for two entries claiming the same closed value;
// requires matching kind, m, r and |z|.
Real cross_check(const Identity& a, const Identity& b, int digits10);

namespace testing {
// Self-test fault hook: perturbs one printed catalog constant (432 -> 433)
// so harness sensitivity can be demonstrated end to end.
void inject_catalog_constant_fault(bool enabled);
} // namespace testing

} // namespace fibzeta
