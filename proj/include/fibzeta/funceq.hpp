#pragma once

#include "fibzeta/qsqrt5.hpp"
#include "fibzeta/real.hpp"

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <utility>

namespace fibzeta {

// One id per polygamma functional equation handled by the residual
// evaluator. Each id records a parity constraint on the order m and a
// linear constraint its argument tuple must satisfy exactly.
enum class FuncEqId {
    RECURRENCE,     // psi(z+1) = psi(z) + (-1)^m m!/z^(m+1)
    REFLECTION,     // (-1)^m psi(1-z) - psi(z) = pi cotd(z)
    DUPLICATION,    // psi(-z) - (-1)^m psi(z) = (-1)^m pi cotd(z) + m!/z^(m+1)
    NEG_DIFF_EVEN,  // x+y=1, m even: psi(-x) - psi(-y)
    NEG_SUM_ODD,    // x+y=1, m odd:  psi(-x) + psi(-y)
    HALF_REFLECT,   // (-1)^m psi(1/2+z) - psi(1/2-z) = pi cotd(1/2-z)
    ONE_PM,         // psi(1+z) - (-1)^m psi(1-z)
    UNIT_SHIFT,     // x-y=1: psi(x) - psi(y) = (-1)^m m!/y^(m+1)
    SUM_ONE,        // x+y=1: psi(x) - (-1)^m psi(y) = -pi cotd(x)
    SHIFT_DIFF,     // psi(x+1) - psi(y+1) vs psi(x) - psi(y)
    SHIFT_SUM,      // psi(x+1) + psi(y+1) vs psi(x) + psi(y)
    GEN_DIFF,       // psi(1+x) - psi(1+y) via psi(1-x), psi(1-y)
    GEN_SUM,        // psi(1+x) + psi(1+y) via psi(1-x), psi(1-y)
    XY1_DIFF_EVEN,  // x+y=1, m even: psi(1+x) - psi(1+y)
    XY1_SUM_ODD,    // x+y=1, m odd:  psi(1+x) + psi(1+y)
    XY2_DIFF_EVEN,  // x+y=2, m even: psi(1+x) - psi(1+y)
    XY2_SUM_ODD,    // x+y=2, m odd:  psi(1+x) + psi(1+y)
    HALF_DIFF_EVEN, // x+y=1, m even: psi(1/2+x) - psi(1/2+y)
    HALF_SUM_ODD,   // x+y=1, m odd:  psi(1/2+x) + psi(1/2+y)
};

inline constexpr std::array<FuncEqId, 19> all_funceq_ids = {
    FuncEqId::RECURRENCE,     FuncEqId::REFLECTION,    FuncEqId::DUPLICATION,
    FuncEqId::NEG_DIFF_EVEN,  FuncEqId::NEG_SUM_ODD,   FuncEqId::HALF_REFLECT,
    FuncEqId::ONE_PM,         FuncEqId::UNIT_SHIFT,    FuncEqId::SUM_ONE,
    FuncEqId::SHIFT_DIFF,     FuncEqId::SHIFT_SUM,     FuncEqId::GEN_DIFF,
    FuncEqId::GEN_SUM,        FuncEqId::XY1_DIFF_EVEN, FuncEqId::XY1_SUM_ODD,
    FuncEqId::XY2_DIFF_EVEN,  FuncEqId::XY2_SUM_ODD,   FuncEqId::HALF_DIFF_EVEN,
    FuncEqId::HALF_SUM_ODD,
};

enum class Parity { any, even, odd };
enum class ArgConstraint { free_one, free_two, sum_one, sum_two, diff_one };

Parity funceq_parity(FuncEqId id);
ArgConstraint funceq_constraint(FuncEqId id);
std::string_view funceq_name(FuncEqId id);
bool funceq_admits(FuncEqId id, unsigned m);

// |LHS - RHS| of the cited equation, both sides through the special
// function layer; contract: residual < 10^(12-P) at admissible inputs.
Real funceq_residual(FuncEqId id, unsigned m, std::span<const QS5> args, int digits10);

// One id per evaluation of a polygamma pair at a golden-ratio point.
enum class LemmaId {
    AT_ALPHA_DIFF_EVEN,
    AT_ALPHA_SUM_ODD,
    AT_ALPHA2_DIFF_EVEN,
    AT_ALPHA2_SUM_ODD,
    AT_ALPHA3_DIFF_EVEN,
    AT_ALPHA3_SUM_ODD,
    AT_ALPHA3_HALF_DIFF_EVEN,
    AT_ALPHA3_HALF_SUM_ODD,
    AT_AR_OVER_LR_DIFF_EVEN,
    AT_AR_OVER_LR_SUM_ODD,
    AT_AR_OVER_FR_SQRT5_DIFF,
    AT_ONE_PLUS_2AR_LR_DIFF_EVEN,
    AT_ONE_PLUS_2AR_LR_SUM_ODD,
    AT_NEG_AR_LR_DIFF_EVEN,
    AT_NEG_AR_LR_SUM_ODD,
};

inline constexpr std::array<LemmaId, 15> all_lemma_ids = {
    LemmaId::AT_ALPHA_DIFF_EVEN,
    LemmaId::AT_ALPHA_SUM_ODD,
    LemmaId::AT_ALPHA2_DIFF_EVEN,
    LemmaId::AT_ALPHA2_SUM_ODD,
    LemmaId::AT_ALPHA3_DIFF_EVEN,
    LemmaId::AT_ALPHA3_SUM_ODD,
    LemmaId::AT_ALPHA3_HALF_DIFF_EVEN,
    LemmaId::AT_ALPHA3_HALF_SUM_ODD,
    LemmaId::AT_AR_OVER_LR_DIFF_EVEN,
    LemmaId::AT_AR_OVER_LR_SUM_ODD,
    LemmaId::AT_AR_OVER_FR_SQRT5_DIFF,
    LemmaId::AT_ONE_PLUS_2AR_LR_DIFF_EVEN,
    LemmaId::AT_ONE_PLUS_2AR_LR_SUM_ODD,
    LemmaId::AT_NEG_AR_LR_DIFF_EVEN,
    LemmaId::AT_NEG_AR_LR_SUM_ODD,
};

Parity lemma_parity(LemmaId id);
bool lemma_has_r(LemmaId id);
std::string_view lemma_name(LemmaId id);
bool lemma_admits(LemmaId id, unsigned m);

// Both sides of the evaluation, computed independently: the left from
// polygamma at exact field points, the right from the cot derivative plus
// exact Fibonacci/Lucas/factorial closed parts. |lhs - rhs| < 10^(12-P).
std::pair<Real, Real> lemma_sides(LemmaId id, unsigned m, std::optional<long> r, int digits10);

} // namespace fibzeta
