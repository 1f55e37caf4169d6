#include "fibzeta/funceq.hpp"

#include "fibzeta/errors.hpp"
#include "fibzeta/specfun.hpp"

#include <string>

namespace fibzeta {

Parity funceq_parity(FuncEqId id) {
    switch (id) {
        case FuncEqId::NEG_DIFF_EVEN:
        case FuncEqId::XY1_DIFF_EVEN:
        case FuncEqId::XY2_DIFF_EVEN:
        case FuncEqId::HALF_DIFF_EVEN:
            return Parity::even;
        case FuncEqId::NEG_SUM_ODD:
        case FuncEqId::XY1_SUM_ODD:
        case FuncEqId::XY2_SUM_ODD:
        case FuncEqId::HALF_SUM_ODD:
            return Parity::odd;
        default:
            return Parity::any;
    }
}

ArgConstraint funceq_constraint(FuncEqId id) {
    switch (id) {
        case FuncEqId::RECURRENCE:
        case FuncEqId::REFLECTION:
        case FuncEqId::DUPLICATION:
        case FuncEqId::HALF_REFLECT:
        case FuncEqId::ONE_PM:
            return ArgConstraint::free_one;
        case FuncEqId::UNIT_SHIFT:
            return ArgConstraint::diff_one;
        case FuncEqId::NEG_DIFF_EVEN:
        case FuncEqId::NEG_SUM_ODD:
        case FuncEqId::SUM_ONE:
        case FuncEqId::XY1_DIFF_EVEN:
        case FuncEqId::XY1_SUM_ODD:
        case FuncEqId::HALF_DIFF_EVEN:
        case FuncEqId::HALF_SUM_ODD:
            return ArgConstraint::sum_one;
        case FuncEqId::XY2_DIFF_EVEN:
        case FuncEqId::XY2_SUM_ODD:
            return ArgConstraint::sum_two;
        case FuncEqId::SHIFT_DIFF:
        case FuncEqId::SHIFT_SUM:
        case FuncEqId::GEN_DIFF:
        case FuncEqId::GEN_SUM:
            return ArgConstraint::free_two;
    }
    throw usage_error("unknown functional equation id");
}

std::string_view funceq_name(FuncEqId id) {
    switch (id) {
        case FuncEqId::RECURRENCE: return "RECURRENCE";
        case FuncEqId::REFLECTION: return "REFLECTION";
        case FuncEqId::DUPLICATION: return "DUPLICATION";
        case FuncEqId::NEG_DIFF_EVEN: return "NEG_DIFF_EVEN";
        case FuncEqId::NEG_SUM_ODD: return "NEG_SUM_ODD";
        case FuncEqId::HALF_REFLECT: return "HALF_REFLECT";
        case FuncEqId::ONE_PM: return "ONE_PM";
        case FuncEqId::UNIT_SHIFT: return "UNIT_SHIFT";
        case FuncEqId::SUM_ONE: return "SUM_ONE";
        case FuncEqId::SHIFT_DIFF: return "SHIFT_DIFF";
        case FuncEqId::SHIFT_SUM: return "SHIFT_SUM";
        case FuncEqId::GEN_DIFF: return "GEN_DIFF";
        case FuncEqId::GEN_SUM: return "GEN_SUM";
        case FuncEqId::XY1_DIFF_EVEN: return "XY1_DIFF_EVEN";
        case FuncEqId::XY1_SUM_ODD: return "XY1_SUM_ODD";
        case FuncEqId::XY2_DIFF_EVEN: return "XY2_DIFF_EVEN";
        case FuncEqId::XY2_SUM_ODD: return "XY2_SUM_ODD";
        case FuncEqId::HALF_DIFF_EVEN: return "HALF_DIFF_EVEN";
        case FuncEqId::HALF_SUM_ODD: return "HALF_SUM_ODD";
    }
    return "?";
}

bool funceq_admits(FuncEqId id, unsigned m) {
    switch (funceq_parity(id)) {
        case Parity::even: return m % 2 == 0;
        case Parity::odd: return m % 2 == 1;
        case Parity::any: return true;
    }
    return false;
}

namespace {

void require_not_pole_psi(const QS5& x) {
    if (x.is_integer() && x.sign() <= 0)
        throw pole_error("polygamma argument is a non-positive integer");
}

void require_nonzero(const QS5& x) {
    if (x.is_zero()) throw pole_error("zero denominator in recurrence term");
}

// Exact m!/x^(m+1) as a field element.
QS5 fact_over_pow(unsigned m, const QS5& x) {
    require_nonzero(x);
    return QS5(BigRational(factorial(m))) * x.pow(-(static_cast<long>(m) + 1));
}

struct Env {
    unsigned m;
    int work;
    Real pi;

    Real psi(const QS5& x) const {
        require_not_pole_psi(x);
        return polygamma(m, x, work);
    }
    Real cotd(const QS5& z) const { return cot_deriv(m, z, work); }
    Real exact(const QS5& v) const { return to_real(v, work); }
    int sgn() const { return m % 2 == 0 ? 1 : -1; } // (-1)^m
};

} // namespace

Real funceq_residual(FuncEqId id, unsigned m, std::span<const QS5> args, int digits10) {
    if (!funceq_admits(id, m))
        throw usage_error(std::string(funceq_name(id)) + ": order parity not admissible");

    const ArgConstraint constraint = funceq_constraint(id);
    const size_t expected = constraint == ArgConstraint::free_one ? 1 : 2;
    if (args.size() != expected)
        throw usage_error(std::string(funceq_name(id)) + ": wrong number of arguments");

    const QS5 one(1L);
    if (constraint == ArgConstraint::sum_one && args[0] + args[1] != one)
        throw usage_error("arguments must satisfy x + y = 1 exactly");
    if (constraint == ArgConstraint::sum_two && args[0] + args[1] != QS5(2L))
        throw usage_error("arguments must satisfy x + y = 2 exactly");
    if (constraint == ArgConstraint::diff_one && args[0] - args[1] != one)
        throw usage_error("arguments must satisfy x - y = 1 exactly");

    const int work = digits10 + 15;
    const Env e{m, work, const_pi(work)};
    const QS5 half(BigRational(1, 2));
    Real lhs(0L, work);
    Real rhs(0L, work);

    switch (id) {
        case FuncEqId::RECURRENCE: {
            const QS5& z = args[0];
            lhs = e.psi(z + one);
            rhs = e.psi(z) + e.exact(fact_over_pow(m, z)) * e.sgn();
            break;
        }
        case FuncEqId::REFLECTION: {
            const QS5& z = args[0];
            lhs = e.psi(one - z) * e.sgn() - e.psi(z);
            rhs = e.pi * e.cotd(z);
            break;
        }
        case FuncEqId::DUPLICATION: {
            const QS5& z = args[0];
            lhs = e.psi(-z) - e.psi(z) * e.sgn();
            rhs = e.pi * e.cotd(z) * e.sgn() + e.exact(fact_over_pow(m, z));
            break;
        }
        case FuncEqId::NEG_DIFF_EVEN: {
            const QS5 &x = args[0], &y = args[1];
            lhs = e.psi(-x) - e.psi(-y);
            rhs = -(e.pi * e.cotd(y)) + e.exact(fact_over_pow(m, x) - fact_over_pow(m, y));
            break;
        }
        case FuncEqId::NEG_SUM_ODD: {
            const QS5 &x = args[0], &y = args[1];
            lhs = e.psi(-x) + e.psi(-y);
            rhs = -(e.pi * e.cotd(y)) + e.exact(fact_over_pow(m, x) + fact_over_pow(m, y));
            break;
        }
        case FuncEqId::HALF_REFLECT: {
            const QS5& z = args[0];
            lhs = e.psi(half + z) * e.sgn() - e.psi(half - z);
            rhs = e.pi * e.cotd(half - z);
            break;
        }
        case FuncEqId::ONE_PM: {
            const QS5& z = args[0];
            lhs = e.psi(one + z) - e.psi(one - z) * e.sgn();
            rhs = -(e.pi * e.cotd(z)) + e.exact(fact_over_pow(m, z)) * e.sgn();
            break;
        }
        case FuncEqId::UNIT_SHIFT: {
            const QS5 &x = args[0], &y = args[1];
            lhs = e.psi(x) - e.psi(y);
            rhs = e.exact(fact_over_pow(m, y)) * e.sgn();
            break;
        }
        case FuncEqId::SUM_ONE: {
            const QS5 &x = args[0], &y = args[1];
            lhs = e.psi(x) - e.psi(y) * e.sgn();
            rhs = -(e.pi * e.cotd(x));
            break;
        }
        case FuncEqId::SHIFT_DIFF: {
            const QS5 &x = args[0], &y = args[1];
            lhs = e.psi(x + one) - e.psi(y + one);
            rhs = e.psi(x) - e.psi(y) -
                  e.exact(fact_over_pow(m, x) - fact_over_pow(m, y)) * e.sgn();
            break;
        }
        case FuncEqId::SHIFT_SUM: {
            const QS5 &x = args[0], &y = args[1];
            lhs = e.psi(x + one) + e.psi(y + one);
            rhs = e.psi(x) + e.psi(y) +
                  e.exact(fact_over_pow(m, x) + fact_over_pow(m, y)) * e.sgn();
            break;
        }
        case FuncEqId::GEN_DIFF: {
            const QS5 &x = args[0], &y = args[1];
            lhs = e.psi(one + x) - e.psi(one + y);
            rhs = (e.psi(one - x) - e.psi(one - y)) * e.sgn() - e.pi * e.cotd(x) +
                  e.pi * e.cotd(y) +
                  e.exact(fact_over_pow(m, x) - fact_over_pow(m, y)) * e.sgn();
            break;
        }
        case FuncEqId::GEN_SUM: {
            const QS5 &x = args[0], &y = args[1];
            lhs = e.psi(one + x) + e.psi(one + y);
            rhs = (e.psi(one - x) + e.psi(one - y)) * e.sgn() - e.pi * e.cotd(x) -
                  e.pi * e.cotd(y) +
                  e.exact(fact_over_pow(m, x) + fact_over_pow(m, y)) * e.sgn();
            break;
        }
        case FuncEqId::XY1_DIFF_EVEN: {
            const QS5 &x = args[0], &y = args[1];
            lhs = e.psi(one + x) - e.psi(one + y);
            rhs = e.pi * e.cotd(y) + e.exact(fact_over_pow(m, x) - fact_over_pow(m, y));
            break;
        }
        case FuncEqId::XY1_SUM_ODD: {
            const QS5 &x = args[0], &y = args[1];
            lhs = e.psi(one + x) + e.psi(one + y);
            rhs = e.pi * e.cotd(y) - e.exact(fact_over_pow(m, x) + fact_over_pow(m, y));
            break;
        }
        case FuncEqId::XY2_DIFF_EVEN: {
            const QS5 &x = args[0], &y = args[1];
            lhs = e.psi(one + x) - e.psi(one + y);
            rhs = -(e.pi * e.cotd(x)) +
                  e.exact(fact_over_pow(m, one - y) + fact_over_pow(m, x) -
                          fact_over_pow(m, y));
            break;
        }
        case FuncEqId::XY2_SUM_ODD: {
            const QS5 &x = args[0], &y = args[1];
            lhs = e.psi(one + x) + e.psi(one + y);
            rhs = -(e.pi * e.cotd(x)) -
                  e.exact(fact_over_pow(m, one - y) + fact_over_pow(m, x) +
                          fact_over_pow(m, y));
            break;
        }
        case FuncEqId::HALF_DIFF_EVEN: {
            const QS5 &x = args[0], &y = args[1];
            lhs = e.psi(half + x) - e.psi(half + y);
            rhs = -(e.pi * e.cotd(half - y)) + e.exact(fact_over_pow(m, x - half));
            break;
        }
        case FuncEqId::HALF_SUM_ODD: {
            const QS5 &x = args[0], &y = args[1];
            lhs = e.psi(half + x) + e.psi(half + y);
            rhs = -(e.pi * e.cotd(half - y)) - e.exact(fact_over_pow(m, x - half));
            break;
        }
    }
    return (lhs - rhs).abs().round_to(digits10);
}

// --- Lemma evaluations -------------------------------------------------------

Parity lemma_parity(LemmaId id) {
    switch (id) {
        case LemmaId::AT_ALPHA_DIFF_EVEN:
        case LemmaId::AT_ALPHA2_DIFF_EVEN:
        case LemmaId::AT_ALPHA3_DIFF_EVEN:
        case LemmaId::AT_ALPHA3_HALF_DIFF_EVEN:
        case LemmaId::AT_AR_OVER_LR_DIFF_EVEN:
        case LemmaId::AT_ONE_PLUS_2AR_LR_DIFF_EVEN:
        case LemmaId::AT_NEG_AR_LR_DIFF_EVEN:
            return Parity::even;
        case LemmaId::AT_ALPHA_SUM_ODD:
        case LemmaId::AT_ALPHA2_SUM_ODD:
        case LemmaId::AT_ALPHA3_SUM_ODD:
        case LemmaId::AT_ALPHA3_HALF_SUM_ODD:
        case LemmaId::AT_AR_OVER_LR_SUM_ODD:
        case LemmaId::AT_ONE_PLUS_2AR_LR_SUM_ODD:
        case LemmaId::AT_NEG_AR_LR_SUM_ODD:
            return Parity::odd;
        case LemmaId::AT_AR_OVER_FR_SQRT5_DIFF:
            return Parity::any;
    }
    return Parity::any;
}

bool lemma_has_r(LemmaId id) {
    switch (id) {
        case LemmaId::AT_AR_OVER_LR_DIFF_EVEN:
        case LemmaId::AT_AR_OVER_LR_SUM_ODD:
        case LemmaId::AT_AR_OVER_FR_SQRT5_DIFF:
        case LemmaId::AT_ONE_PLUS_2AR_LR_DIFF_EVEN:
        case LemmaId::AT_ONE_PLUS_2AR_LR_SUM_ODD:
        case LemmaId::AT_NEG_AR_LR_DIFF_EVEN:
        case LemmaId::AT_NEG_AR_LR_SUM_ODD:
            return true;
        default:
            return false;
    }
}

std::string_view lemma_name(LemmaId id) {
    switch (id) {
        case LemmaId::AT_ALPHA_DIFF_EVEN: return "AT_ALPHA_DIFF_EVEN";
        case LemmaId::AT_ALPHA_SUM_ODD: return "AT_ALPHA_SUM_ODD";
        case LemmaId::AT_ALPHA2_DIFF_EVEN: return "AT_ALPHA2_DIFF_EVEN";
        case LemmaId::AT_ALPHA2_SUM_ODD: return "AT_ALPHA2_SUM_ODD";
        case LemmaId::AT_ALPHA3_DIFF_EVEN: return "AT_ALPHA3_DIFF_EVEN";
        case LemmaId::AT_ALPHA3_SUM_ODD: return "AT_ALPHA3_SUM_ODD";
        case LemmaId::AT_ALPHA3_HALF_DIFF_EVEN: return "AT_ALPHA3_HALF_DIFF_EVEN";
        case LemmaId::AT_ALPHA3_HALF_SUM_ODD: return "AT_ALPHA3_HALF_SUM_ODD";
        case LemmaId::AT_AR_OVER_LR_DIFF_EVEN: return "AT_AR_OVER_LR_DIFF_EVEN";
        case LemmaId::AT_AR_OVER_LR_SUM_ODD: return "AT_AR_OVER_LR_SUM_ODD";
        case LemmaId::AT_AR_OVER_FR_SQRT5_DIFF: return "AT_AR_OVER_FR_SQRT5_DIFF";
        case LemmaId::AT_ONE_PLUS_2AR_LR_DIFF_EVEN: return "AT_ONE_PLUS_2AR_LR_DIFF_EVEN";
        case LemmaId::AT_ONE_PLUS_2AR_LR_SUM_ODD: return "AT_ONE_PLUS_2AR_LR_SUM_ODD";
        case LemmaId::AT_NEG_AR_LR_DIFF_EVEN: return "AT_NEG_AR_LR_DIFF_EVEN";
        case LemmaId::AT_NEG_AR_LR_SUM_ODD: return "AT_NEG_AR_LR_SUM_ODD";
    }
    return "?";
}

bool lemma_admits(LemmaId id, unsigned m) {
    switch (lemma_parity(id)) {
        case Parity::even: return m % 2 == 0;
        case Parity::odd: return m % 2 == 1;
        case Parity::any: return true;
    }
    return false;
}

std::pair<Real, Real> lemma_sides(LemmaId id, unsigned m, std::optional<long> r,
                                  int digits10) {
    if (!lemma_admits(id, m))
        throw usage_error(std::string(lemma_name(id)) + ": order parity not admissible");
    if (lemma_has_r(id)) {
        if (!r) throw usage_error(std::string(lemma_name(id)) + ": r required");
        if (*r == 0) throw usage_error(std::string(lemma_name(id)) + ": r must be nonzero");
    } else if (r) {
        throw usage_error(std::string(lemma_name(id)) + ": r not applicable");
    }

    const int work = digits10 + 15;
    const Env e{m, work, const_pi(work)};
    const QS5 alpha = QS5::alpha();
    const QS5 beta = QS5::beta();
    const QS5 s5 = QS5::sqrt5();
    const BigRational fact_m(factorial(m));
    const long mp1 = static_cast<long>(m) + 1;

    Real lhs(0L, work);
    Real rhs(0L, work);

    switch (id) {
        case LemmaId::AT_ALPHA_DIFF_EVEN:
            lhs = e.psi(alpha) - e.psi(beta);
            rhs = -(e.pi * e.cotd(alpha));
            break;
        case LemmaId::AT_ALPHA_SUM_ODD:
            lhs = e.psi(alpha) + e.psi(beta);
            rhs = -(e.pi * e.cotd(alpha));
            break;
        case LemmaId::AT_ALPHA2_DIFF_EVEN:
            lhs = e.psi(alpha.pow(2)) - e.psi(beta.pow(2));
            rhs = e.pi * e.cotd(beta) +
                  e.exact(QS5(BigRational(0), fact_m * BigRational(fib(m + 1))));
            break;
        case LemmaId::AT_ALPHA2_SUM_ODD:
            lhs = e.psi(alpha.pow(2)) + e.psi(beta.pow(2));
            rhs = -(e.pi * e.cotd(beta)) -
                  e.exact(QS5(fact_m * BigRational(lucas(m + 1))));
            break;
        case LemmaId::AT_ALPHA3_DIFF_EVEN:
            lhs = e.psi(alpha.pow(3)) - e.psi(beta.pow(3));
            rhs = e.pi * e.cotd(beta * QS5(2L)) +
                  e.exact(QS5(fact_m) * s5.pow(-mp1) +
                          QS5(BigRational(0),
                              fact_m * BigRational(fib(m + 1), pow(BigInt(2), m + 1))));
            break;
        case LemmaId::AT_ALPHA3_SUM_ODD:
            lhs = e.psi(alpha.pow(3)) + e.psi(beta.pow(3));
            rhs = -(e.pi * e.cotd(beta * QS5(2L))) -
                  e.exact(QS5(fact_m) * s5.pow(-mp1) +
                          QS5(fact_m * BigRational(lucas(m + 1), pow(BigInt(2), m + 1))));
            break;
        case LemmaId::AT_ALPHA3_HALF_DIFF_EVEN:
            lhs = e.psi(alpha.pow(3) / QS5(2L)) - e.psi(beta.pow(3) / QS5(2L));
            rhs = -(e.pi * e.cotd(QS5(BigRational(0), BigRational(1, 2)))) +
                  e.exact(QS5(fact_m * BigRational(pow(BigInt(2), m + 1))) * s5.pow(-mp1));
            break;
        case LemmaId::AT_ALPHA3_HALF_SUM_ODD:
            lhs = e.psi(alpha.pow(3) / QS5(2L)) + e.psi(beta.pow(3) / QS5(2L));
            rhs = -(e.pi * e.cotd(QS5(BigRational(0), BigRational(1, 2)))) -
                  e.exact(QS5(fact_m * BigRational(pow(BigInt(2), m + 1))) * s5.pow(-mp1));
            break;
        case LemmaId::AT_AR_OVER_LR_DIFF_EVEN:
        case LemmaId::AT_AR_OVER_LR_SUM_ODD: {
            const QS5 lr(BigRational(lucas(*r)));
            const QS5 xa = alpha_pow(*r) / lr;
            const QS5 xb = alpha_pow(*r).conj() / lr;
            lhs = id == LemmaId::AT_AR_OVER_LR_DIFF_EVEN ? e.psi(xa) - e.psi(xb)
                                                         : e.psi(xa) + e.psi(xb);
            rhs = -(e.pi * e.cotd(xa));
            break;
        }
        case LemmaId::AT_AR_OVER_FR_SQRT5_DIFF: {
            const QS5 denom = QS5(BigRational(fib(*r))) * s5;
            const QS5 xa = alpha_pow(*r) / denom;
            const QS5 xb = alpha_pow(*r).conj() / denom;
            lhs = e.psi(xa) - e.psi(xb);
            QS5 closed = QS5(fact_m * BigRational(pow(BigInt(fib(*r)), m + 1))) *
                         (alpha_pow(*r) * s5).pow(mp1);
            const long sign_exp = (*r) * static_cast<long>(m) + *r + static_cast<long>(m);
            if (sign_exp % 2 != 0) closed = -closed;
            rhs = e.exact(closed);
            break;
        }
        case LemmaId::AT_ONE_PLUS_2AR_LR_DIFF_EVEN: {
            const QS5 lr(BigRational(lucas(*r)));
            const QS5 za = QS5(2L) * alpha_pow(*r) / lr;
            const QS5 zb = QS5(2L) * alpha_pow(*r).conj() / lr;
            lhs = e.psi(QS5(1L) + za) - e.psi(QS5(1L) + zb);
            const BigRational lr_pow(pow(BigInt(lucas(*r)), m + 1));
            QS5 closed = QS5(fact_m * lr_pow) * (QS5(BigRational(fib(*r))) * s5).pow(-mp1);
            QS5 fterm = QS5(BigRational(0),
                            fact_m * lr_pow * BigRational(fib(*r * mp1),
                                                          pow(BigInt(2), m + 1)));
            if (*r % 2 != 0) fterm = -fterm;
            closed = closed - fterm;
            rhs = -(e.pi * e.cotd(za)) + e.exact(closed);
            break;
        }
        case LemmaId::AT_ONE_PLUS_2AR_LR_SUM_ODD: {
            const QS5 lr(BigRational(lucas(*r)));
            const QS5 za = QS5(2L) * alpha_pow(*r) / lr;
            const QS5 zb = QS5(2L) * alpha_pow(*r).conj() / lr;
            lhs = e.psi(QS5(1L) + za) + e.psi(QS5(1L) + zb);
            const BigRational lr_pow(pow(BigInt(lucas(*r)), m + 1));
            QS5 closed = QS5(fact_m * lr_pow) * (QS5(BigRational(fib(*r))) * s5).pow(-mp1);
            closed = closed + QS5(fact_m * lr_pow *
                                  BigRational(lucas(*r * mp1), pow(BigInt(2), m + 1)));
            rhs = -(e.pi * e.cotd(za)) - e.exact(closed);
            break;
        }
        case LemmaId::AT_NEG_AR_LR_DIFF_EVEN: {
            const QS5 lr(BigRational(lucas(*r)));
            const QS5 xa = alpha_pow(*r) / lr;
            const QS5 xb = alpha_pow(*r).conj() / lr;
            lhs = e.psi(-xa) - e.psi(-xb);
            QS5 closed(BigRational(0),
                       fact_m * BigRational(pow(BigInt(lucas(*r)), m + 1)) *
                           BigRational(fib(*r * mp1)));
            if (*r % 2 != 0) closed = -closed;
            rhs = -(e.pi * e.cotd(xb)) - e.exact(closed);
            break;
        }
        case LemmaId::AT_NEG_AR_LR_SUM_ODD: {
            const QS5 lr(BigRational(lucas(*r)));
            const QS5 xa = alpha_pow(*r) / lr;
            const QS5 xb = alpha_pow(*r).conj() / lr;
            lhs = e.psi(-xa) + e.psi(-xb);
            rhs = -(e.pi * e.cotd(xb)) +
                  e.exact(QS5(fact_m * BigRational(pow(BigInt(lucas(*r)), m + 1)) *
                              BigRational(lucas(*r * mp1))));
            break;
        }
    }
    return {lhs.round_to(digits10), rhs.round_to(digits10)};
}

} // namespace fibzeta
