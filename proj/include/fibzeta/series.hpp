#pragma once

#include "fibzeta/qsqrt5.hpp"
#include "fibzeta/real.hpp"

#include <optional>

namespace fibzeta {

enum class SeriesKind { F, L };

// One zeta series in theorem coordinates:
//   F: sum_{j>=1} (-1)^(j+1) (m+j)!/j! zeta(m+j+1) F_{rj} z^j   (m >= 0)
//   L: sum_{j>=0} (-1)^j     (m+j)!/j! zeta(m+j+1) L_{rj} z^j   (m >= 1)
struct SeriesSpec {
    SeriesKind kind = SeriesKind::F;
    unsigned m = 0;
    long r = 1;
    BigRational z;

    SeriesSpec() = default;
    SeriesSpec(SeriesKind kind_, unsigned m_, long r_, BigRational z_);
};

enum class Classification { convergent, divergent };

struct SumResult {
    std::optional<Real> value;
    long terms_used = 0;
    std::optional<Real> tail_bound;
    Classification classification = Classification::divergent;
};

// Exact convergence predicate: the series converges iff the dominant
// geometric ratio alpha^|r| * |z| is below 1, decided in Q(sqrt(5)).
// Returns the flag together with that exact ratio.
struct ConvergenceCheck {
    bool convergent = false;
    QS5 dominant_ratio;
};

ConvergenceCheck converges(long r, const BigRational& z);

// Thrown when max_terms is hit before the tail bound reaches tol; carries
// the best partial sum.
class truncation_error : public error {
public:
    truncation_error(std::string what, SumResult partial)
        : error(std::move(what)), partial_(std::move(partial)) {}
    const SumResult& partial() const { return partial_; }

private:
    SumResult partial_;
};

// Direct summation with exact integer/rational term factors and a rigorous
// geometric tail bound: stops once |t_J| q/(1-q) < tol for an exact
// rational q >= sup_{j>=J} |t_{j+1}/t_j|. Divergent specs are classified
// and never summed.
SumResult sum_series(const SeriesSpec& spec, int digits10, const Real& tol, long max_terms);

} // namespace fibzeta
