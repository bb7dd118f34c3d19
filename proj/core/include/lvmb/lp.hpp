#ifndef LVMB_LP_HPP
#define LVMB_LP_HPP

#include <vector>

#include "lvmb/simplex.hpp"

namespace lvmb {

/// Outcome of a slack-maximization LP. When feasible, `witness` holds exact
/// values for every original variable and `optimal_slack` is t*; strict
/// feasibility of the var >= t system means t* > 0.
struct LpOutcome {
    bool feasible = false;
    SymFrac optimal_slack;
    std::vector<SymFrac> witness;
};

struct RatLpOutcome {
    bool feasible = false;
    Rational optimal_slack;
    RatVector witness;
};

/// maximize t subject to a * x = b, x_j >= t for j in nonneg_vars, t <= 1.
/// The cap normalizes the objective (keeps it bounded when the equalities
/// do not); it never binds in the interior-point uses where sum-to-one rows
/// force t <= 1/(vertex count). Infeasible iff the equality system has no
/// solution at all. Deterministic: Bland's rule, ties by variable index.
LpOutcome lp_max_slack(const SymMatrix& a, const std::vector<SymbolicReal>& b,
                       const std::vector<std::size_t>& nonneg_vars, const GeneratorTable& table);

/// Rational instantiation of the same fraction-free simplex; the hot path
/// for configurations whose coordinates are all rational.
RatLpOutcome lp_max_slack(const RatMatrix& a, const RatVector& b,
                          const std::vector<std::size_t>& nonneg_vars);

/// maximize c^T x subject to a x = b, x >= 0, over the rationals, through
/// the integer fast path with arbitrary-precision fallback.
SimplexResult<Int> solve_rational_standard_form(const RatMatrix& a, const RatVector& b,
                                                const RatVector& c, LpStatus& status);

} // namespace lvmb

#endif
