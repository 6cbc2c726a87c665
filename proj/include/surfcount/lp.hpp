#pragma once

#include "surfcount/exact.hpp"

namespace surfcount {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rat objective;
    std::vector<Rat> x;
};

// maximize c.x subject to A x = b and x_i >= 0 for flagged variables.
// Unflagged variables are free. Exact rational simplex, Bland's rule.
LpResult lp_maximize(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b,
                     const std::vector<Rat>& c, const std::vector<bool>& nonneg);

struct FeasibilityQuery {
    IntMat equalities;                                 // A x = rhs
    std::vector<Rat> rhs;                              // empty means 0
    std::vector<int> nonneg_indices;                   // x_i >= 0 for these
    std::vector<std::vector<int>> strict_positive_sums;  // sum over each set > 0
};

// Rational witness satisfying every constraint (strictness handled exactly by
// maximizing the minimum of the strict sums), or nullopt when infeasible.
std::optional<std::vector<Rat>> lp_feasible(const FeasibilityQuery& q);

// max / min of x[index] over {A x = b, x_i >= 0 for flagged}, as used for
// slice bounding boxes. Status Unbounded when the polyhedron is unbounded in
// that direction.
LpResult lp_extremum(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b,
                     const std::vector<bool>& nonneg, int index, bool maximize);

}  // namespace surfcount
