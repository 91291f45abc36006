#pragma once

#include <optional>
#include <vector>

#include "majorlab/rational.hpp"

namespace majorlab {

/// Exact feasibility test for {x >= 0 : A x = b} over the rationals.
///
/// Dense phase-1 simplex: artificial variables are added per row, their sum is
/// minimised with Bland's smallest-index pivoting rule (no cycling, guaranteed
/// termination), entirely in exact arithmetic. Redundant equality rows are
/// tolerated. Returns a feasible x, or nullopt when the system is infeasible.
std::optional<std::vector<Rational>> solve_equality_feasibility(
    const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b);

}  // namespace majorlab
