#pragma once

// Test-only reference computations. Nothing here calls into the fitness or
// engine modules; feasibility is checked constraint by constraint.

#include "smode/problems.hpp"

#include <optional>
#include <vector>

namespace oracle {

/// Every g_i <= 0 and every |h_j| <= delta.
bool feasible_direct(const smode::ConstrainedProblem& problem, const std::vector<double>& x, double delta);

struct Candidate {
    std::vector<double> x;
    double f;
};

/// Exhaustive grid over [lo, hi] with spacing `step` per axis; best feasible point.
std::optional<Candidate> grid_search(const smode::ConstrainedProblem& problem, const std::vector<double>& lo,
                                     const std::vector<double>& hi, double step, double delta);

/// Repeated local grids of +-radius cells around the incumbent, shrinking the
/// spacing by 4 each level until it falls below min_step.
Candidate refine(const smode::ConstrainedProblem& problem, Candidate start, double step, double delta,
                 int radius, double min_step = 1e-12);

/// g12 disc constraint by enumerating all 9^3 centres.
double g12_disc_min(const std::vector<double>& x);

} // namespace oracle
