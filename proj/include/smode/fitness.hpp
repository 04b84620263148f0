#pragma once

#include "smode/core.hpp"
#include "smode/problems.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace smode {

/// The six fitness functions of the multi-objective model.
///   F1: f              F4: f + c4 * v
///   F2: v              F5: f + c5 * v
///   F3: f if feasible, else fsharp + v (feasible-rule equivalent)
///   F6: f + c6 * v
enum class Helper { F1, F2, F3, F4, F5, F6 };

std::string_view to_string(Helper helper) noexcept;

struct HelperSet {
    std::vector<Helper> active{Helper::F1, Helper::F2};
    double c4 = 1.0;
    double c5 = 10.0;
    double c6 = 100.0;
    double delta = 1e-4;

    std::size_t size() const noexcept { return active.size(); }

    /// Throws std::invalid_argument if empty, duplicated, or a coefficient is negative.
    void validate() const;

    /// {F1,F2}, {F1..F4} or {F1..F6}.
    static HelperSet standard(int count);

    /// "2", "4", "6", or an explicit list such as "F1,F3" / "f2+f3".
    static HelperSet parse(std::string_view text);

    /// "2"/"4"/"6" for the standard sets, otherwise "F1+F3"-style.
    std::string label() const;
};

using ObjectiveVector = std::vector<double>;

struct EvaluatedIndividual {
    DecisionVector x;
    double f = 0.0;
    double v = 0.0;
    ObjectiveVector objectives;

    bool feasible() const noexcept { return v == 0.0; }

    friend bool operator==(const EvaluatedIndividual&, const EvaluatedIndividual&) = default;
};

/// Total violation: sum max(0, g_i) + sum max(0, |h_j| - delta).
double violation(std::span<const double> g, std::span<const double> h, double delta);

/// One evaluation of x (f and v only; objectives are left empty).
EvaluatedIndividual assess(const ConstrainedProblem& problem, DecisionVector x, double delta);

/// Largest f among feasible members, 0 when none is feasible.
double worst_feasible_reference(std::span<const EvaluatedIndividual> population);

ObjectiveVector objective_vector(double f, double v, double fsharp, const HelperSet& helpers);

/// Pareto dominance for minimisation. Throws std::invalid_argument on length mismatch.
bool dominates(std::span<const double> a, std::span<const double> b);

/// Feasible rule: feasible beats infeasible, then smaller f among feasible,
/// smaller v among infeasible.
bool feasible_rule_less(const EvaluatedIndividual& a, const EvaluatedIndividual& b) noexcept;

} // namespace smode
