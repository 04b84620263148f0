#pragma once

#include "smode/core.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace smode {

using ScalarFunction = std::function<double(std::span<const double>)>;

enum class ObjectiveType { Linear, Quadratic, Nonlinear };

std::string_view to_string(ObjectiveType type) noexcept;

/// Benchmark summary row: dimension, objective type, estimated feasible
/// ratio rho (percent), constraint counts by kind and active count at the optimum.
struct ProblemMeta {
    std::size_t dimension = 0;
    ObjectiveType objective_type = ObjectiveType::Nonlinear;
    double rho = 0.0;
    std::size_t li = 0;
    std::size_t ne = 0;
    std::size_t ni = 0;
    std::size_t active = 0;

    std::size_t constraint_count() const noexcept { return li + ne + ni; }
};

/// Raw objective and constraint values at a point; no penalty applied.
struct RawEvaluation {
    double f = 0.0;
    std::vector<double> g; ///< inequalities, satisfied when <= 0
    std::vector<double> h; ///< equalities, satisfied when |h| <= delta
};

/// min f(x) s.t. g_i(x) <= 0, h_j(x) = 0, x in bounds.
struct ConstrainedProblem {
    std::string id;
    Bounds bounds;
    ScalarFunction objective;
    std::vector<ScalarFunction> inequalities;
    std::vector<ScalarFunction> equalities;
    double best_known = 0.0;
    /// Published optimal point, when known.
    std::optional<DecisionVector> optimum;
    /// Number of original constraints folded into each registered evaluator.
    /// 1 everywhere except g12, whose single min-form inequality stands for
    /// 9^3 disjunctive disc constraints.
    std::size_t terms_per_inequality = 1;

    std::size_t dimension() const noexcept { return bounds.dimension(); }

    /// Constraint count as the benchmark metadata counts it.
    std::size_t constraint_terms() const noexcept {
        return inequalities.size() * terms_per_inequality + equalities.size();
    }

    /// Evaluates f, every g_i and every h_j. Throws std::invalid_argument on
    /// dimension mismatch, std::domain_error on a non-finite result.
    RawEvaluation evaluate_raw(std::span<const double> x) const;
};

struct CatalogEntry {
    ConstrainedProblem problem;
    ProblemMeta meta;
};

/// The thirteen benchmark problems g01..g13 in id order.
const std::vector<CatalogEntry>& problem_catalog();

/// Looks up a problem by id ("g01".."g13"); throws std::out_of_range if unknown.
const CatalogEntry& find_problem(std::string_view id);

/// Expands a problem selection: "all", "g01..g13" ranges, comma lists, or
/// any mix ("g01,g04..g06"). Throws std::invalid_argument on unknown ids.
std::vector<std::string> parse_problem_list(std::string_view spec);

} // namespace smode
