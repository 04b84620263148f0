#pragma once

#include "smode/core.hpp"
#include "smode/fitness.hpp"
#include "smode/problems.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace smode {

enum class SelectionMode {
    Dominance, ///< multi-objective replacement of dominated parents
    Greedy,    ///< classic DE: trial replaces its target under the feasible rule
};

struct SmodeConfig {
    std::size_t mu = 180;
    std::size_t lambda = 8;
    double F = 0.6;
    double Cr = 0.95;
    std::size_t fes_max = 5000;
    HelperSet helpers = HelperSet::standard(4);
    SelectionMode mode = SelectionMode::Dominance;
    // Infeasible-solution archive (off by default; interval and count are
    // tunables with no reference values).
    bool archive_enabled = false;
    std::size_t archive_interval = 20;
    std::size_t archive_replacements = 3;
    std::size_t max_bound_retries = 100;

    /// Throws std::invalid_argument when a field is out of range.
    void validate() const;
};

struct SmodeState {
    std::vector<EvaluatedIndividual> population;
    std::size_t fes = 0;
    std::size_t generation = 0;
    RngStream rng;
    std::optional<EvaluatedIndividual> best_feasible;
    std::vector<EvaluatedIndividual> archive;
    /// Mutants that exhausted their redraws and were clamped into the box.
    std::size_t bound_clamps = 0;

    explicit SmodeState(std::uint64_t seed) : rng(seed) {}
};

struct Mutant {
    DecisionVector x;
    bool clamped = false;
};

/// rand/1 mutation x_r1 + F (x_r2 - x_r3) around target index `target`.
/// Out-of-box mutants are redrawn with fresh indices up to `max_retries`
/// times, then clamped. Requires population.size() >= 4.
Mutant de_mutate(std::span<const EvaluatedIndividual> population, std::size_t target, double F,
                 const Bounds& bounds, RngStream& rng, std::size_t max_retries);

/// Binomial crossover with a forced coordinate j_rand.
DecisionVector de_crossover(std::span<const double> target, std::span<const double> mutant, double Cr,
                            RngStream& rng);

/// Deterministic core of de_crossover: coordinate j comes from the mutant when
/// draws[j] <= Cr or j == j_rand.
DecisionVector crossover_with_draws(std::span<const double> target, std::span<const double> mutant,
                                    double Cr, std::span<const double> draws, std::size_t j_rand);

/// Indices of members not dominated by any other member (by objectives).
std::vector<std::size_t> nondominated(std::span<const EvaluatedIndividual> set);

struct Replacement {
    std::size_t slot;      ///< index into the parent group
    std::size_t candidate; ///< index into the candidate list
};

/// Offers each candidate, in random order, to the continuously updated
/// parent group: a candidate overwrites one uniformly chosen member it
/// dominates, or is discarded. Returns the replacements in application order.
std::vector<Replacement> replace_dominated(std::vector<EvaluatedIndividual>& group,
                                           std::span<const EvaluatedIndividual> candidates,
                                           RngStream& rng);

/// Random initial population of mu individuals; fes = mu.
SmodeState initialize(const ConstrainedProblem& problem, const SmodeConfig& config, std::uint64_t seed);

/// One dominance-selection generation. Returns the evaluated children.
std::vector<EvaluatedIndividual> smode_generation(SmodeState& state, const SmodeConfig& config,
                                                  const ConstrainedProblem& problem);

/// One classic DE generation (mu trials, feasible-rule greedy selection).
std::vector<EvaluatedIndividual> greedy_generation(SmodeState& state, const SmodeConfig& config,
                                                   const ConstrainedProblem& problem);

/// Infeasible-archive bookkeeping after a generation; no-op when disabled.
void archive_step(SmodeState& state, std::span<const EvaluatedIndividual> children,
                  const SmodeConfig& config);

/// Evaluations consumed by one generation in the configured mode.
std::size_t evaluations_per_generation(const SmodeConfig& config) noexcept;

struct RunResult {
    std::optional<EvaluatedIndividual> best_feasible;
    std::size_t fes = 0;
    std::size_t generations = 0;
    std::size_t bound_clamps = 0;
    /// Best feasible f so far; entry 0 is the initial population.
    std::vector<std::optional<double>> trace;

    friend bool operator==(const RunResult&, const RunResult&) = default;
};

RunResult run(const ConstrainedProblem& problem, const SmodeConfig& config, std::uint64_t seed);

} // namespace smode
