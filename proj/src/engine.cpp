#include "smode/engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace smode {

void SmodeConfig::validate() const {
    if (mu < 4)
        throw std::invalid_argument("mu must be at least 4");
    if (lambda < 1 || lambda > mu)
        throw std::invalid_argument("lambda must satisfy 1 <= lambda <= mu");
    if (!(F > 0.0 && F <= 2.0))
        throw std::invalid_argument("F must lie in (0, 2]");
    if (!(Cr >= 0.0 && Cr <= 1.0))
        throw std::invalid_argument("Cr must lie in [0, 1]");
    if (fes_max < mu)
        throw std::invalid_argument("fes_max must be at least mu");
    if (archive_interval < 1)
        throw std::invalid_argument("archive interval must be positive");
    if (max_bound_retries < 1)
        throw std::invalid_argument("max_bound_retries must be positive");
    helpers.validate();
}

Mutant de_mutate(std::span<const EvaluatedIndividual> population, std::size_t target, double F,
                 const Bounds& bounds, RngStream& rng, std::size_t max_retries) {
    const std::size_t mu = population.size();
    if (mu < 4)
        throw std::invalid_argument("de_mutate: population needs at least 4 members");
    if (target >= mu)
        throw std::invalid_argument("de_mutate: target index out of range");

    const std::size_t n = bounds.dimension();
    DecisionVector v(n);
    for (std::size_t attempt = 0; attempt < max_retries; ++attempt) {
        std::size_t r[3];
        for (std::size_t k = 0; k < 3; ++k) {
            std::size_t pick;
            do {
                pick = rng.index(mu);
            } while (pick == target || std::find(r, r + k, pick) != r + k);
            r[k] = pick;
        }
        const auto& a = population[r[0]].x;
        const auto& b = population[r[1]].x;
        const auto& c = population[r[2]].x;
        for (std::size_t j = 0; j < n; ++j)
            v[j] = a[j] + F * (b[j] - c[j]);
        if (clip_check(v, bounds))
            return {std::move(v), false};
    }
    return {bounds.clamp(v), true};
}

DecisionVector crossover_with_draws(std::span<const double> target, std::span<const double> mutant,
                                    double Cr, std::span<const double> draws, std::size_t j_rand) {
    if (target.size() != mutant.size() || draws.size() != target.size())
        throw std::invalid_argument("crossover: dimension mismatch");
    DecisionVector trial(target.begin(), target.end());
    for (std::size_t j = 0; j < trial.size(); ++j) {
        if (draws[j] <= Cr || j == j_rand)
            trial[j] = mutant[j];
    }
    return trial;
}

DecisionVector de_crossover(std::span<const double> target, std::span<const double> mutant, double Cr,
                            RngStream& rng) {
    if (target.size() != mutant.size() || target.empty())
        throw std::invalid_argument("crossover: dimension mismatch");
    const std::size_t j_rand = rng.index(target.size());
    std::vector<double> draws(target.size());
    for (double& d : draws)
        d = rng.uniform();
    return crossover_with_draws(target, mutant, Cr, draws, j_rand);
}

std::vector<std::size_t> nondominated(std::span<const EvaluatedIndividual> set) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < set.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < set.size() && !dominated; ++j)
            dominated = j != i && dominates(set[j].objectives, set[i].objectives);
        if (!dominated)
            out.push_back(i);
    }
    return out;
}

std::vector<Replacement> replace_dominated(std::vector<EvaluatedIndividual>& group,
                                           std::span<const EvaluatedIndividual> candidates,
                                           RngStream& rng) {
    std::vector<std::size_t> order(candidates.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    rng.shuffle(order);

    std::vector<Replacement> applied;
    std::vector<std::size_t> victims;
    for (std::size_t c : order) {
        victims.clear();
        for (std::size_t s = 0; s < group.size(); ++s) {
            if (dominates(candidates[c].objectives, group[s].objectives))
                victims.push_back(s);
        }
        if (victims.empty())
            continue;
        const std::size_t slot = victims[rng.index(victims.size())];
        group[slot] = candidates[c];
        applied.push_back({slot, c});
    }
    return applied;
}

namespace {

void track_best(SmodeState& state, std::span<const EvaluatedIndividual> evaluated) {
    for (const auto& ind : evaluated) {
        if (ind.feasible() && (!state.best_feasible || ind.f < state.best_feasible->f))
            state.best_feasible = ind;
    }
}

EvaluatedIndividual make_child(const SmodeState& state, std::size_t target, const SmodeConfig& config,
                               const ConstrainedProblem& problem, RngStream& rng, std::size_t& clamps) {
    Mutant mutant = de_mutate(state.population, target, config.F, problem.bounds, rng,
                              config.max_bound_retries);
    if (mutant.clamped)
        ++clamps;
    DecisionVector trial = de_crossover(state.population[target].x, mutant.x, config.Cr, rng);
    return assess(problem, std::move(trial), config.helpers.delta);
}

} // namespace

SmodeState initialize(const ConstrainedProblem& problem, const SmodeConfig& config, std::uint64_t seed) {
    config.validate();
    SmodeState state(seed);
    state.population.reserve(config.mu);
    for (std::size_t i = 0; i < config.mu; ++i)
        state.population.push_back(
            assess(problem, random_point(problem.bounds, state.rng), config.helpers.delta));
    state.fes = config.mu;

    const double fsharp = worst_feasible_reference(state.population);
    for (auto& ind : state.population)
        ind.objectives = objective_vector(ind.f, ind.v, fsharp, config.helpers);
    track_best(state, state.population);
    return state;
}

std::vector<EvaluatedIndividual> smode_generation(SmodeState& state, const SmodeConfig& config,
                                                  const ConstrainedProblem& problem) {
    const std::vector<std::size_t> q_index =
        state.rng.sample_without_replacement(state.population.size(), config.lambda);

    std::vector<EvaluatedIndividual> children;
    children.reserve(q_index.size());
    for (std::size_t target : q_index)
        children.push_back(make_child(state, target, config, problem, state.rng, state.bound_clamps));
    state.fes += children.size();

    // f3 reference over P_t and C together, so parents and children share it.
    std::vector<EvaluatedIndividual> group;
    group.reserve(q_index.size());
    double fsharp = 0.0;
    {
        bool any = false;
        for (const auto* set : {&state.population, &children}) {
            for (const auto& ind : *set) {
                if (ind.feasible()) {
                    fsharp = any ? std::max(fsharp, ind.f) : ind.f;
                    any = true;
                }
            }
        }
    }
    for (std::size_t target : q_index) {
        group.push_back(state.population[target]);
        group.back().objectives = objective_vector(group.back().f, group.back().v, fsharp, config.helpers);
    }
    for (auto& child : children)
        child.objectives = objective_vector(child.f, child.v, fsharp, config.helpers);

    std::vector<EvaluatedIndividual> front;
    for (std::size_t i : nondominated(children))
        front.push_back(children[i]);
    replace_dominated(group, front, state.rng);

    for (std::size_t k = 0; k < q_index.size(); ++k)
        state.population[q_index[k]] = std::move(group[k]);

    track_best(state, children);
    ++state.generation;
    return children;
}

std::vector<EvaluatedIndividual> greedy_generation(SmodeState& state, const SmodeConfig& config,
                                                   const ConstrainedProblem& problem) {
    std::vector<EvaluatedIndividual> children;
    children.reserve(state.population.size());
    for (std::size_t i = 0; i < state.population.size(); ++i)
        children.push_back(make_child(state, i, config, problem, state.rng, state.bound_clamps));
    state.fes += children.size();

    // synchronous: every trial was built from P_t
    for (std::size_t i = 0; i < children.size(); ++i) {
        if (!feasible_rule_less(state.population[i], children[i]))
            state.population[i] = children[i];
    }
    track_best(state, children);
    ++state.generation;
    return children;
}

void archive_step(SmodeState& state, std::span<const EvaluatedIndividual> children,
                  const SmodeConfig& config) {
    if (!config.archive_enabled)
        return;

    const bool all_infeasible =
        !children.empty() && std::none_of(children.begin(), children.end(),
                                          [](const auto& c) { return c.feasible(); });
    if (all_infeasible) {
        const auto best = std::min_element(children.begin(), children.end(),
                                           [](const auto& a, const auto& b) { return a.v < b.v; });
        state.archive.push_back(*best);
    }

    if (state.generation % config.archive_interval != 0 || state.archive.empty())
        return;
    const std::size_t k = std::min({state.archive.size(), config.archive_replacements,
                                    state.population.size()});
    const auto slots = state.rng.sample_without_replacement(state.population.size(), k);
    const auto picks = state.rng.sample_without_replacement(state.archive.size(), k);
    for (std::size_t i = 0; i < k; ++i)
        state.population[slots[i]] = state.archive[picks[i]];
    state.archive.clear();
}

std::size_t evaluations_per_generation(const SmodeConfig& config) noexcept {
    return config.mode == SelectionMode::Greedy ? config.mu : config.lambda;
}

RunResult run(const ConstrainedProblem& problem, const SmodeConfig& config, std::uint64_t seed) {
    SmodeState state = initialize(problem, config, seed);
    RunResult result;
    auto record = [&] {
        result.trace.push_back(state.best_feasible ? std::optional<double>(state.best_feasible->f)
                                                   : std::nullopt);
    };
    record();

    const std::size_t step = evaluations_per_generation(config);
    while (state.fes + step <= config.fes_max) {
        const auto children = config.mode == SelectionMode::Greedy
                                  ? greedy_generation(state, config, problem)
                                  : smode_generation(state, config, problem);
        archive_step(state, children, config);
        record();
    }

    result.best_feasible = std::move(state.best_feasible);
    result.fes = state.fes;
    result.generations = state.generation;
    result.bound_clamps = state.bound_clamps;
    return result;
}

} // namespace smode
