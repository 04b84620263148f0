#pragma once

#include "smode/engine.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace smode {

/// One experiment: every listed problem, `runs` independent runs each.
struct ExperimentConfig {
    std::vector<std::string> problems;
    int runs = 25;
    std::uint64_t master_seed = 1;
    SmodeConfig engine;
    std::size_t workers = 1;
    std::filesystem::path output;

    void validate() const;
};

/// Applies `key = value` lines (keys as the bench flags, without dashes) onto
/// `config`. Blank lines and lines starting with '#' are ignored. Throws
/// std::invalid_argument on unknown keys or malformed values.
void apply_config_text(ExperimentConfig& config, std::string_view text);
void apply_config_file(ExperimentConfig& config, const std::filesystem::path& path);

/// Per-run seed from (master seed, problem id, run index).
std::uint64_t derive_run_seed(std::uint64_t master_seed, std::string_view problem_id, int run_index);

/// Error-value statistics for one problem. Absent values are "NA".
struct ProblemStatistics {
    std::string problem;
    std::string helpers;
    std::size_t fes = 0;
    int runs = 0;
    std::optional<double> best;
    std::optional<double> median;
    std::optional<double> worst;
    std::optional<double> mean;
    std::optional<double> std;
    int feasible_runs = 0;
};

/// Aggregates per-run errors (nullopt = no feasible solution). NA ranks worse
/// than any number for best/median/worst; mean and std need every run
/// feasible. Median is the lower middle order statistic; std divides by runs.
ProblemStatistics summarize(std::string problem, std::string helpers, std::size_t fes,
                            std::span<const std::optional<double>> errors);

/// Error of one run: f(best feasible) - best_known, or nullopt.
std::optional<double> error_value(const RunResult& result, const ConstrainedProblem& problem);

std::vector<ProblemStatistics> run_experiment(const ExperimentConfig& config);

/// "%.4E" rendering, or "NA".
std::string format_value(const std::optional<double>& value);

std::string format_csv(std::span<const ProblemStatistics> stats);
void write_csv(std::span<const ProblemStatistics> stats, const std::filesystem::path& path);
std::vector<ProblemStatistics> parse_csv(std::string_view text);
std::vector<ProblemStatistics> read_csv(const std::filesystem::path& path);

enum class Outcome { A, B, Tie };

struct ComparisonRow {
    std::string problem;
    int feasible_a = 0;
    int feasible_b = 0;
    std::optional<double> best_a;
    std::optional<double> best_b;
    Outcome feasibility = Outcome::Tie;
    Outcome best = Outcome::Tie;
};

struct ComparisonReport {
    std::string label_a;
    std::string label_b;
    std::vector<ComparisonRow> rows;
    int feasible_problems_a = 0; ///< problems with at least one feasible run
    int feasible_problems_b = 0;
};

/// Problem-by-problem comparison of two result sets over the same problems.
/// Throws std::invalid_argument if the problem sets differ.
ComparisonReport compare_report(std::span<const ProblemStatistics> a,
                                std::span<const ProblemStatistics> b);

std::string format_report(const ComparisonReport& report);

} // namespace smode
