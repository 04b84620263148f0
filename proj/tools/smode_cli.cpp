// smode: benchmark runner and result comparison.
//
//   smode bench --problems g01..g13 --helpers 4 --runs 25 --seed 7 --out r4.csv
//   smode compare r2.csv r4.csv

#include "smode/harness.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <utility>
#include <vector>

namespace {

struct FlagBinding {
    std::string key;
    std::string value;
    CLI::Option* option = nullptr;
};

int run_bench(const std::string& config_path, std::vector<FlagBinding>& flags) {
    smode::ExperimentConfig config;
    config.problems = smode::parse_problem_list("all");
    if (!config_path.empty())
        smode::apply_config_file(config, config_path);

    std::string overrides;
    for (const auto& f : flags) {
        if (f.option->count() > 0)
            overrides += f.key + '=' + f.value + '\n';
    }
    smode::apply_config_text(config, overrides);
    config.validate();
    if (config.output.empty())
        throw std::invalid_argument("--out is required");

    const auto stats = smode::run_experiment(config);
    smode::write_csv(stats, config.output);
    std::cout << smode::format_csv(stats);
    return 0;
}

int run_compare(const std::string& a, const std::string& b) {
    const auto report = smode::compare_report(smode::read_csv(a), smode::read_csv(b));
    std::cout << smode::format_report(report);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multi-objective differential evolution with helper functions for constrained optimization"};
    app.require_subcommand(1);

    auto* bench = app.add_subcommand("bench", "Run the benchmark protocol and write a results CSV");
    std::string config_path;
    bench->add_option("--config", config_path, "key=value file; command-line flags take precedence")
        ->check(CLI::ExistingFile);

    std::vector<FlagBinding> flags;
    const std::pair<const char*, const char*> specs[] = {
        {"problems", "Problem ids: all, g01..g13, or a comma list"},
        {"helpers", "Helper set: 2, 4, 6, or a list such as F1,F3"},
        {"fes", "Evaluation budget per run"},
        {"runs", "Independent runs per problem"},
        {"seed", "Master seed"},
        {"mu", "Population size"},
        {"lambda", "Individuals varied per generation"},
        {"F", "Mutation scale factor"},
        {"Cr", "Crossover rate"},
        {"delta", "Equality constraint tolerance"},
        {"c4", "Penalty coefficient of F4"},
        {"c5", "Penalty coefficient of F5"},
        {"c6", "Penalty coefficient of F6"},
        {"archive", "Infeasible-solution archive: on|off"},
        {"archive-interval", "Generations between archive injections"},
        {"archive-replacements", "Parents replaced per archive injection"},
        {"max-retries", "Mutation redraws before clamping into the box"},
        {"mode", "Selection: smode (dominance) or greedy (feasible-rule DE baseline)"},
        {"workers", "Parallel runs"},
        {"out", "Output CSV path"},
    };
    flags.reserve(std::size(specs));
    for (const auto& [key, help] : specs) {
        flags.push_back({key, {}, nullptr});
        flags.back().option = bench->add_option(std::string("--") + key, flags.back().value, help);
    }

    auto* compare = app.add_subcommand("compare", "Compare two results CSV files");
    std::string file_a, file_b;
    compare->add_option("a", file_a, "First results CSV")->required()->check(CLI::ExistingFile);
    compare->add_option("b", file_b, "Second results CSV")->required()->check(CLI::ExistingFile);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*bench)
            return run_bench(config_path, flags);
        return run_compare(file_a, file_b);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
