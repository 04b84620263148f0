#include "smode/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace smode {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
    T value{};
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        throw std::invalid_argument("invalid value '" + std::string(text) + "' for " + std::string(key));
    return value;
}

bool parse_switch(std::string_view key, std::string_view text) {
    if (text == "on" || text == "true" || text == "1")
        return true;
    if (text == "off" || text == "false" || text == "0")
        return false;
    throw std::invalid_argument("expected on|off for " + std::string(key));
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        const auto next = line.find(sep, pos);
        out.push_back(line.substr(pos, next == std::string_view::npos ? next : next - pos));
        if (next == std::string_view::npos)
            break;
        pos = next + 1;
    }
    return out;
}

constexpr std::string_view csv_header = "problem,helpers,fes,runs,best,median,worst,mean,std,feasible_runs";

} // namespace

void ExperimentConfig::validate() const {
    if (runs < 1)
        throw std::invalid_argument("runs must be at least 1");
    for (const auto& id : problems)
        (void)find_problem(id);
    engine.validate();
}

void apply_config_text(ExperimentConfig& config, std::string_view text) {
    std::size_t line_no = 0;
    for (std::string_view raw : split(text, '\n')) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#')
            continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key=value");
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        auto& e = config.engine;

        if (key == "problems")
            config.problems = parse_problem_list(value);
        else if (key == "helpers") {
            // keep coefficients and delta, replace only the active list
            e.helpers.active = HelperSet::parse(value).active;
        } else if (key == "fes")
            e.fes_max = parse_number<std::size_t>(key, value);
        else if (key == "runs")
            config.runs = parse_number<int>(key, value);
        else if (key == "seed")
            config.master_seed = parse_number<std::uint64_t>(key, value);
        else if (key == "mu")
            e.mu = parse_number<std::size_t>(key, value);
        else if (key == "lambda")
            e.lambda = parse_number<std::size_t>(key, value);
        else if (key == "F")
            e.F = parse_number<double>(key, value);
        else if (key == "Cr")
            e.Cr = parse_number<double>(key, value);
        else if (key == "delta")
            e.helpers.delta = parse_number<double>(key, value);
        else if (key == "c4")
            e.helpers.c4 = parse_number<double>(key, value);
        else if (key == "c5")
            e.helpers.c5 = parse_number<double>(key, value);
        else if (key == "c6")
            e.helpers.c6 = parse_number<double>(key, value);
        else if (key == "archive")
            e.archive_enabled = parse_switch(key, value);
        else if (key == "archive-interval")
            e.archive_interval = parse_number<std::size_t>(key, value);
        else if (key == "archive-replacements")
            e.archive_replacements = parse_number<std::size_t>(key, value);
        else if (key == "max-retries")
            e.max_bound_retries = parse_number<std::size_t>(key, value);
        else if (key == "mode") {
            if (value == "smode")
                e.mode = SelectionMode::Dominance;
            else if (value == "greedy")
                e.mode = SelectionMode::Greedy;
            else
                throw std::invalid_argument("mode must be smode or greedy");
        } else if (key == "workers")
            config.workers = parse_number<std::size_t>(key, value);
        else if (key == "out")
            config.output = std::string(value);
        else
            throw std::invalid_argument("unknown config key '" + std::string(key) + "'");
    }
}

void apply_config_file(ExperimentConfig& config, const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot read config file " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    apply_config_text(config, buffer.str());
}

std::uint64_t derive_run_seed(std::uint64_t master_seed, std::string_view problem_id, int run_index) {
    // FNV-1a of the id keeps the derivation stable across standard libraries
    std::uint64_t id_hash = 0xcbf29ce484222325ULL;
    for (char c : problem_id) {
        id_hash ^= static_cast<unsigned char>(c);
        id_hash *= 0x100000001b3ULL;
    }
    std::uint64_t s = mix_seed(master_seed);
    s = mix_seed(s ^ id_hash);
    return mix_seed(s ^ static_cast<std::uint64_t>(run_index));
}

ProblemStatistics summarize(std::string problem, std::string helpers, std::size_t fes,
                            std::span<const std::optional<double>> errors) {
    ProblemStatistics out;
    out.problem = std::move(problem);
    out.helpers = std::move(helpers);
    out.fes = fes;
    out.runs = static_cast<int>(errors.size());
    if (errors.empty())
        return out;

    std::vector<std::optional<double>> sorted(errors.begin(), errors.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (!a)
            return false;
        return !b || *a < *b;
    });
    out.feasible_runs = static_cast<int>(std::count_if(sorted.begin(), sorted.end(),
                                                       [](const auto& e) { return e.has_value(); }));
    out.best = sorted.front();
    out.median = sorted[(sorted.size() - 1) / 2];
    out.worst = sorted.back();

    if (out.feasible_runs == out.runs) {
        double sum = 0.0;
        for (const auto& e : sorted)
            sum += *e;
        const double mean = sum / static_cast<double>(sorted.size());
        double ss = 0.0;
        for (const auto& e : sorted)
            ss += (*e - mean) * (*e - mean);
        out.mean = mean;
        out.std = std::sqrt(ss / static_cast<double>(sorted.size()));
    }
    return out;
}

std::optional<double> error_value(const RunResult& result, const ConstrainedProblem& problem) {
    if (!result.best_feasible)
        return std::nullopt;
    return result.best_feasible->f - problem.best_known;
}

std::vector<ProblemStatistics> run_experiment(const ExperimentConfig& config) {
    config.validate();
    const std::size_t runs = static_cast<std::size_t>(config.runs);
    const std::size_t tasks = config.problems.size() * runs;
    std::vector<std::optional<double>> errors(tasks);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto worker = [&] {
        for (std::size_t t = next++; t < tasks && !failed; t = next++) {
            try {
                const auto& problem = find_problem(config.problems[t / runs]).problem;
                const int run_index = static_cast<int>(t % runs);
                const RunResult result =
                    run(problem, config.engine, derive_run_seed(config.master_seed, problem.id, run_index));
                errors[t] = error_value(result, problem);
            } catch (...) {
                if (!failed.exchange(true))
                    failure = std::current_exception();
            }
        }
    };
    {
        const std::size_t count = std::max<std::size_t>(1, std::min(config.workers, tasks));
        std::vector<std::jthread> pool;
        for (std::size_t i = 1; i < count; ++i)
            pool.emplace_back(worker);
        worker();
    }
    if (failure)
        std::rethrow_exception(failure);

    std::vector<ProblemStatistics> out;
    const std::string label = config.engine.helpers.label();
    for (std::size_t p = 0; p < config.problems.size(); ++p) {
        const std::span<const std::optional<double>> slice(errors.data() + p * runs, runs);
        out.push_back(summarize(config.problems[p], label, config.engine.fes_max, slice));
    }
    return out;
}

std::string format_value(const std::optional<double>& value) {
    if (!value)
        return "NA";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4E", *value);
    return buf;
}

std::string format_csv(std::span<const ProblemStatistics> stats) {
    std::string out(csv_header);
    out += '\n';
    for (const auto& s : stats) {
        out += s.problem + ',' + s.helpers + ',' + std::to_string(s.fes) + ',' + std::to_string(s.runs);
        for (const auto* v : {&s.best, &s.median, &s.worst, &s.mean, &s.std})
            out += ',' + format_value(*v);
        out += ',' + std::to_string(s.feasible_runs) + '\n';
    }
    return out;
}

void write_csv(std::span<const ProblemStatistics> stats, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << format_csv(stats);
    if (!out.flush())
        throw std::runtime_error("failed writing " + path.string());
}

std::vector<ProblemStatistics> parse_csv(std::string_view text) {
    std::vector<ProblemStatistics> out;
    auto lines = split(text, '\n');
    if (lines.empty() || trim(lines.front()) != csv_header)
        throw std::invalid_argument("results file does not start with the expected header");
    auto cell = [](std::string_view key, std::string_view text) -> std::optional<double> {
        if (text == "NA")
            return std::nullopt;
        return parse_number<double>(key, text);
    };
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::string_view line = trim(lines[i]);
        if (line.empty())
            continue;
        const auto f = split(line, ',');
        if (f.size() != 10)
            throw std::invalid_argument("results line " + std::to_string(i + 1) + ": expected 10 columns");
        ProblemStatistics s;
        s.problem = std::string(f[0]);
        s.helpers = std::string(f[1]);
        s.fes = parse_number<std::size_t>("fes", f[2]);
        s.runs = parse_number<int>("runs", f[3]);
        s.best = cell("best", f[4]);
        s.median = cell("median", f[5]);
        s.worst = cell("worst", f[6]);
        s.mean = cell("mean", f[7]);
        s.std = cell("std", f[8]);
        s.feasible_runs = parse_number<int>("feasible_runs", f[9]);
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<ProblemStatistics> read_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::invalid_argument("cannot read " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_csv(buffer.str());
}

ComparisonReport compare_report(std::span<const ProblemStatistics> a,
                                std::span<const ProblemStatistics> b) {
    auto ids = [](std::span<const ProblemStatistics> s) {
        std::vector<std::string> out;
        for (const auto& row : s)
            out.push_back(row.problem);
        std::sort(out.begin(), out.end());
        return out;
    };
    if (ids(a) != ids(b))
        throw std::invalid_argument("compare: result sets cover different problems");

    ComparisonReport report;
    report.label_a = a.empty() ? "A" : a.front().helpers;
    report.label_b = b.empty() ? "B" : b.front().helpers;
    for (const auto& ra : a) {
        const auto& rb = *std::find_if(b.begin(), b.end(),
                                       [&](const auto& r) { return r.problem == ra.problem; });
        ComparisonRow row{ra.problem, ra.feasible_runs, rb.feasible_runs, ra.best, rb.best};
        row.feasibility = ra.feasible_runs > rb.feasible_runs   ? Outcome::A
                          : ra.feasible_runs < rb.feasible_runs ? Outcome::B
                                                                : Outcome::Tie;
        if (ra.best && rb.best)
            row.best = *ra.best < *rb.best ? Outcome::A : *rb.best < *ra.best ? Outcome::B : Outcome::Tie;
        else if (ra.best || rb.best)
            row.best = ra.best ? Outcome::A : Outcome::B;
        report.feasible_problems_a += ra.feasible_runs > 0;
        report.feasible_problems_b += rb.feasible_runs > 0;
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::string format_report(const ComparisonReport& report) {
    auto side = [&](Outcome o) -> std::string {
        switch (o) {
        case Outcome::A: return "A";
        case Outcome::B: return "B";
        case Outcome::Tie: return "tie";
        }
        return "?";
    };
    std::ostringstream out;
    out << "A = helpers " << report.label_a << ", B = helpers " << report.label_b << '\n';
    out << "problem  feasible(A)  feasible(B)  best(A)      best(B)      more-feasible  better-best\n";
    for (const auto& r : report.rows) {
        char line[160];
        std::snprintf(line, sizeof line, "%-8s %11d  %11d  %-11s  %-11s  %-13s  %s\n", r.problem.c_str(),
                      r.feasible_a, r.feasible_b, format_value(r.best_a).c_str(),
                      format_value(r.best_b).c_str(), side(r.feasibility).c_str(), side(r.best).c_str());
        out << line;
    }
    out << "problems with a feasible run: A=" << report.feasible_problems_a
        << " B=" << report.feasible_problems_b << '\n';
    out << "(errors are f(best feasible) - f*; mean is the mean error over runs; NA = no feasible solution)\n";
    return out.str();
}

} // namespace smode
