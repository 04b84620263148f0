#include "smode/harness.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

using smode::ProblemStatistics;
using Errors = std::vector<std::optional<double>>;

namespace {

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

smode::ExperimentConfig tiny_experiment() {
    smode::ExperimentConfig c;
    c.problems = {"g06", "g08", "g12"};
    c.runs = 3;
    c.master_seed = 17;
    c.engine.mu = 30;
    c.engine.fes_max = 600;
    return c;
}

} // namespace

TEST_CASE("summary with every run feasible") {
    const Errors e{3.0, 1.0, 2.0, 5.0};
    const auto s = smode::summarize("g08", "4", 5000, e);
    CHECK(s.runs == 4);
    CHECK(s.feasible_runs == 4);
    CHECK(s.best == 1.0);
    CHECK(s.median == 2.0); // lower middle of four
    CHECK(s.worst == 5.0);
    CHECK(s.mean == doctest::Approx(2.75));
    CHECK(s.std == doctest::Approx(std::sqrt(2.1875)));
}

TEST_CASE("summary NA semantics") {
    SUBCASE("mixed feasibility") {
        const Errors e{std::nullopt, 4.0, 2.0};
        const auto s = smode::summarize("g06", "2", 5000, e);
        CHECK(s.best == 2.0);
        CHECK(s.median == 4.0);
        CHECK_FALSE(s.worst);
        CHECK_FALSE(s.mean);
        CHECK_FALSE(s.std);
        CHECK(s.feasible_runs == 2);
    }
    SUBCASE("no feasible run") {
        const Errors e(25, std::nullopt);
        const auto s = smode::summarize("g01", "2", 5000, e);
        CHECK_FALSE(s.best);
        CHECK_FALSE(s.median);
        CHECK_FALSE(s.worst);
        CHECK(s.feasible_runs == 0);
    }
    SUBCASE("median of 25 is the 13th order statistic") {
        Errors e;
        for (int i = 25; i >= 1; --i)
            e.push_back(i <= 13 ? std::optional<double>(i) : std::nullopt);
        const auto s = smode::summarize("g11", "4", 5000, e);
        CHECK(s.median == 13.0);
        CHECK_FALSE(s.worst);
    }
}

TEST_CASE("statistics ordering holds for random patterns") {
    smode::RngStream rng(5);
    for (int rep = 0; rep < 500; ++rep) {
        Errors e;
        const std::size_t n = 1 + rng.index(25);
        for (std::size_t i = 0; i < n; ++i)
            e.push_back(rng.uniform() < 0.3 ? std::nullopt : std::optional<double>(rng.uniform() * 10));
        const auto s = smode::summarize("g", "2", 1, e);
        auto le = [](const std::optional<double>& a, const std::optional<double>& b) {
            return !b || (a && *a <= *b);
        };
        REQUIRE(le(s.best, s.median));
        REQUIRE(le(s.median, s.worst));
        REQUIRE(s.feasible_runs >= 0);
        REQUIRE(s.feasible_runs <= s.runs);
        REQUIRE(s.mean.has_value() == (s.feasible_runs == s.runs));
    }
}

TEST_CASE("value formatting") {
    CHECK(smode::format_value(std::nullopt) == "NA");
    CHECK(smode::format_value(898.80) == "8.9880E+02");
    CHECK(smode::format_value(1.1730e-3) == "1.1730E-03");
    CHECK(smode::format_value(0.0) == "0.0000E+00");
    CHECK(smode::format_value(-2.5) == "-2.5000E+00");
}

TEST_CASE("csv layout") {
    CHECK(smode::format_csv({}) == "problem,helpers,fes,runs,best,median,worst,mean,std,feasible_runs\n");

    ProblemStatistics g06{"g06", "2", 5000, 25, 898.80, 2727.8, std::nullopt, std::nullopt, std::nullopt, 14};
    const auto text = smode::format_csv(std::vector{g06});
    CHECK(text.ends_with("\ng06,2,5000,25,8.9880E+02,2.7278E+03,NA,NA,NA,14\n"));

    const auto back = smode::parse_csv(text);
    REQUIRE(back.size() == 1);
    CHECK(back[0].problem == "g06");
    CHECK(back[0].best == doctest::Approx(898.8));
    CHECK_FALSE(back[0].worst);
    CHECK(back[0].feasible_runs == 14);
    CHECK(smode::format_csv(back) == text);

    CHECK_THROWS_AS(smode::parse_csv("nonsense\n"), std::invalid_argument);
    CHECK_THROWS_AS(
        smode::parse_csv("problem,helpers,fes,runs,best,median,worst,mean,std,feasible_runs\ng01,2\n"),
        std::invalid_argument);
}

TEST_CASE("run seeds do not collide") {
    std::set<std::uint64_t> seeds;
    for (const auto& id : smode::parse_problem_list("all"))
        for (int run = 0; run < 100; ++run)
            seeds.insert(smode::derive_run_seed(1, id, run));
    CHECK(seeds.size() == 1300);
    CHECK(smode::derive_run_seed(1, "g01", 0) != smode::derive_run_seed(2, "g01", 0));
    CHECK(smode::derive_run_seed(1, "g01", 0) == smode::derive_run_seed(1, "g01", 0));
}

TEST_CASE("comparison report") {
    const std::vector a{
        ProblemStatistics{"g01", "2", 5000, 25, {}, {}, {}, {}, {}, 0},
        ProblemStatistics{"g06", "2", 5000, 25, 900.0, 2700.0, {}, {}, {}, 14},
    };
    const std::vector b{
        ProblemStatistics{"g06", "4", 5000, 25, 330.0, 1300.0, {}, {}, {}, 20},
        ProblemStatistics{"g01", "4", 5000, 25, {}, {}, {}, {}, {}, 0},
    };
    const auto r = smode::compare_report(a, b);
    CHECK(r.label_a == "2");
    CHECK(r.label_b == "4");
    REQUIRE(r.rows.size() == 2);
    CHECK(r.rows[0].feasibility == smode::Outcome::Tie);
    CHECK(r.rows[0].best == smode::Outcome::Tie);
    CHECK(r.rows[1].feasibility == smode::Outcome::B);
    CHECK(r.rows[1].best == smode::Outcome::B);
    CHECK(r.feasible_problems_a == 1);
    CHECK(r.feasible_problems_b == 1);
    CHECK(smode::format_report(r).find("A=1 B=1") != std::string::npos);

    const auto self = smode::compare_report(a, a);
    for (const auto& row : self.rows) {
        CHECK(row.feasibility == smode::Outcome::Tie);
        CHECK(row.best == smode::Outcome::Tie);
    }
    CHECK_THROWS_AS(smode::compare_report(a, std::vector{b[0]}), std::invalid_argument);
}

TEST_CASE("config text") {
    smode::ExperimentConfig c;
    smode::apply_config_text(c, "# protocol\nproblems = g02,g04..g05\nhelpers=6\nruns=3\nseed=9\n"
                                "mu=50\nlambda=5\nF=0.5\nCr=0.9\ndelta=0.001\nc4=2\nc5=20\nc6=200\n"
                                "archive=on\narchive-interval=7\narchive-replacements=4\nmode=greedy\n"
                                "workers=2\nfes=900\nout=r.csv\n");
    CHECK(c.problems == std::vector<std::string>{"g02", "g04", "g05"});
    CHECK(c.engine.helpers.size() == 6);
    CHECK(c.runs == 3);
    CHECK(c.master_seed == 9);
    CHECK(c.engine.mu == 50);
    CHECK(c.engine.lambda == 5);
    CHECK(c.engine.F == 0.5);
    CHECK(c.engine.Cr == 0.9);
    CHECK(c.engine.helpers.delta == 0.001);
    CHECK(c.engine.helpers.c4 == 2);
    CHECK(c.engine.helpers.c6 == 200);
    CHECK(c.engine.archive_enabled);
    CHECK(c.engine.archive_interval == 7);
    CHECK(c.engine.archive_replacements == 4);
    CHECK(c.engine.mode == smode::SelectionMode::Greedy);
    CHECK(c.workers == 2);
    CHECK(c.engine.fes_max == 900);
    CHECK(c.output == "r.csv");

    // later text overrides earlier text; helpers keep the coefficients
    smode::apply_config_text(c, "helpers=2\nruns=4");
    CHECK(c.engine.helpers.size() == 2);
    CHECK(c.engine.helpers.c4 == 2);
    CHECK(c.runs == 4);

    CHECK_THROWS_AS(smode::apply_config_text(c, "bogus=1"), std::invalid_argument);
    CHECK_THROWS_AS(smode::apply_config_text(c, "runs=many"), std::invalid_argument);
    CHECK_THROWS_AS(smode::apply_config_text(c, "archive=maybe"), std::invalid_argument);
    CHECK_THROWS_AS(smode::apply_config_text(c, "problems=g31"), std::invalid_argument);
    CHECK_THROWS_AS(smode::apply_config_text(c, "helpers=5"), std::invalid_argument);
    CHECK_THROWS_AS(smode::apply_config_text(c, "runs"), std::invalid_argument);
}

TEST_CASE("experiment validation") {
    auto c = tiny_experiment();
    c.runs = 0;
    CHECK_THROWS_AS(smode::run_experiment(c), std::invalid_argument);
    c = tiny_experiment();
    c.problems = {"g77"};
    CHECK_THROWS(smode::run_experiment(c));
}

TEST_CASE("experiments are reproducible and independent of worker count") {
    auto c = tiny_experiment();
    const auto serial = smode::format_csv(smode::run_experiment(c));
    c.workers = 4;
    const auto parallel = smode::format_csv(smode::run_experiment(c));
    CHECK(serial == parallel);

    const auto dir = std::filesystem::temp_directory_path() / "smode_harness_test";
    std::filesystem::create_directories(dir);
    const auto stats = smode::run_experiment(c);
    smode::write_csv(stats, dir / "a.csv");
    smode::write_csv(smode::run_experiment(c), dir / "b.csv");
    CHECK(slurp(dir / "a.csv") == slurp(dir / "b.csv"));
    CHECK(smode::read_csv(dir / "a.csv").size() == 3);
    CHECK_THROWS(smode::write_csv(stats, dir / "missing" / "x.csv"));
    std::filesystem::remove_all(dir);

    for (const auto& s : stats) {
        CHECK(s.runs == 3);
        CHECK(s.fes == 600);
        CHECK(s.helpers == "4");
    }
}
