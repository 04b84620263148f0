#include "smode/core.hpp"

#include <doctest.h>

#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

using smode::Bounds;
using smode::RngStream;

TEST_CASE("bounds validation") {
    CHECK_THROWS_AS(Bounds({}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Bounds({0, 0}, {1}), std::invalid_argument);
    CHECK_THROWS_AS(Bounds({1}, {0}), std::invalid_argument);
    CHECK_NOTHROW(Bounds({2}, {2}));
}

TEST_CASE("point_from_unit maps draws onto the box") {
    CHECK(smode::point_from_unit(Bounds({-1}, {1}), std::vector{0.5}) == std::vector{0.0});
    CHECK(smode::point_from_unit(Bounds({2, 3}, {4, 9}), std::vector{0.25, 0.5}) ==
          std::vector{2.5, 6.0});
    CHECK(smode::point_from_unit(Bounds({2, 3}, {4, 9}), std::vector{0.0, 0.0}) ==
          std::vector{2.0, 3.0});
}

TEST_CASE("random_point in a degenerate box ignores the stream") {
    RngStream rng(42);
    for (int i = 0; i < 10; ++i)
        CHECK(smode::random_point(Bounds({0, 0}, {0, 0}), rng) == std::vector{0.0, 0.0});
}

TEST_CASE("clip_check is inclusive") {
    const Bounds unit({0}, {1});
    CHECK(smode::clip_check(std::vector{0.5}, unit));
    CHECK(smode::clip_check(std::vector{1.0}, unit));
    CHECK(smode::clip_check(std::vector{0.0}, unit));
    CHECK_FALSE(smode::clip_check(std::vector{1.0001}, unit));
    CHECK_FALSE(smode::clip_check(std::vector{-1e-300}, unit));
    CHECK_FALSE(smode::clip_check(std::vector<double>{NAN}, unit));
    CHECK_THROWS_AS(smode::clip_check(std::vector{0.5, 0.5}, unit), std::invalid_argument);
}

TEST_CASE("clamp projects coordinate-wise") {
    const Bounds box({0, -1}, {2, 1});
    CHECK(box.clamp(std::vector{2.2, 1.0}) == std::vector{2.0, 1.0});
    CHECK(box.clamp(std::vector{-3.0, -4.0}) == std::vector{0.0, -1.0});
}

TEST_CASE("equal seeds give identical streams") {
    RngStream a(7), b(7), c(8);
    bool differs = false;
    for (int i = 0; i < 1000; ++i) {
        const double x = a.uniform();
        CHECK(x == b.uniform());
        differs |= x != c.uniform();
        CHECK(a.index(13) == b.index(13));
    }
    CHECK(differs);
    CHECK(a == b);
}

TEST_CASE("uniform draws stay in [0,1)") {
    RngStream rng(1);
    for (int i = 0; i < 100000; ++i) {
        const double u = rng.uniform();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
    }
}

TEST_CASE("random_point mean is near the box midpoint") {
    const Bounds box({-3, 10, 0}, {5, 11, 100});
    RngStream rng(2024);
    constexpr int draws = 100000;
    std::vector<double> sum(3, 0.0);
    for (int i = 0; i < draws; ++i) {
        const auto x = smode::random_point(box, rng);
        REQUIRE(box.contains(x));
        for (int d = 0; d < 3; ++d)
            sum[d] += x[d];
    }
    for (std::size_t d = 0; d < 3; ++d) {
        const double width = box.upper(d) - box.lower(d);
        const double se = width / std::sqrt(12.0) / std::sqrt(double(draws));
        const double mid = 0.5 * (box.lower(d) + box.upper(d));
        CHECK(std::abs(sum[d] / draws - mid) < 3.0 * se);
    }
}

TEST_CASE("index draws cover the range evenly") {
    RngStream rng(5);
    std::vector<int> counts(6, 0);
    constexpr int draws = 60000;
    for (int i = 0; i < draws; ++i)
        ++counts[rng.index(6)];
    // chi-square with 5 dof; 20.5 is the 0.999 quantile
    double chi2 = 0.0;
    for (int c : counts)
        chi2 += (c - draws / 6.0) * (c - draws / 6.0) / (draws / 6.0);
    CHECK(chi2 < 20.5);
    CHECK_THROWS_AS(rng.index(0), std::invalid_argument);
}

TEST_CASE("sample_without_replacement returns distinct indices") {
    RngStream rng(9);
    for (int rep = 0; rep < 200; ++rep) {
        const auto s = rng.sample_without_replacement(20, 8);
        REQUIRE(s.size() == 8);
        std::set<std::size_t> unique(s.begin(), s.end());
        CHECK(unique.size() == 8);
        CHECK(*unique.rbegin() < 20);
    }
    CHECK(rng.sample_without_replacement(5, 5).size() == 5);
    CHECK_THROWS_AS(rng.sample_without_replacement(3, 4), std::invalid_argument);
}

TEST_CASE("mix_seed separates neighbouring inputs") {
    std::set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < 10000; ++i)
        seen.insert(smode::mix_seed(i));
    CHECK(seen.size() == 10000);
}
