#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace smode {

using DecisionVector = std::vector<double>;

/// Axis-aligned box [lower, upper], inclusive on both ends.
class Bounds {
public:
    Bounds(std::vector<double> lower, std::vector<double> upper);

    std::size_t dimension() const noexcept { return lower_.size(); }
    double lower(std::size_t i) const { return lower_[i]; }
    double upper(std::size_t i) const { return upper_[i]; }
    std::span<const double> lower() const noexcept { return lower_; }
    std::span<const double> upper() const noexcept { return upper_; }

    bool contains(std::span<const double> x) const;
    DecisionVector clamp(std::span<const double> x) const;

private:
    std::vector<double> lower_;
    std::vector<double> upper_;
};

/// Seeded pseudo-random stream. Single owner; copy it only to fork an
/// identical replay.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }

    /// Uniform double in [0, 1) built from the top 53 bits of one draw.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform index in [0, n). n must be positive.
    std::size_t index(std::size_t n);

    /// k distinct indices drawn uniformly from [0, n), in draw order.
    std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k);

    /// Fisher-Yates shuffle of an index list.
    void shuffle(std::span<std::size_t> items);

    friend bool operator==(const RngStream&, const RngStream&) = default;

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; used to derive well-separated child seeds.
std::uint64_t mix_seed(std::uint64_t value) noexcept;

/// Maps unit draws u[i] in [0,1) onto the box: lower + (upper - lower) * u.
DecisionVector point_from_unit(const Bounds& bounds, std::span<const double> unit);

/// Uniform random point in the box, one draw per coordinate.
DecisionVector random_point(const Bounds& bounds, RngStream& rng);

/// True iff every coordinate lies inside the box. Throws std::invalid_argument
/// on dimension mismatch.
bool clip_check(std::span<const double> x, const Bounds& bounds);

} // namespace smode
