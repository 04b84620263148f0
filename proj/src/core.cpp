#include "smode/core.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace smode {

Bounds::Bounds(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_.empty() || lower_.size() != upper_.size())
        throw std::invalid_argument("bounds: lower and upper must have equal, non-zero length");
    for (std::size_t i = 0; i < lower_.size(); ++i) {
        if (!(lower_[i] <= upper_[i]))
            throw std::invalid_argument("bounds: lower > upper in dimension " + std::to_string(i));
    }
}

bool Bounds::contains(std::span<const double> x) const {
    return clip_check(x, *this);
}

DecisionVector Bounds::clamp(std::span<const double> x) const {
    if (x.size() != dimension())
        throw std::invalid_argument("bounds: dimension mismatch");
    DecisionVector out(x.begin(), x.end());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = std::clamp(out[i], lower_[i], upper_[i]);
    return out;
}

std::size_t RngStream::index(std::size_t n) {
    if (n == 0)
        throw std::invalid_argument("rng: index range must be non-empty");
    std::uniform_int_distribution<std::size_t> dist(0, n - 1);
    return dist(engine_);
}

std::vector<std::size_t> RngStream::sample_without_replacement(std::size_t n, std::size_t k) {
    if (k > n)
        throw std::invalid_argument("rng: sample larger than population");
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i)
        pool[i] = i;
    // partial Fisher-Yates: the first k slots hold the sample
    for (std::size_t i = 0; i < k; ++i)
        std::swap(pool[i], pool[i + index(n - i)]);
    pool.resize(k);
    return pool;
}

void RngStream::shuffle(std::span<std::size_t> items) {
    for (std::size_t i = items.size(); i > 1; --i)
        std::swap(items[i - 1], items[index(i)]);
}

std::uint64_t mix_seed(std::uint64_t value) noexcept {
    value += 0x9e3779b97f4a7c15ULL;
    value = (value ^ (value >> 30)) * 0xbf58476d1ce4e5b9ULL;
    value = (value ^ (value >> 27)) * 0x94d049bb133111ebULL;
    return value ^ (value >> 31);
}

DecisionVector point_from_unit(const Bounds& bounds, std::span<const double> unit) {
    if (unit.size() != bounds.dimension())
        throw std::invalid_argument("point_from_unit: dimension mismatch");
    DecisionVector x(unit.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        x[i] = bounds.lower(i) + (bounds.upper(i) - bounds.lower(i)) * unit[i];
    return x;
}

DecisionVector random_point(const Bounds& bounds, RngStream& rng) {
    std::vector<double> unit(bounds.dimension());
    for (double& u : unit)
        u = rng.uniform();
    return point_from_unit(bounds, unit);
}

bool clip_check(std::span<const double> x, const Bounds& bounds) {
    if (x.size() != bounds.dimension())
        throw std::invalid_argument("clip_check: dimension mismatch");
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] >= bounds.lower(i) && x[i] <= bounds.upper(i)))
            return false;
    }
    return true;
}

} // namespace smode
