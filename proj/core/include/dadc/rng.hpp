#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace dadc {

// Deterministic random source for generators and noise injection.  All
// derived draws are pinned here (rather than using distribution classes)
// so identical seeds give bitwise-identical datasets on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Integer in [0, n); n must be >= 1.
    std::uint64_t bounded(std::uint64_t n) {
        auto r = static_cast<std::uint64_t>(uniform() * static_cast<double>(n));
        return r >= n ? n - 1 : r;
    }

    // One Box-Muller pair of independent standard normals.
    std::pair<double, double> normal2() {
        double u1 = 1.0 - uniform(); // (0, 1]: keeps the log finite
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double th = 2.0 * M_PI * u2;
        return {r * std::cos(th), r * std::sin(th)};
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(bounded(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // `count` distinct indices drawn from [0, n), returned sorted.
    std::vector<std::size_t> sample_indices(std::size_t n, std::size_t count);

private:
    std::mt19937_64 eng_;
};

} // namespace dadc
