#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

namespace deli {

/// Seedable 64-bit generator with a fixed, platform-independent draw procedure.
///
/// The bit stream is std::mt19937_64, whose output sequence is fixed by the
/// C++ standard. Standard library distributions are not, so the derived draws
/// are defined here:
///   index(m):  r mod m, where r is the next raw output, rejecting
///              r >= 2^64 - (2^64 mod m) to remove modulo bias;
///   uniform(): (r >> 11) * 2^-53, in [0, 1).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform index in [0, m). m must be positive.
    std::uint64_t index(std::uint64_t m) {
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    (std::numeric_limits<std::uint64_t>::max() % m + 1) % m;
        std::uint64_t r = next();
        while (r > limit) r = next();
        return r % m;
    }

    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller (one value per call; the pair's twin is dropped).
    double normal() {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925 * u2);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace deli
