#pragma once

// Random generators and small helpers shared by the test programs.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "deli/geometry.hpp"
#include "deli/profile.hpp"

namespace testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }

    deli::Point point(std::size_t n, double lo = -10.0, double hi = 10.0) {
        std::vector<double> c(n);
        for (double& v : c) v = real(lo, hi);
        return deli::Point(std::move(c));
    }

    deli::SegmentLike segment(std::size_t n, double lo = -10.0, double hi = 10.0) {
        deli::Point a = point(n, lo, hi);
        deli::Point b = point(n, lo, hi);
        return deli::SegmentLike::segment(a, b);
    }

    deli::SegmentLike line(std::size_t n, double lo = -10.0, double hi = 10.0) {
        deli::Point a = point(n, lo, hi);
        deli::Point b = point(n, lo, hi);
        while (a == b) b = point(n, lo, hi);
        return deli::SegmentLike::line(a, b);
    }

    /// Random member of the given family index (0..5 in variant order).
    deli::Profile profile_of(std::size_t family) {
        switch (family) {
            case 0: {
                const double a = real(-1.0, 0.5);
                return deli::Profile::uniform(a, a + real(0.1, 2.0));
            }
            case 1: return deli::Profile::normal(real(-0.5, 1.5), real(0.001, 0.5));
            case 2: return deli::Profile::ellipsoidal(real(0.1, 2.0), real(0.1, 3.0));
            case 3: return deli::Profile::gamma(real(1.0, 6.0), real(0.5, 8.0));
            case 4: return deli::Profile::beta(real(1.0, 6.0), real(1.0, 6.0));
            default: return deli::Profile::exponential(real(0.2, 10.0));
        }
    }

    deli::Profile profile() { return profile_of(static_cast<std::size_t>(integer(0, 5))); }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

/// Fresh, empty directory under the system temp dir.
inline std::filesystem::path temp_dir(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / ("deli-test-" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace testing
