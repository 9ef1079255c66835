#include <algorithm>
#include <cmath>
#include <numbers>

#include "deli/data_io.hpp"
#include "deli/error.hpp"
#include "deli/rng.hpp"

namespace deli {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Disk {
    double cx;
    double cy;
    double r;
};

// Uniform point in a disk (sqrt radius for uniform area density).
Point in_disk(Rng& rng, const Disk& d) {
    const double r = d.r * std::sqrt(rng.uniform());
    const double theta = kTwoPi * rng.uniform();
    return Point{d.cx + r * std::cos(theta), d.cy + r * std::sin(theta)};
}

SegmentRecord centred_segment(Rng& rng, std::string id, double mx, double my, double len) {
    const double theta = kTwoPi * rng.uniform();
    const double hx = 0.5 * len * std::cos(theta);
    const double hy = 0.5 * len * std::sin(theta);
    return {std::move(id), Point{mx - hx, my - hy}, Point{mx + hx, my + hy}};
}

}  // namespace

std::vector<SegmentRecord> gen_convex(std::size_t count, std::uint64_t seed) {
    if (count < 1) throw ConfigError("count must be at least 1");
    static constexpr Disk kBlobs[] = {{22, 24, 9}, {76, 20, 9}, {26, 78, 9}, {78, 74, 9}};
    Rng rng(seed);
    std::vector<SegmentRecord> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t b = i % std::size(kBlobs);
        out.push_back({"blob" + std::to_string(b + 1) + "-" + std::to_string(i),
                       in_disk(rng, kBlobs[b]), in_disk(rng, kBlobs[b])});
    }
    return out;
}

std::vector<SegmentRecord> gen_doughnut(std::size_t count, std::uint64_t seed) {
    if (count < 1) throw ConfigError("count must be at least 1");
    constexpr double cx = 50.0;
    constexpr double cy = 50.0;
    Rng rng(seed);
    std::vector<SegmentRecord> out;
    out.reserve(count);
    const std::size_t blob = count / 5;
    const std::size_t noise = count / 10;
    const std::size_t ring = count - blob - noise;
    for (std::size_t i = 0; i < ring; ++i) {
        const double r = rng.uniform(38.0, 44.0);
        const double theta = kTwoPi * rng.uniform();
        const double half = 0.5 * rng.uniform(2.0, 5.0) / r;
        out.push_back({"ring-" + std::to_string(i),
                       Point{cx + r * std::cos(theta - half), cy + r * std::sin(theta - half)},
                       Point{cx + r * std::cos(theta + half), cy + r * std::sin(theta + half)}});
    }
    for (std::size_t i = 0; i < blob; ++i) {
        const Point mid = in_disk(rng, {cx, cy, 8.0});
        out.push_back(centred_segment(rng, "blob-" + std::to_string(i), mid[0], mid[1],
                                      rng.uniform(1.0, 3.0)));
    }
    // Sparse noise outside the ring; the gap stays empty so blob and ring
    // are more than 12 units apart.
    for (std::size_t i = 0; i < noise; ++i) {
        const double r = rng.uniform(54.0, 75.0);
        const double theta = kTwoPi * rng.uniform();
        out.push_back(centred_segment(rng, "noise-" + std::to_string(i), cx + r * std::cos(theta),
                                      cy + r * std::sin(theta), rng.uniform(1.0, 4.0)));
    }
    return out;
}

PlantedPoints gen_sporulation(const SporulationOptions& options, std::uint64_t seed) {
    if (options.count < 1 || options.dims < 2 || options.clusters < 1) {
        throw ConfigError("sporulation generator needs count >= 1, dims >= 2, clusters >= 1");
    }
    Rng rng(seed);
    const double box = 0.6 * options.range;
    // Centres at least 3 apart even with any one axis dropped, so a record
    // missing one value still belongs to a single planted group.
    std::vector<std::vector<double>> centres;
    while (centres.size() < options.clusters) {
        std::vector<double> c(options.dims);
        for (double& v : c) v = rng.uniform(-box, box);
        bool ok = true;
        for (const auto& other : centres) {
            double d2 = 0.0;
            double widest = 0.0;
            for (std::size_t k = 0; k < c.size(); ++k) {
                const double diff2 = (c[k] - other[k]) * (c[k] - other[k]);
                d2 += diff2;
                widest = std::max(widest, diff2);
            }
            ok = ok && d2 - widest >= 9.0;
        }
        if (ok) centres.push_back(std::move(c));
    }

    PlantedPoints out;
    const auto noise = static_cast<std::size_t>(std::llround(options.noise_fraction * options.count));
    for (std::size_t i = 0; i < options.count; ++i) {
        IncompletePoint p;
        int truth = 0;
        p.values.resize(options.dims);
        if (i < options.count - noise) {
            truth = static_cast<int>(i % options.clusters) + 1;
            const auto& c = centres[truth - 1];
            for (std::size_t k = 0; k < options.dims; ++k) {
                const double v = c[k] + options.spread * rng.normal();
                p.values[k] = std::clamp(v, -options.range, options.range);
            }
        } else {
            for (auto& v : p.values) v = rng.uniform(-options.range, options.range);
        }
        p.id = (truth == 0 ? std::string("noise") : "c" + std::to_string(truth)) + "-" + std::to_string(i);
        out.points.push_back(std::move(p));
        out.truth.push_back(truth);
    }
    // Exactly round(missing_fraction * count) records lose one value.
    std::vector<std::size_t> order(options.count);
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.index(i)]);
    const auto missing = static_cast<std::size_t>(std::llround(options.missing_fraction * options.count));
    for (std::size_t i = 0; i < std::min(missing, order.size()); ++i) {
        out.points[order[i]].values[rng.index(options.dims)] = std::nullopt;
    }
    return out;
}

}  // namespace deli
