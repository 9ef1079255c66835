#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>

#include "deli/data_io.hpp"
#include "deli/error.hpp"

namespace deli {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                    "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#393b79"};
constexpr const char* kNoiseColour = "#b0b0b0";
constexpr double kCanvas = 800.0;
constexpr double kMargin = 20.0;

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

}  // namespace

void write_svg(std::ostream& out, std::span<const SegmentLike> lines, const ClusterLabels& labels) {
    if (labels.assignment.size() != lines.size()) {
        throw DomainError("labels do not match the number of lines");
    }
    double min_x = std::numeric_limits<double>::infinity();
    double min_y = min_x;
    double max_x = -min_x;
    double max_y = -min_x;
    for (const auto& l : lines) {
        if (l.dim() != 2) throw DomainError("SVG output needs 2-D data");
        for (const Point* p : {&l.x(), &l.y()}) {
            min_x = std::min(min_x, (*p)[0]);
            max_x = std::max(max_x, (*p)[0]);
            min_y = std::min(min_y, (*p)[1]);
            max_y = std::max(max_y, (*p)[1]);
        }
    }
    if (lines.empty()) min_x = min_y = 0.0, max_x = max_y = 1.0;
    const double span = std::max({max_x - min_x, max_y - min_y, 1e-12});
    const double scale = (kCanvas - 2.0 * kMargin) / span;
    // SVG's y axis points down.
    auto sx = [&](double x) { return fixed(kMargin + (x - min_x) * scale); };
    auto sy = [&](double y) { return fixed(kCanvas - kMargin - (y - min_y) * scale); };

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kCanvas
        << "\" height=\"" << kCanvas << "\" viewBox=\"0 0 " << kCanvas << ' ' << kCanvas << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // Noise first so clusters draw on top.
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t i = 0; i < lines.size(); ++i) {
            const int id = labels.assignment[i];
            if ((id == kNoise) != (pass == 0)) continue;
            const char* colour = id == kNoise ? kNoiseColour : kPalette[(id - 1) % std::size(kPalette)];
            const auto& l = lines[i];
            if (l.is_degenerate()) {
                out << "<circle cx=\"" << sx(l.x()[0]) << "\" cy=\"" << sy(l.x()[1])
                    << "\" r=\"2\" fill=\"" << colour << "\"/>\n";
            } else {
                out << "<line x1=\"" << sx(l.x()[0]) << "\" y1=\"" << sy(l.x()[1]) << "\" x2=\""
                    << sx(l.y()[0]) << "\" y2=\"" << sy(l.y()[1]) << "\" stroke=\"" << colour
                    << "\" stroke-width=\"1.5\"/>\n";
            }
        }
    }
    out << "</svg>\n";
}

void write_svg(const std::filesystem::path& path, std::span<const SegmentLike> lines,
               const ClusterLabels& labels) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    write_svg(out, lines, labels);
}

}  // namespace deli
