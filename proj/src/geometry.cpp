#include "deli/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "deli/error.hpp"

namespace deli {

namespace {

void require_same_dim(std::size_t a, std::size_t b) {
    if (a != b) {
        throw DomainError("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

std::vector<double> direction(const SegmentLike& l) {
    const auto x = l.x().coords();
    const auto y = l.y().coords();
    std::vector<double> d(x.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = y[i] - x[i];
    return d;
}

struct Candidate {
    double dist2;
    double t1;
    double t2;
};

}  // namespace

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw DomainError("point must have at least one coordinate");
    for (double c : coords_) {
        if (!std::isfinite(c)) throw DomainError("point coordinates must be finite");
    }
}

Point::Point(std::initializer_list<double> coords) : Point(std::vector<double>(coords)) {}

double squared_distance(const Point& a, const Point& b) {
    require_same_dim(a.dim(), b.dim());
    double acc = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return acc;
}

double distance(const Point& a, const Point& b) { return std::sqrt(squared_distance(a, b)); }

SegmentLike::SegmentLike(Point x, Point y, SegmentKind kind)
    : x_(std::move(x)), y_(std::move(y)), kind_(kind) {
    require_same_dim(x_.dim(), y_.dim());
    dir_norm2_ = squared_distance(x_, y_);
}

SegmentLike SegmentLike::segment(Point x, Point y) {
    return SegmentLike(std::move(x), std::move(y), SegmentKind::Segment);
}

SegmentLike SegmentLike::line(Point x, Point y) {
    if (x == y) throw DomainError("a line needs two distinct points");
    return SegmentLike(std::move(x), std::move(y), SegmentKind::Line);
}

bool SegmentLike::in_domain(double t) const noexcept {
    if (!std::isfinite(t)) return false;
    return kind_ == SegmentKind::Line || (t >= 0.0 && t <= 1.0);
}

Point param_point(const SegmentLike& l, double t) {
    if (!l.in_domain(t)) {
        throw DomainError("parameter " + std::to_string(t) + " outside the segment domain [0, 1]");
    }
    const auto x = l.x().coords();
    const auto y = l.y().coords();
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = x[i] + (y[i] - x[i]) * t;
    return Point(std::move(out));
}

Projection project(std::span<const double> p, const SegmentLike& l) {
    require_same_dim(p.size(), l.dim());
    const auto x = l.x().coords();
    const auto y = l.y().coords();
    const double norm2 = l.direction_norm2();
    double t = 0.0;
    double acc = 0.0;
    if (norm2 > 0.0) {
        for (std::size_t i = 0; i < p.size(); ++i) acc += (p[i] - x[i]) * (y[i] - x[i]);
        t = acc / norm2;
        if (l.is_segment()) t = std::clamp(t, 0.0, 1.0);
    }
    double d2 = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double r = p[i] - (x[i] + t * (y[i] - x[i]));
        d2 += r * r;
    }
    return {t, d2};
}

ClosestPointResult closest_point(const Point& p, const SegmentLike& l) {
    const Projection proj = project(p.coords(), l);
    ClosestPointResult out;
    out.t_star = proj.t_star;
    out.point = param_point(l, proj.t_star);
    out.distance = std::sqrt(proj.distance2);
    return out;
}

SegmentDistance min_distance(const SegmentLike& l1, const SegmentLike& l2) {
    require_same_dim(l1.dim(), l2.dim());
    const auto x1 = l1.x().coords();
    const auto x2 = l2.x().coords();
    const std::vector<double> d1 = direction(l1);
    const std::vector<double> d2 = direction(l2);
    const std::size_t n = x1.size();

    // f(s, t) = |r + s d1 - t d2|^2 with r = x1 - x2.
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0, e = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = x1[i] - x2[i];
        a += d1[i] * d1[i];
        b += d1[i] * d2[i];
        c += d2[i] * d2[i];
        d += d1[i] * r;
        e += d2[i] * r;
    }
    auto eval2 = [&](double s, double t) {
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double v = (x1[i] + s * d1[i]) - (x2[i] + t * d2[i]);
            acc += v * v;
        }
        return acc;
    };
    auto finish = [](const Candidate& best) {
        return SegmentDistance{std::sqrt(best.dist2), best.t1, best.t2};
    };

    const double det = a * c - b * b;
    const bool parallel = a == 0.0 || c == 0.0 || det <= 1e-12 * a * c;
    if (!parallel) {
        const double s = (b * e - c * d) / det;
        const double t = (a * e - b * d) / det;
        if (l1.in_domain(s) && l2.in_domain(t)) return finish({eval2(s, t), s, t});
    }

    // The quadratic is convex, so a constrained minimum lies on a finite edge
    // of the parameter domain; each edge is a point-to-line/segment problem.
    Candidate best{std::numeric_limits<double>::infinity(), 0.0, 0.0};
    auto consider = [&best](const Candidate& cand) {
        if (cand.dist2 < best.dist2) best = cand;
    };
    std::vector<double> scratch(n);
    if (l1.is_segment()) {
        for (double s : {0.0, 1.0}) {
            for (std::size_t i = 0; i < n; ++i) scratch[i] = x1[i] + s * d1[i];
            const Projection pr = project(scratch, l2);
            consider({pr.distance2, s, pr.t_star});
        }
    }
    if (l2.is_segment()) {
        for (double t : {0.0, 1.0}) {
            for (std::size_t i = 0; i < n; ++i) scratch[i] = x2[i] + t * d2[i];
            const Projection pr = project(scratch, l1);
            consider({pr.distance2, pr.t_star, t});
        }
    }
    if (!l1.is_segment() && !l2.is_segment()) {
        // Two parallel lines: every point of l1 is equally close.
        const Projection pr = project(x1, l2);
        consider({pr.distance2, 0.0, pr.t_star});
    }
    return finish(best);
}

double length(const SegmentLike& l) {
    if (!l.is_segment()) throw DomainError("length requested for an infinite line");
    return std::sqrt(l.direction_norm2());
}

}  // namespace deli
