#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace deli {

/// A point (or displacement) in R^n. Coordinates are always finite.
class Point {
public:
    Point() = default;
    explicit Point(std::vector<double> coords);
    Point(std::initializer_list<double> coords);

    std::size_t dim() const noexcept { return coords_.size(); }
    double operator[](std::size_t i) const { return coords_[i]; }
    std::span<const double> coords() const noexcept { return coords_; }

    friend bool operator==(const Point&, const Point&) = default;

private:
    std::vector<double> coords_;
};

double squared_distance(const Point& a, const Point& b);
double distance(const Point& a, const Point& b);

enum class SegmentKind { Line, Segment };

/// A line or line segment through x and y, parametrised as g(t) = x + (y - x) t
/// with t in R for lines and t in [0, 1] for segments.
///
/// Degenerate segments (x == y) are allowed and behave as a single point;
/// lines need two distinct points.
class SegmentLike {
public:
    static SegmentLike segment(Point x, Point y);
    static SegmentLike line(Point x, Point y);

    const Point& x() const noexcept { return x_; }
    const Point& y() const noexcept { return y_; }
    SegmentKind kind() const noexcept { return kind_; }
    std::size_t dim() const noexcept { return x_.dim(); }

    bool is_segment() const noexcept { return kind_ == SegmentKind::Segment; }
    bool is_degenerate() const noexcept { return x_ == y_; }

    /// Does t lie in the parameter domain (R or [0, 1])?
    bool in_domain(double t) const noexcept;

    /// Squared length of the direction y - x.
    double direction_norm2() const noexcept { return dir_norm2_; }

private:
    SegmentLike(Point x, Point y, SegmentKind kind);

    Point x_;
    Point y_;
    SegmentKind kind_;
    double dir_norm2_ = 0.0;
};

struct ClosestPointResult {
    double t_star = 0.0;
    Point point;
    double distance = 0.0;
};

struct SegmentDistance {
    double distance = 0.0;
    double t1 = 0.0;
    double t2 = 0.0;
};

/// g_l(t). Throws DomainError when t is outside [0, 1] for a segment.
Point param_point(const SegmentLike& l, double t);

/// The unique closest point of l to p (foot of the perpendicular, clamped to
/// the end points for segments).
ClosestPointResult closest_point(const Point& p, const SegmentLike& l);

/// Parameter and squared distance of the closest point, without materialising it.
struct Projection {
    double t_star;
    double distance2;
};
Projection project(std::span<const double> p, const SegmentLike& l);

/// Infimum of |g1(t1) - g2(t2)| over both parameter domains, with the
/// parameters attaining it. For parallel lines, t1 = 0 and its perpendicular
/// partner are returned.
SegmentDistance min_distance(const SegmentLike& l1, const SegmentLike& l2);

/// Euclidean length of a segment. Throws DomainError for lines.
double length(const SegmentLike& l);

}  // namespace deli
