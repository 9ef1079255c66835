#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "deli/geometry.hpp"
#include "deli/neighborhood.hpp"
#include "deli/profile.hpp"

// Brute-force references for testing. Everything here is written against Point
// coordinates only and does not call into the closed-form geometry or the
// witness search it is meant to check.
namespace deli::oracle {

/// Minimum of |g1(t1) - g2(t2)| over the (t1, t2) grid with the given step on
/// [0, 1]^2 (both end points included). An upper bound on the true minimum, at
/// most (|d1| + |d2|) * step above it. Segments only; throws DomainError for lines.
double grid_min_distance(const SegmentLike& l1, const SegmentLike& l2, double step);

/// Dense-scan version of the probabilistic relation: the minimum over an
/// s-grid of d(g2(s), l1) - alpha1 * p1(t*(s)). Negative means related.
/// Segments only.
double dense_min_phi(const SegmentLike& l1, const Profile& p1, double alpha1, const SegmentLike& l2,
                     const Profile* p2, double step);

/// Density of p from Boost.Math distributions (the semi-ellipse written out),
/// sharing no code with Profile::eval.
double reference_pdf(const Profile& p, double t);

/// [F^-1(eps), F^-1(1 - eps)] from Boost.Math quantiles, clipped to the support.
Interval reference_window(const Profile& p, double eps);

/// Solid-of-revolution volume of the (scale * p)-neighbourhood of segment l in
/// R^n, integrated by Boost's adaptive Gauss-Kronrod over reference_window(p, eps).
double reference_volume(const Profile& p, const SegmentLike& l, int n, double scale = 1.0,
                        double eps = kTailEps);

struct DbscanResult {
    std::vector<int> labels;  ///< 0 noise, clusters 1..k
    std::vector<bool> core;
};

/// Textbook DBSCAN with strict `dist < eps` neighbourhoods that
/// include the point itself; a point is core when it has at least minpts neighbours.
DbscanResult reference_dbscan(std::span<const Point> points, double eps, std::size_t minpts);

using RelationMatrix = std::vector<std::vector<bool>>;

/// Exhaustive n^2 evaluation of the relation.
RelationMatrix relation_matrix(const Neighbourhood& hood);

/// Hubert-Arabie adjusted Rand index of two labelings of the same items.
/// Labels are arbitrary integers; noise is treated as one more group.
double adjusted_rand_index(std::span<const int> a, std::span<const int> b);

}  // namespace deli::oracle
