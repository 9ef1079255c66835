#include "deli/missing_data.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "deli/error.hpp"

namespace deli {

namespace {

std::string summarise(const std::vector<LiftError::Failure>& failures) {
    std::ostringstream out;
    out << failures.size() << " record(s) cannot be lifted:";
    for (const auto& f : failures) out << "\n  record " << f.index << ": " << f.message;
    return out.str();
}

}  // namespace

AxisDomain::AxisDomain(std::size_t axis_, double lo_, double hi_, Profile profile)
    : axis(axis_), lo(lo_), hi(hi_), profile_template(std::move(profile)) {
    if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi)) {
        throw ConfigError("axis domain needs finite lo < hi");
    }
}

LiftedPoint lift(const IncompletePoint& point, const AxisDomains& domains) {
    std::optional<std::size_t> missing;
    for (std::size_t k = 0; k < point.values.size(); ++k) {
        if (point.values[k]) continue;
        if (missing) {
            throw UnsupportedRecord("record '" + point.id +
                                    "' has more than one missing value; only one is supported");
        }
        missing = k;
    }
    std::vector<double> lo(point.values.size());
    for (std::size_t k = 0; k < lo.size(); ++k) lo[k] = point.values[k].value_or(0.0);

    if (!missing) {
        Point p(lo);
        return {point.id, point.values, std::nullopt, SegmentLike::segment(p, p), std::nullopt};
    }
    const auto domain = domains.find(*missing);
    if (domain == domains.end()) {
        throw ConfigError("record '" + point.id + "' misses axis " + std::to_string(*missing + 1) +
                          " which has no declared domain");
    }
    std::vector<double> hi = lo;
    lo[*missing] = domain->second.lo;
    hi[*missing] = domain->second.hi;
    return {point.id, point.values, missing,
            SegmentLike::segment(Point(std::move(lo)), Point(std::move(hi))),
            domain->second.profile_template};
}

LiftError::LiftError(std::vector<Failure> failures)
    : std::runtime_error(summarise(failures)), failures_(std::move(failures)) {}

LiftedDataset lift_dataset(const std::vector<IncompletePoint>& points, const AxisDomains& domains) {
    LiftedDataset out;
    std::vector<LiftError::Failure> failures;
    const std::size_t dim = points.empty() ? 0 : points.front().values.size();
    for (std::size_t i = 0; i < points.size(); ++i) {
        try {
            if (points[i].values.size() != dim) {
                throw DomainError("record has " + std::to_string(points[i].values.size()) +
                                  " values, expected " + std::to_string(dim));
            }
            LiftedPoint lifted = lift(points[i], domains);
            out.segments.push_back(std::move(lifted.segment));
            out.profiles.push_back(std::move(lifted.profile));
            out.ids.push_back(points[i].id);
        } catch (const std::exception& e) {
            failures.push_back({i, e.what()});
        }
    }
    if (!failures.empty()) throw LiftError(std::move(failures));
    return out;
}

}  // namespace deli
