#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "deli/geometry.hpp"
#include "deli/profile.hpp"

namespace deli {

/// A record in R^n; std::nullopt marks a missing coordinate.
struct IncompletePoint {
    std::string id;
    std::vector<std::optional<double>> values;
};

/// Domain knowledge for one axis: the range a missing value can take and the
/// density over it, expressed in t in [0, 1] (t = 0 at lo, t = 1 at hi).
struct AxisDomain {
    std::size_t axis = 0;  ///< 0-based
    double lo = 0.0;
    double hi = 1.0;
    Profile profile_template = Profile::uniform(0.0, 1.0);

    AxisDomain() = default;
    AxisDomain(std::size_t axis, double lo, double hi, Profile profile = Profile::uniform(0.0, 1.0));
};

using AxisDomains = std::map<std::size_t, AxisDomain>;

struct LiftedPoint {
    std::string source_id;
    std::vector<std::optional<double>> original;
    std::optional<std::size_t> missing_axis;
    SegmentLike segment;
    std::optional<Profile> profile;
};

/// A record the lifting cannot handle, e.g. two missing coordinates.
class UnsupportedRecord : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Complete points become degenerate segments without a profile; a point with
/// one missing coordinate k becomes the segment spanning the axis-k domain.
/// Throws UnsupportedRecord for two or more missing values and ConfigError when
/// the missing axis has no declared domain.
LiftedPoint lift(const IncompletePoint& point, const AxisDomains& domains);

struct LiftedDataset {
    std::vector<SegmentLike> segments;
    std::vector<std::optional<Profile>> profiles;
    std::vector<std::string> ids;  ///< ids[i] is the source record of segments[i]
};

/// Thrown by lift_dataset; lists every failing record.
class LiftError : public std::runtime_error {
public:
    struct Failure {
        std::size_t index;
        std::string message;
    };
    explicit LiftError(std::vector<Failure> failures);
    const std::vector<Failure>& failures() const noexcept { return failures_; }

private:
    std::vector<Failure> failures_;
};

LiftedDataset lift_dataset(const std::vector<IncompletePoint>& points, const AxisDomains& domains);

}  // namespace deli
