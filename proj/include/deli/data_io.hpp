#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "deli/engine.hpp"
#include "deli/geometry.hpp"
#include "deli/missing_data.hpp"
#include "deli/profile.hpp"

namespace deli {

struct SegmentRecord {
    std::string id;
    Point x;
    Point y;

    std::size_t dim() const noexcept { return x.dim(); }
    SegmentLike segment() const { return SegmentLike::segment(x, y); }

    friend bool operator==(const SegmentRecord&, const SegmentRecord&) = default;
};

std::vector<SegmentLike> to_segments(std::span<const SegmentRecord> records);

// --- segments CSV: header `id,x1..xn,y1..yn` -------------------------------

std::vector<SegmentRecord> parse_segments_csv(std::istream& in);
std::vector<SegmentRecord> load_segments_csv(const std::filesystem::path& path);
/// Coordinates are written with 17 significant digits, so a reload is exact.
void write_segments_csv(std::ostream& out, std::span<const SegmentRecord> records);
void save_segments_csv(const std::filesystem::path& path, std::span<const SegmentRecord> records);

// --- points with missing values: header `id,v1..vn` --------------------------
// Comma or tab separated; an empty field or `NA` (any case) is missing.

std::vector<IncompletePoint> parse_points_csv(std::istream& in);
std::vector<IncompletePoint> load_points_csv(const std::filesystem::path& path);
void write_points_csv(std::ostream& out, std::span<const IncompletePoint> points);
void save_points_csv(const std::filesystem::path& path, std::span<const IncompletePoint> points);

// --- per-line profiles: {"profiles": {"<id>": "<family:params>", ...}} -------

std::map<std::string, Profile> parse_profile_map(std::string_view text);
std::map<std::string, Profile> load_profile_map(const std::filesystem::path& path);
void save_profile_map(const std::filesystem::path& path, const std::map<std::string, Profile>& profiles);

// --- GeoJSON -----------------------------------------------------------------

struct BoundingBox {
    double min_x;
    double min_y;
    double max_x;
    double max_y;

    bool contains(double px, double py) const noexcept {
        return px >= min_x && px <= max_x && py >= min_y && py <= max_y;
    }
};

struct GeoJsonOptions {
    /// Keep only segments with both end points inside the box.
    std::optional<BoundingBox> crop;
};

struct GeoJsonResult {
    std::vector<SegmentRecord> records;
    std::vector<std::string> warnings;
};

/// Splits every LineString / MultiLineString of a FeatureCollection into
/// consecutive-vertex segments with ids `<feature>#<ordinal>`. Other geometry
/// types are skipped with a warning. Throws ParseError on malformed input.
GeoJsonResult parse_geojson(std::string_view text, const GeoJsonOptions& options = {});
GeoJsonResult load_geojson(const std::filesystem::path& path, const GeoJsonOptions& options = {});

// --- results -----------------------------------------------------------------

struct RunMetadata {
    nlohmann::ordered_json config = nlohmann::ordered_json::object();
    std::uint64_t seed = 0;
    Mode mode = Mode::Expand;
};

struct ResultCounts {
    std::size_t k = 0;
    std::size_t min = 0;
    std::size_t max = 0;
    std::size_t outliers = 0;
};

ResultCounts result_counts(const ClusterLabels& labels);

/// ResultDocument: {"run": {...}, "clusters": [{"id", "members"}], "noise": [...], "counts": {...}}.
/// `ids[i]` names line i.
nlohmann::ordered_json result_document(const ClusterLabels& labels, std::span<const std::string> ids,
                                       const RunMetadata& meta);
void write_results(const ClusterLabels& labels, std::span<const std::string> ids,
                   const RunMetadata& meta, const std::filesystem::path& path);

/// Reads the per-line assignment back out of a ResultDocument.
ClusterLabels labels_from_document(const nlohmann::json& doc, std::span<const std::string> ids);

/// SVG 1.1 rendering of 2-D lines, one colour per cluster and noise in grey.
/// Throws DomainError for other dimensions.
void write_svg(std::ostream& out, std::span<const SegmentLike> lines, const ClusterLabels& labels);
void write_svg(const std::filesystem::path& path, std::span<const SegmentLike> lines,
               const ClusterLabels& labels);

// --- synthetic datasets --------------------------------------------------------
// Ids carry the planted group (e.g. `ring-12`).

/// Segments inside four well-separated disks on a 100 x 100 canvas.
std::vector<SegmentRecord> gen_convex(std::size_t count, std::uint64_t seed);

/// Short chords along an annulus around a dense central blob, plus sparse
/// noise segments outside the ring.
std::vector<SegmentRecord> gen_doughnut(std::size_t count, std::uint64_t seed);

struct PlantedPoints {
    std::vector<IncompletePoint> points;
    std::vector<int> truth;  ///< planted cluster 1..k, 0 for noise
};

struct SporulationOptions {
    std::size_t count = 475;
    std::size_t dims = 7;
    std::size_t clusters = 4;
    double noise_fraction = 0.10;
    double missing_fraction = 0.15;
    double spread = 0.15;  ///< per-coordinate standard deviation inside a cluster
    double range = 4.0;    ///< values lie in [-range, range]
};

/// Expression-matrix-like points: Gaussian clusters, uniform noise, and some
/// records with one value removed.
PlantedPoints gen_sporulation(const SporulationOptions& options, std::uint64_t seed);

}  // namespace deli
