#include "deli/data_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "deli/error.hpp"

namespace deli {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    while (true) {
        const auto pos = line.find(sep);
        out.push_back(trim(line.substr(0, pos)));
        if (pos == std::string_view::npos) break;
        line.remove_prefix(pos + 1);
    }
    return out;
}

bool iequals(std::string_view a, std::string_view b) {
    return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
               return std::tolower(static_cast<unsigned char>(x)) ==
                      std::tolower(static_cast<unsigned char>(y));
           });
}

double parse_coordinate(std::string_view field, std::size_t line_no) {
    std::string_view text = field;
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
        throw ParseError(line_no, "not a number: '" + std::string(field) + "'");
    }
    if (!std::isfinite(value)) {
        throw ParseError(line_no, "non-finite coordinate '" + std::string(field) + "'");
    }
    return value;
}

std::string format_coordinate(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Reads lines, skipping blank ones; tracks 1-based line numbers.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::string& line) {
        while (std::getline(in_, line)) {
            ++line_no_;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!trim(line).empty()) return true;
        }
        return false;
    }

    std::size_t line_no() const noexcept { return line_no_; }

private:
    std::istream& in_;
    std::size_t line_no_ = 0;
};

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    return out;
}

std::string read_all(const std::filesystem::path& path) {
    std::ifstream in = open_input(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

std::vector<SegmentLike> to_segments(std::span<const SegmentRecord> records) {
    std::vector<SegmentLike> out;
    out.reserve(records.size());
    for (const auto& r : records) out.push_back(r.segment());
    return out;
}

std::vector<SegmentRecord> parse_segments_csv(std::istream& in) {
    LineReader reader(in);
    std::string line;
    if (!reader.next(line)) throw ParseError(0, "empty segments file");
    const auto header = split(line, ',');
    if (header.size() < 3 || header.size() % 2 == 0 || !iequals(header[0], "id")) {
        throw ParseError(reader.line_no(), "header must be id,x1..xn,y1..yn");
    }
    const std::size_t dim = (header.size() - 1) / 2;
    for (std::size_t k = 0; k < dim; ++k) {
        const std::string xk = "x" + std::to_string(k + 1);
        const std::string yk = "y" + std::to_string(k + 1);
        if (!iequals(header[1 + k], xk) || !iequals(header[1 + dim + k], yk)) {
            throw ParseError(reader.line_no(), "header must be id,x1..xn,y1..yn");
        }
    }
    std::vector<SegmentRecord> out;
    while (reader.next(line)) {
        const auto fields = split(line, ',');
        if (fields.size() != header.size()) {
            throw ParseError(reader.line_no(), "expected " + std::to_string(header.size()) +
                                                   " fields, got " + std::to_string(fields.size()));
        }
        std::vector<double> x(dim);
        std::vector<double> y(dim);
        for (std::size_t k = 0; k < dim; ++k) {
            x[k] = parse_coordinate(fields[1 + k], reader.line_no());
            y[k] = parse_coordinate(fields[1 + dim + k], reader.line_no());
        }
        out.push_back({std::string(fields[0]), Point(std::move(x)), Point(std::move(y))});
    }
    return out;
}

std::vector<SegmentRecord> load_segments_csv(const std::filesystem::path& path) {
    std::ifstream in = open_input(path);
    return parse_segments_csv(in);
}

void write_segments_csv(std::ostream& out, std::span<const SegmentRecord> records) {
    const std::size_t dim = records.empty() ? 2 : records.front().dim();
    out << "id";
    for (std::size_t k = 1; k <= dim; ++k) out << ",x" << k;
    for (std::size_t k = 1; k <= dim; ++k) out << ",y" << k;
    out << '\n';
    for (const auto& r : records) {
        if (r.dim() != dim) throw DomainError("mixed dimensions in segment records");
        out << r.id;
        for (std::size_t k = 0; k < dim; ++k) out << ',' << format_coordinate(r.x[k]);
        for (std::size_t k = 0; k < dim; ++k) out << ',' << format_coordinate(r.y[k]);
        out << '\n';
    }
}

void save_segments_csv(const std::filesystem::path& path, std::span<const SegmentRecord> records) {
    std::ofstream out = open_output(path);
    write_segments_csv(out, records);
}

std::vector<IncompletePoint> parse_points_csv(std::istream& in) {
    LineReader reader(in);
    std::string line;
    if (!reader.next(line)) throw ParseError(0, "empty points file");
    const char sep = line.find(',') == std::string::npos && line.find('\t') != std::string::npos
                         ? '\t'
                         : ',';
    const auto header = split(line, sep);
    if (header.size() < 2) throw ParseError(reader.line_no(), "header must be id,v1..vn");
    const std::size_t dim = header.size() - 1;
    std::vector<IncompletePoint> out;
    while (reader.next(line)) {
        const auto fields = split(line, sep);
        if (fields.size() != header.size()) {
            throw ParseError(reader.line_no(), "expected " + std::to_string(header.size()) +
                                                   " fields, got " + std::to_string(fields.size()));
        }
        IncompletePoint p;
        p.id = std::string(fields[0]);
        p.values.resize(dim);
        for (std::size_t k = 0; k < dim; ++k) {
            const std::string_view f = fields[1 + k];
            if (f.empty() || iequals(f, "NA")) continue;
            p.values[k] = parse_coordinate(f, reader.line_no());
        }
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<IncompletePoint> load_points_csv(const std::filesystem::path& path) {
    std::ifstream in = open_input(path);
    return parse_points_csv(in);
}

void write_points_csv(std::ostream& out, std::span<const IncompletePoint> points) {
    const std::size_t dim = points.empty() ? 1 : points.front().values.size();
    out << "id";
    for (std::size_t k = 1; k <= dim; ++k) out << ",v" << k;
    out << '\n';
    for (const auto& p : points) {
        if (p.values.size() != dim) throw DomainError("mixed dimensions in point records");
        out << p.id;
        for (const auto& v : p.values) out << ',' << (v ? format_coordinate(*v) : std::string("NA"));
        out << '\n';
    }
}

void save_points_csv(const std::filesystem::path& path, std::span<const IncompletePoint> points) {
    std::ofstream out = open_output(path);
    write_points_csv(out, points);
}

std::map<std::string, Profile> parse_profile_map(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(0, std::string("profile map: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("profiles") || !doc["profiles"].is_object()) {
        throw ParseError(0, "profile map must be {\"profiles\": {id: profile}}");
    }
    std::map<std::string, Profile> out;
    for (const auto& [id, value] : doc["profiles"].items()) {
        if (!value.is_string()) throw ParseError(0, "profile for '" + id + "' must be a string");
        out.emplace(id, Profile::parse(value.get<std::string>()));
    }
    return out;
}

std::map<std::string, Profile> load_profile_map(const std::filesystem::path& path) {
    return parse_profile_map(read_all(path));
}

void save_profile_map(const std::filesystem::path& path, const std::map<std::string, Profile>& profiles) {
    nlohmann::ordered_json doc;
    doc["profiles"] = nlohmann::ordered_json::object();
    for (const auto& [id, p] : profiles) doc["profiles"][id] = p.to_string();
    std::ofstream out = open_output(path);
    out << doc.dump(2) << '\n';
}

GeoJsonResult parse_geojson(std::string_view text, const GeoJsonOptions& options) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(0, std::string("malformed GeoJSON: ") + e.what());
    }
    if (!doc.is_object() || doc.value("type", "") != "FeatureCollection" ||
        !doc.contains("features") || !doc["features"].is_array()) {
        throw ParseError(0, "GeoJSON input must be a FeatureCollection");
    }
    GeoJsonResult out;
    std::size_t cropped = 0;
    auto vertex = [](const nlohmann::json& v) {
        if (!v.is_array() || v.size() < 2 || !v[0].is_number() || !v[1].is_number()) {
            throw ParseError(0, "GeoJSON position must be [x, y]");
        }
        return Point{v[0].get<double>(), v[1].get<double>()};
    };
    const auto& features = doc["features"];
    for (std::size_t f = 0; f < features.size(); ++f) {
        const auto& feature = features[f];
        std::string name = "f" + std::to_string(f);
        if (feature.contains("id") && (feature["id"].is_string() || feature["id"].is_number())) {
            name = feature["id"].is_string() ? feature["id"].get<std::string>() : feature["id"].dump();
        }
        if (!feature.contains("geometry") || !feature["geometry"].is_object()) {
            out.warnings.push_back("feature " + name + " has no geometry; skipped");
            continue;
        }
        const auto& geometry = feature["geometry"];
        const std::string type = geometry.value("type", "");
        std::vector<const nlohmann::json*> parts;
        if (type == "LineString") {
            parts.push_back(&geometry["coordinates"]);
        } else if (type == "MultiLineString") {
            for (const auto& part : geometry["coordinates"]) parts.push_back(&part);
        } else {
            out.warnings.push_back("feature " + name + " has geometry type '" + type + "'; skipped");
            continue;
        }
        std::size_t ordinal = 0;
        for (const nlohmann::json* part : parts) {
            if (!part->is_array()) throw ParseError(0, "feature " + name + ": coordinates must be an array");
            for (std::size_t v = 1; v < part->size(); ++v) {
                Point a = vertex((*part)[v - 1]);
                Point b = vertex((*part)[v]);
                const std::string id = name + "#" + std::to_string(ordinal++);
                if (options.crop && !(options.crop->contains(a[0], a[1]) && options.crop->contains(b[0], b[1]))) {
                    ++cropped;
                    continue;
                }
                out.records.push_back({id, std::move(a), std::move(b)});
            }
        }
    }
    if (options.crop && cropped > 0) {
        out.warnings.push_back(std::to_string(cropped) + " segment(s) outside the crop box dropped");
    }
    if (out.records.empty()) out.warnings.push_back("no line segments found");
    return out;
}

GeoJsonResult load_geojson(const std::filesystem::path& path, const GeoJsonOptions& options) {
    return parse_geojson(read_all(path), options);
}

ResultCounts result_counts(const ClusterLabels& labels) {
    ResultCounts c;
    c.k = labels.clusters.size();
    c.outliers = labels.noise_count();
    if (c.k > 0) {
        c.min = labels.clusters.front().size();
        for (const auto& members : labels.clusters) {
            c.min = std::min(c.min, members.size());
            c.max = std::max(c.max, members.size());
        }
    }
    return c;
}

nlohmann::ordered_json result_document(const ClusterLabels& labels, std::span<const std::string> ids,
                                       const RunMetadata& meta) {
    if (ids.size() != labels.assignment.size()) {
        throw DomainError("id list does not match the number of labelled lines");
    }
    nlohmann::ordered_json doc;
    doc["run"]["config"] = meta.config;
    doc["run"]["seed"] = meta.seed;
    doc["run"]["mode"] = meta.mode == Mode::Literal ? "literal" : "expand";
    doc["run"]["overlapping_clusters"] = labels.clusters_may_overlap;
    doc["run"]["relation_evaluations"] = labels.relation_evals;
    doc["clusters"] = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < labels.clusters.size(); ++k) {
        nlohmann::ordered_json cluster;
        cluster["id"] = k + 1;
        cluster["members"] = nlohmann::ordered_json::array();
        for (std::size_t m : labels.clusters[k]) cluster["members"].push_back(ids[m]);
        doc["clusters"].push_back(std::move(cluster));
    }
    doc["noise"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < labels.assignment.size(); ++i) {
        if (labels.assignment[i] == kNoise) doc["noise"].push_back(ids[i]);
    }
    const ResultCounts c = result_counts(labels);
    doc["counts"] = {{"k", c.k}, {"min", c.min}, {"max", c.max}, {"outliers", c.outliers}};
    return doc;
}

void write_results(const ClusterLabels& labels, std::span<const std::string> ids,
                   const RunMetadata& meta, const std::filesystem::path& path) {
    std::ofstream out = open_output(path);
    out << result_document(labels, ids, meta).dump(2) << '\n';
}

ClusterLabels labels_from_document(const nlohmann::json& doc, std::span<const std::string> ids) {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < ids.size(); ++i) index.emplace(ids[i], i);
    ClusterLabels labels;
    labels.assignment.assign(ids.size(), kNoise);
    labels.memberships.resize(ids.size());
    labels.core.resize(ids.size());
    if (!doc.contains("clusters") || !doc["clusters"].is_array()) {
        throw ParseError(0, "result document has no cluster list");
    }
    for (const auto& cluster : doc["clusters"]) {
        const int id = static_cast<int>(labels.clusters.size()) + 1;
        std::vector<std::size_t> members;
        for (const auto& m : cluster.at("members")) {
            const auto it = index.find(m.get<std::string>());
            if (it == index.end()) throw ParseError(0, "unknown member id '" + m.get<std::string>() + "'");
            members.push_back(it->second);
            labels.memberships[it->second].push_back(id);
        }
        std::sort(members.begin(), members.end());
        labels.clusters.push_back(std::move(members));
    }
    for (std::size_t i = 0; i < ids.size(); ++i) {
        const auto& m = labels.memberships[i];
        labels.assignment[i] = m.empty() ? kNoise : m.front();
        if (m.size() > 1) labels.clusters_may_overlap = true;
    }
    return labels;
}

}  // namespace deli
