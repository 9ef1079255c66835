#include "deli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "deli/data_io.hpp"
#include "deli/engine.hpp"
#include "deli/error.hpp"
#include "deli/missing_data.hpp"
#include "deli/neighborhood.hpp"
#include "deli/oracle.hpp"

namespace deli::cli {

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Verbosity from DELI_LOG: quiet, info (default) or debug.
class Log {
public:
    explicit Log(std::ostream& err) : err_(err) {
        const char* env = std::getenv("DELI_LOG");
        const std::string level = env ? env : "info";
        level_ = level == "quiet" ? 0 : level == "debug" ? 2 : 1;
    }
    void info(const std::string& msg) const {
        if (level_ >= 1) err_ << msg << '\n';
    }
    void debug(const std::string& msg) const {
        if (level_ >= 2) err_ << "debug: " << msg << '\n';
    }

private:
    std::ostream& err_;
    int level_ = 1;
};

struct ClusterOptions {
    std::string input;
    std::string format = "auto";
    std::string crop;
    std::string config;
    int version = 1;
    std::size_t cardinality = 0;
    std::optional<double> alpha;
    std::string alpha_map;
    std::optional<double> volume;
    std::string profile;
    std::string profiles;
    std::string alpha_mode = "literal";
    std::string mode = "expand";
    std::uint64_t seed = 0;
    std::size_t search_samples = 64;
    double search_tol = 1e-9;
    std::string trace;
    std::string output;
    std::string svg;
    std::size_t threads = 1;
    std::vector<std::string> axes;
};

Json to_json(const ClusterOptions& o) {
    Json j;
    j["format"] = o.format;
    j["version"] = o.version;
    j["cardinality"] = o.cardinality;
    if (o.alpha) j["alpha"] = *o.alpha;
    if (!o.alpha_map.empty()) j["alpha_map"] = o.alpha_map;
    if (o.volume) j["volume"] = *o.volume;
    if (!o.profile.empty()) j["profile"] = o.profile;
    if (!o.profiles.empty()) j["profiles"] = o.profiles;
    j["alpha_mode"] = o.alpha_mode;
    j["mode"] = o.mode;
    j["seed"] = o.seed;
    j["search_samples"] = o.search_samples;
    j["search_tol"] = o.search_tol;
    if (!o.axes.empty()) j["axes"] = o.axes;
    if (!o.crop.empty()) j["crop"] = o.crop;
    return j;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<double> parse_numbers(const std::string& text, std::size_t expected, const std::string& what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string field;
    while (std::getline(ss, field, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(field, &used));
            if (used != field.size()) throw std::invalid_argument(field);
        } catch (const std::exception&) {
            throw UsageError(what + ": invalid number '" + field + "'");
        }
    }
    if (out.size() != expected) {
        throw UsageError(what + " needs " + std::to_string(expected) + " comma-separated numbers");
    }
    return out;
}

/// `AXIS=uniform:LO,HI`, `AXIS=LO,HI` or `AXIS=LO,HI@<profile in t>`; AXIS is
/// 1-based or `all`. Returns domains for `dims` axes.
AxisDomains parse_axes(const std::vector<std::string>& specs, std::size_t dims) {
    AxisDomains out;
    for (const std::string& spec : specs) {
        const auto eq = spec.find('=');
        if (eq == std::string::npos) throw UsageError("axis '" + spec + "' must look like AXIS=LO,HI");
        const std::string axis = spec.substr(0, eq);
        std::string window = spec.substr(eq + 1);
        Profile templ = Profile::uniform(0.0, 1.0);
        if (const auto at = window.find('@'); at != std::string::npos) {
            templ = Profile::parse(window.substr(at + 1));
            window = window.substr(0, at);
        }
        if (window.rfind("uniform:", 0) == 0) window = window.substr(8);
        const auto range = parse_numbers(window, 2, "axis window");
        std::vector<std::size_t> targets;
        if (axis == "all" || axis == "*") {
            for (std::size_t k = 0; k < dims; ++k) targets.push_back(k);
        } else {
            std::size_t k = 0;
            try {
                k = std::stoul(axis);
            } catch (const std::exception&) {
                throw UsageError("axis index '" + axis + "' is not a number");
            }
            if (k < 1 || k > dims) {
                throw UsageError("axis " + axis + " outside 1.." + std::to_string(dims));
            }
            targets.push_back(k - 1);
        }
        for (std::size_t k : targets) out[k] = AxisDomain(k, range[0], range[1], templ);
    }
    return out;
}

struct Dataset {
    std::vector<SegmentLike> lines;
    std::vector<std::string> ids;
    std::vector<std::optional<Profile>> lifted_profiles;  // empty unless lifted
};

std::string detect_format(const std::string& path, const std::string& requested) {
    if (requested != "auto") return requested;
    const std::string ext = fs::path(path).extension().string();
    if (ext == ".geojson" || ext == ".json") return "geojson";
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    return header.find("x1") != std::string::npos ? "segments" : "points";
}

Dataset load_dataset(const ClusterOptions& o, const Log& log) {
    Dataset d;
    const std::string format = detect_format(o.input, o.format);
    if (format == "segments" || format == "csv") {
        const auto records = load_segments_csv(o.input);
        d.lines = to_segments(records);
        for (const auto& r : records) d.ids.push_back(r.id);
    } else if (format == "geojson") {
        GeoJsonOptions gopts;
        if (!o.crop.empty()) {
            const auto b = parse_numbers(o.crop, 4, "--crop");
            gopts.crop = BoundingBox{b[0], b[1], b[2], b[3]};
        }
        const auto result = load_geojson(o.input, gopts);
        for (const auto& w : result.warnings) log.info("warning: " + w);
        d.lines = to_segments(result.records);
        for (const auto& r : result.records) d.ids.push_back(r.id);
    } else if (format == "points") {
        const auto points = load_points_csv(o.input);
        const std::size_t dims = points.empty() ? 0 : points.front().values.size();
        auto lifted = lift_dataset(points, parse_axes(o.axes, dims));
        d.lines = std::move(lifted.segments);
        d.ids = std::move(lifted.ids);
        d.lifted_profiles = std::move(lifted.profiles);
    } else {
        throw UsageError("unknown input format '" + format + "'");
    }
    if (d.lines.empty()) throw std::runtime_error("input '" + o.input + "' contains no lines");
    return d;
}

// Checks the per-version parameter rules before any data is touched.
void precheck(const ClusterOptions& o) {
    if (o.cardinality < 1) throw UsageError("--cardinality (c >= 1) is required");
    const bool has_alpha = o.alpha.has_value() || !o.alpha_map.empty();
    const bool has_profile = !o.profile.empty() || !o.profiles.empty() || !o.axes.empty();
    switch (o.version) {
        case 1:
            if (!has_alpha) throw UsageError("version 1 requires --alpha");
            if (o.volume) throw UsageError("version 1 takes --alpha, not --volume");
            if (!o.profile.empty() || !o.profiles.empty()) {
                throw UsageError("version 1 takes no profile");
            }
            break;
        case 2:
            if (!o.volume) throw UsageError("version 2 requires --volume");
            if (has_alpha) throw UsageError("version 2 derives alpha from --volume; drop --alpha");
            if (!has_profile) throw UsageError("version 2 requires a profile (--profile or --profiles)");
            break;
        case 3:
            if (!has_alpha) throw UsageError("version 3 requires --alpha");
            if (o.volume) throw UsageError("version 3 takes --alpha, not --volume");
            if (!has_profile) throw UsageError("version 3 requires a profile (--profile or --profiles)");
            break;
        default:
            throw UsageError("--version must be 1, 2 or 3");
    }
    if (o.mode != "literal" && o.mode != "expand") throw UsageError("--mode must be literal or expand");
    if (o.alpha_mode != "literal" && o.alpha_mode != "exact-volume") {
        throw UsageError("--alpha-mode must be literal or exact-volume");
    }
    if (o.threads < 1) throw UsageError("--threads must be at least 1");
}

NeighbourhoodSpec build_spec(const ClusterOptions& o, const Dataset& d) {
    NeighbourhoodSpec spec;
    spec.version = static_cast<Version>(o.version);
    spec.cardinality = o.cardinality;
    spec.volume = o.volume;
    spec.alpha_mode = o.alpha_mode == "exact-volume" ? AlphaMode::ExactVolume : AlphaMode::Literal;
    spec.search_samples = o.search_samples;
    spec.search_tol = o.search_tol;
    const std::size_t n = d.lines.size();

    if (!o.alpha_map.empty()) {
        const auto doc = nlohmann::json::parse(read_file(o.alpha_map));
        const auto& map = doc.at("alphas");
        std::vector<double> alphas(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (map.contains(d.ids[i])) {
                alphas[i] = map[d.ids[i]].get<double>();
            } else if (o.alpha) {
                alphas[i] = *o.alpha;
            } else {
                throw ConfigError("no alpha for line '" + d.ids[i] + "'");
            }
        }
        spec.alpha = PerLine<double>(std::move(alphas));
    } else if (o.alpha) {
        spec.alpha = PerLine<double>(*o.alpha);
    }

    if (spec.version != Version::V1) {
        std::vector<std::optional<Profile>> per_line(n);
        if (!d.lifted_profiles.empty()) per_line = d.lifted_profiles;
        if (!o.profiles.empty()) {
            const auto map = load_profile_map(o.profiles);
            for (std::size_t i = 0; i < n; ++i) {
                if (const auto it = map.find(d.ids[i]); it != map.end()) per_line[i] = it->second;
            }
        }
        if (!o.profile.empty()) {
            const Profile fallback = Profile::parse(o.profile);
            for (auto& p : per_line) {
                if (!p) p = fallback;
            }
        }
        spec.profile = PerLine<std::optional<Profile>>(std::move(per_line));
    }
    spec.validate(n);
    return spec;
}

// Fills every option not given on the command line from the JSON config.
void apply_config(ClusterOptions& o, CLI::App& app, const Log& log) {
    if (o.config.empty()) return;
    const auto doc = nlohmann::json::parse(read_file(o.config));
    if (!doc.is_object()) throw UsageError("config file must hold a JSON object");
    auto given = [&](const std::string& flag) { return app.get_option(flag)->count() > 0; };
    auto take = [&]<class T>(const char* key, const std::string& flag, T& field) {
        if (doc.contains(key) && !given(flag)) field = doc[key].get<T>();
    };
    auto take_opt = [&](const char* key, const std::string& flag, std::optional<double>& field) {
        if (doc.contains(key) && !given(flag)) field = doc[key].get<double>();
    };
    take("format", "--format", o.format);
    take("crop", "--crop", o.crop);
    take("version", "--version", o.version);
    take("cardinality", "--cardinality", o.cardinality);
    take_opt("alpha", "--alpha", o.alpha);
    take("alpha_map", "--alpha-map", o.alpha_map);
    take_opt("volume", "--volume", o.volume);
    take("profile", "--profile", o.profile);
    take("profiles", "--profiles", o.profiles);
    take("alpha_mode", "--alpha-mode", o.alpha_mode);
    take("mode", "--mode", o.mode);
    take("seed", "--seed", o.seed);
    take("search_samples", "--search-samples", o.search_samples);
    take("search_tol", "--search-tol", o.search_tol);
    take("threads", "--threads", o.threads);
    take("axes", "--axis", o.axes);
    take("trace", "--trace", o.trace);
    take("output", "--output", o.output);
    take("svg", "--svg", o.svg);
    log.debug("config loaded from " + o.config);
}

int cmd_cluster(const ClusterOptions& o, bool mode_given, std::ostream& out, const Log& log) {
    precheck(o);
    if (!mode_given) {
        log.info("note: clustering in expand mode; --mode literal runs the one-hop variant without expansion");
    }
    const Dataset d = load_dataset(o, log);
    RunConfig cfg;
    cfg.spec = build_spec(o, d);
    cfg.mode = o.mode == "literal" ? Mode::Literal : Mode::Expand;
    cfg.seed = o.seed;
    cfg.threads = o.threads;

    const auto start = std::chrono::steady_clock::now();
    const ClusterLabels labels = run(d.lines, cfg);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    log.debug("clustered " + std::to_string(d.lines.size()) + " lines in " +
              std::to_string(elapsed.count()) + " s");

    RunMetadata meta{to_json(o), o.seed, cfg.mode};
    if (!o.output.empty()) write_results(labels, d.ids, meta, o.output);
    if (!o.svg.empty()) write_svg(fs::path(o.svg), d.lines, labels);
    if (!o.trace.empty()) {
        std::ofstream trace(o.trace);
        if (!trace) throw std::runtime_error("cannot write '" + o.trace + "'");
        write_trace(trace, labels.trace);
    }
    const ResultCounts counts = result_counts(labels);
    out << "k=" << counts.k << " outliers=" << counts.outliers << " evals=" << labels.relation_evals
        << '\n';
    return kExitOk;
}

struct GenOptions {
    std::string kind;
    std::optional<std::size_t> count;
    std::uint64_t seed = 0;
    std::string output;
};

int cmd_gen(const GenOptions& g, std::ostream& out) {
    std::ostringstream buf;
    if (g.kind == "convex") {
        write_segments_csv(buf, gen_convex(g.count.value_or(150), g.seed));
    } else if (g.kind == "doughnut") {
        write_segments_csv(buf, gen_doughnut(g.count.value_or(400), g.seed));
    } else if (g.kind == "sporulation") {
        SporulationOptions opts;
        opts.count = g.count.value_or(475);
        write_points_csv(buf, gen_sporulation(opts, g.seed).points);
    } else {
        throw UsageError("unknown dataset '" + g.kind + "' (convex, doughnut, sporulation)");
    }
    if (g.output.empty()) {
        out << buf.str();
    } else {
        std::ofstream file(g.output);
        if (!file) throw std::runtime_error("cannot write '" + g.output + "'");
        file << buf.str();
    }
    return kExitOk;
}

struct LiftOptions {
    std::string input;
    std::vector<std::string> axes;
    std::string output;
    std::string profiles_out;
};

int cmd_lift(const LiftOptions& l, std::ostream& out) {
    const auto points = load_points_csv(l.input);
    const std::size_t dims = points.empty() ? 0 : points.front().values.size();
    const LiftedDataset lifted = lift_dataset(points, parse_axes(l.axes, dims));
    const fs::path in(l.input);
    const fs::path seg_path = l.output.empty()
                                  ? in.parent_path() / (in.stem().string() + ".segments.csv")
                                  : fs::path(l.output);
    const fs::path prof_path = l.profiles_out.empty()
                                   ? in.parent_path() / (in.stem().string() + ".profiles.json")
                                   : fs::path(l.profiles_out);
    std::vector<SegmentRecord> records;
    std::map<std::string, Profile> profiles;
    std::size_t incomplete = 0;
    for (std::size_t i = 0; i < lifted.segments.size(); ++i) {
        records.push_back({lifted.ids[i], lifted.segments[i].x(), lifted.segments[i].y()});
        if (lifted.profiles[i]) {
            profiles.emplace(lifted.ids[i], *lifted.profiles[i]);
            ++incomplete;
        }
    }
    save_segments_csv(seg_path, records);
    save_profile_map(prof_path, profiles);
    out << "lifted " << records.size() << " records (" << incomplete << " with a missing value) -> "
        << seg_path.string() << ", " << prof_path.string() << '\n';
    return kExitOk;
}

struct PlotOptions {
    std::string input;
    std::string result;
    std::string svg;
};

int cmd_plot(const PlotOptions& p) {
    const auto records = load_segments_csv(p.input);
    std::vector<std::string> ids;
    for (const auto& r : records) ids.push_back(r.id);
    const auto doc = nlohmann::json::parse(read_file(p.result));
    write_svg(fs::path(p.svg), to_segments(records), labels_from_document(doc, ids));
    return kExitOk;
}

struct BenchOptions {
    std::vector<std::size_t> sizes{250, 500, 1000};
    std::size_t repeats = 3;
    bool verify = false;
    std::uint64_t seed = 1;
};

// n unit segments 10 apart on the x axis: with alpha = 1 only the line itself
// is related, so every line is drawn and scanned once.
std::vector<SegmentLike> isolated_segments(std::size_t n) {
    std::vector<SegmentLike> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = 10.0 * static_cast<double>(i);
        out.push_back(SegmentLike::segment(Point{x, 0.0}, Point{x + 1.0, 0.0}));
    }
    return out;
}

int cmd_bench(const BenchOptions& b, std::ostream& out) {
    double previous = 0.0;
    bool ok = true;
    for (std::size_t n : b.sizes) {
        const auto lines = isolated_segments(n);
        RunConfig cfg;
        cfg.spec.version = Version::V1;
        cfg.spec.cardinality = 2;
        cfg.spec.alpha = PerLine<double>(1.0);
        cfg.mode = Mode::Literal;
        cfg.seed = b.seed;
        double best = std::numeric_limits<double>::infinity();
        std::uint64_t evals = 0;
        for (std::size_t r = 0; r < std::max<std::size_t>(b.repeats, 1); ++r) {
            const auto start = std::chrono::steady_clock::now();
            const ClusterLabels labels = run_literal(lines, cfg);
            const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
            best = std::min(best, dt.count());
            evals = labels.relation_evals;
        }
        const std::uint64_t bound = static_cast<std::uint64_t>(n) * n;
        ok = ok && evals <= bound;
        out << "n=" << n << " evals=" << evals << " n^2=" << bound << " seconds=" << std::fixed
            << std::setprecision(6) << best;
        if (previous > 0.0) out << " ratio=" << std::setprecision(2) << best / previous;
        out << std::defaultfloat << '\n';
        previous = best;
    }
    if (b.verify) {
        const auto records = gen_doughnut(120, b.seed);
        const auto lines = to_segments(records);
        NeighbourhoodSpec spec;
        spec.cardinality = 5;
        spec.alpha = PerLine<double>(12.0);
        const Neighbourhood hood(lines, spec);
        const auto matrix = oracle::relation_matrix(hood);
        std::size_t mismatches = 0;
        for (std::size_t i = 0; i < lines.size(); ++i) {
            std::vector<std::size_t> row;
            for (std::size_t j = 0; j < lines.size(); ++j) {
                if (matrix[i][j]) row.push_back(j);
            }
            if (row != hood.neighbor_set(i)) ++mismatches;
            if (!matrix[i][i]) ++mismatches;
        }
        std::size_t distance_failures = 0;
        for (std::size_t i = 0; i + 1 < lines.size(); i += 2) {
            const double exact = min_distance(lines[i], lines[i + 1]).distance;
            const double grid = oracle::grid_min_distance(lines[i], lines[i + 1], 1e-3);
            const double bound = (length(lines[i]) + length(lines[i + 1])) * 1e-3;
            if (std::abs(exact - grid) > bound + 1e-12) ++distance_failures;
        }
        out << "verify: relation rows mismatched=" << mismatches
            << " distance oracle failures=" << distance_failures << '\n';
        ok = ok && mismatches == 0 && distance_failures == 0;
    }
    return ok ? kExitOk : kExitRuntime;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    const Log log(err);
    CLI::App app{"Density-based clustering of lines and line segments", "deli"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Write a synthetic dataset as CSV");
    gen_cmd->add_option("kind", gen.kind, "convex, doughnut or sporulation")->required();
    gen_cmd->add_option("--count", gen.count, "Number of records");
    gen_cmd->add_option("--seed", gen.seed, "Generator seed");
    gen_cmd->add_option("-o,--output", gen.output, "Output path (stdout when omitted)");

    ClusterOptions cl;
    auto* cl_cmd = app.add_subcommand("cluster", "Cluster lines, segments or points with missing values");
    cl_cmd->add_option("input", cl.input, "segments CSV, GeoJSON or points CSV")->required();
    cl_cmd->add_option("--format", cl.format, "auto, segments, geojson or points");
    cl_cmd->add_option("--crop", cl.crop, "GeoJSON crop box min_x,min_y,max_x,max_y");
    cl_cmd->add_option("--config", cl.config, "JSON config; flags override its values");
    cl_cmd->add_option("--version", cl.version, "Relation version 1, 2 or 3");
    cl_cmd->add_option("-c,--cardinality", cl.cardinality, "Cardinality threshold c");
    cl_cmd->add_option("--alpha", cl.alpha, "Scaling factor alpha (versions 1 and 3)");
    cl_cmd->add_option("--alpha-map", cl.alpha_map, "JSON {\"alphas\": {id: alpha}}");
    cl_cmd->add_option("--volume", cl.volume, "Volume parameter V (version 2)");
    cl_cmd->add_option("--profile", cl.profile, "Profile for lines without one, e.g. normal:0.5,0.01");
    cl_cmd->add_option("--profiles", cl.profiles, "JSON {\"profiles\": {id: profile}}");
    cl_cmd->add_option("--alpha-mode", cl.alpha_mode, "literal or exact-volume (version 2)");
    auto* mode_opt = cl_cmd->add_option("--mode", cl.mode, "expand (default) or literal");
    cl_cmd->add_option("--seed", cl.seed, "Seed for the random draw order");
    cl_cmd->add_option("--search-samples", cl.search_samples, "Grid size of the witness search");
    cl_cmd->add_option("--search-tol", cl.search_tol, "Refinement tolerance of the witness search");
    cl_cmd->add_option("--axis", cl.axes, "Domain of a missing axis: AXIS=uniform:LO,HI");
    cl_cmd->add_option("--trace", cl.trace, "Write the draw trace as JSON lines");
    cl_cmd->add_option("-o,--output", cl.output, "Write the result document (JSON)");
    cl_cmd->add_option("--svg", cl.svg, "Write an SVG plot (2-D data)");
    cl_cmd->add_option("--threads", cl.threads, "Threads for relation evaluation");

    LiftOptions lift_opts;
    auto* lift_cmd = app.add_subcommand("lift", "Turn points with one missing value into segments");
    lift_cmd->add_option("input", lift_opts.input, "points CSV")->required();
    lift_cmd->add_option("--axis", lift_opts.axes, "AXIS=uniform:LO,HI (1-based axis or 'all')");
    lift_cmd->add_option("-o,--output", lift_opts.output, "Segments CSV path");
    lift_cmd->add_option("--profiles-out", lift_opts.profiles_out, "Profile map path");

    PlotOptions plot;
    auto* plot_cmd = app.add_subcommand("plot", "Render a clustering result as SVG");
    plot_cmd->add_option("input", plot.input, "segments CSV")->required();
    plot_cmd->add_option("--result", plot.result, "Result document")->required();
    plot_cmd->add_option("--svg", plot.svg, "Output SVG path")->required();

    BenchOptions bench;
    auto* bench_cmd = app.add_subcommand("bench", "Worst-case relation counts and timings");
    bench_cmd->add_option("--sizes", bench.sizes, "Dataset sizes")->delimiter(',');
    bench_cmd->add_option("--repeats", bench.repeats, "Timing repetitions per size");
    bench_cmd->add_option("--seed", bench.seed, "Seed");
    bench_cmd->add_flag("--verify", bench.verify, "Cross-check against the brute-force oracles");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*gen_cmd) return cmd_gen(gen, out);
        if (*cl_cmd) {
            apply_config(cl, *cl_cmd, log);
            return cmd_cluster(cl, mode_opt->count() > 0 || !cl.config.empty(), out, log);
        }
        if (*lift_cmd) return cmd_lift(lift_opts, out);
        if (*plot_cmd) return cmd_plot(plot);
        if (*bench_cmd) return cmd_bench(bench, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ConfigError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitUsage;
}

}  // namespace deli::cli
