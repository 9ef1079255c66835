#include <doctest.h>

#include <json.hpp>

#include <fstream>
#include <regex>
#include <sstream>

#include "deli/cli.hpp"
#include "support.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "deli");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = deli::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::size_t line_count(const fs::path& p) {
    std::ifstream in(p);
    std::size_t n = 0;
    for (std::string row; std::getline(in, row);) n += !row.empty();
    return n;
}

// k=<k> outliers=<o> from the summary line.
std::pair<int, int> summary(const std::string& out) {
    std::smatch m;
    const std::regex re("k=(\\d+) outliers=(\\d+)");
    REQUIRE(std::regex_search(out, m, re));
    return {std::stoi(m[1]), std::stoi(m[2])};
}

}  // namespace

TEST_CASE("gen and cluster a doughnut") {
    const auto dir = testing::temp_dir("cli_doughnut");
    const auto csv = (dir / "d.csv").string();
    REQUIRE(invoke({"gen", "doughnut", "--count", "400", "--seed", "7", "-o", csv}).code == 0);
    CHECK(line_count(csv) == 401);

    const auto five = invoke({"cluster", csv, "--version", "1", "--alpha", "12", "-c", "5", "--seed", "7"});
    REQUIRE(five.code == 0);
    const auto [k5, o5] = summary(five.out);
    CHECK(k5 >= 2);

    const auto eight = invoke({"cluster", csv, "--version", "1", "--alpha", "12", "-c", "8", "--seed", "7"});
    REQUIRE(eight.code == 0);
    CHECK(summary(eight.out).second >= o5);
}

TEST_CASE("parameter rules give usage errors") {
    const auto dir = testing::temp_dir("cli_rules");
    const auto csv = (dir / "d.csv").string();
    REQUIRE(invoke({"gen", "convex", "--count", "20", "-o", csv}).code == 0);
    CHECK(invoke({"cluster", csv, "--version", "2", "--volume", "3", "-c", "2"}).code == 2);
    CHECK(invoke({"cluster", csv, "--version", "1", "-c", "2"}).code == 2);
    CHECK(invoke({"cluster", csv, "--version", "1", "--alpha", "1", "--volume", "2", "-c", "2"}).code == 2);
    CHECK(invoke({"cluster", csv, "--version", "3", "--alpha", "1", "-c", "2"}).code == 2);
    CHECK(invoke({"cluster", csv, "--version", "1", "--alpha", "1", "-c", "2", "--mode", "sideways"}).code == 2);
    CHECK(invoke({"cluster", csv, "--version", "4", "--alpha", "1", "-c", "2"}).code == 2);
    CHECK(invoke({"cluster", csv, "--version", "1", "--alpha", "-1", "-c", "2"}).code == 2);
    CHECK(invoke({"cluster", "--bogus"}).code == 2);
    CHECK(invoke({"cluster", (dir / "missing.csv").string(), "--version", "1", "--alpha", "1", "-c", "2"}).code == 1);

    const auto v2 = invoke({"cluster", csv, "--version", "2", "--volume", "3", "-c", "2", "--profile", "uniform:0,1"});
    CHECK(v2.code == 0);
}

TEST_CASE("output is deterministic per seed") {
    const auto dir = testing::temp_dir("cli_seed");
    const auto csv = (dir / "d.csv").string();
    REQUIRE(invoke({"gen", "convex", "--count", "150", "--seed", "3", "-o", csv}).code == 0);
    auto cluster_to = [&](const std::string& name, const std::string& seed) {
        const auto path = (dir / name).string();
        const auto r = invoke({"cluster", csv, "--version", "1", "--alpha", "6", "-c", "4", "--mode", "literal",
                               "--seed", seed, "-o", path, "--trace", path + ".trace"});
        REQUIRE(r.code == 0);
        return slurp(path) + slurp(path + ".trace");
    };
    CHECK(cluster_to("a.json", "11") == cluster_to("b.json", "11"));
    const auto doc = nlohmann::json::parse(slurp(dir / "a.json"));
    CHECK(doc["run"]["seed"] == 11);
    CHECK(doc["run"]["mode"] == "literal");
    CHECK(doc.contains("counts"));

    // Both gen outputs for the same seed match byte for byte.
    const auto other = (dir / "e.csv").string();
    REQUIRE(invoke({"gen", "convex", "--count", "150", "--seed", "3", "-o", other}).code == 0);
    CHECK(slurp(csv) == slurp(other));
}

TEST_CASE("config values yield to flags") {
    const auto dir = testing::temp_dir("cli_config");
    const auto csv = (dir / "d.csv").string();
    REQUIRE(invoke({"gen", "doughnut", "--count", "400", "--seed", "7", "-o", csv}).code == 0);
    const auto config = dir / "c.json";
    std::ofstream(config) << R"({"version": 1, "alpha": 12, "cardinality": 5, "seed": 7, "mode": "expand"})";

    const auto from_config = invoke({"cluster", csv, "--config", config.string()});
    const auto from_flags = invoke({"cluster", csv, "--version", "1", "--alpha", "12", "-c", "5", "--seed", "7"});
    REQUIRE(from_config.code == 0);
    CHECK(summary(from_config.out) == summary(from_flags.out));

    const auto override = invoke({"cluster", csv, "--config", config.string(), "-c", "1000"});
    REQUIRE(override.code == 0);
    CHECK(summary(override.out) == std::pair<int, int>{0, 400});
}

TEST_CASE("lift writes segments and profiles") {
    const auto dir = testing::temp_dir("cli_lift");
    const auto pts = dir / "spores.csv";
    REQUIRE(invoke({"gen", "sporulation", "--seed", "5", "-o", pts.string()}).code == 0);
    const auto r = invoke({"lift", pts.string(), "--axis", "all=-4,4"});
    REQUIRE(r.code == 0);
    CHECK(line_count(dir / "spores.segments.csv") == 476);
    const auto profiles = nlohmann::json::parse(slurp(dir / "spores.profiles.json"));
    CHECK(profiles["profiles"].size() == 71);

    CHECK(invoke({"lift", pts.string()}).code != 0);

    const auto clustered = invoke({"cluster", pts.string(), "--version", "3", "--alpha", "0.6", "-c", "7",
                                   "--axis", "all=-4,4", "--seed", "1"});
    REQUIRE(clustered.code == 0);
    CHECK(summary(clustered.out).first >= 1);
}

TEST_CASE("plot and bench") {
    const auto dir = testing::temp_dir("cli_plot");
    const auto csv = (dir / "d.csv").string();
    const auto result = (dir / "r.json").string();
    const auto svg = (dir / "r.svg").string();
    REQUIRE(invoke({"gen", "doughnut", "--count", "400", "-o", csv}).code == 0);
    REQUIRE(invoke({"cluster", csv, "--version", "1", "--alpha", "12", "-c", "5", "-o", result}).code == 0);
    REQUIRE(invoke({"plot", csv, "--result", result, "--svg", svg}).code == 0);
    CHECK(slurp(svg).find("</svg>") != std::string::npos);

    const auto bench = invoke({"bench", "--sizes", "10,20", "--repeats", "1"});
    REQUIRE(bench.code == 0);
    CHECK(bench.out.find("n=10 evals=100 n^2=100") != std::string::npos);
    CHECK(bench.out.find("n=20 evals=400 n^2=400") != std::string::npos);
}
