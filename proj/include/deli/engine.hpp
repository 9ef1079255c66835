#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "deli/geometry.hpp"
#include "deli/neighborhood.hpp"

namespace deli {

enum class Mode {
    /// The plain draw loop: one neighbourhood per drawn core line, no
    /// expansion; a line may end up in several clusters.
    Literal,
    /// DBSCAN-style growth through core lines; every line in at most one cluster.
    Expand,
};

inline constexpr int kNoise = 0;

/// One draw of the main loop.
struct TraceEvent {
    std::size_t iteration = 0;
    std::size_t chosen = 0;
    std::size_t neighbours = 0;  ///< |N_U|
    bool core = false;
    std::optional<int> cluster;  ///< id of the cluster opened by this draw

    friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

struct ClusterLabels {
    /// Per line: the first cluster it joined (ids 1..k) or kNoise.
    std::vector<int> assignment;
    /// Every cluster a line joined, in order. Only Literal mode produces more than one.
    std::vector<std::vector<int>> memberships;
    /// Members of cluster id k at index k - 1, ascending.
    std::vector<std::vector<std::size_t>> clusters;
    /// Core status of each line whose neighbour set was computed.
    std::vector<std::optional<bool>> core;
    bool clusters_may_overlap = false;
    std::vector<std::size_t> seed_order;
    std::vector<TraceEvent> trace;
    std::uint64_t relation_evals = 0;

    std::size_t cluster_count() const noexcept { return clusters.size(); }
    std::size_t noise_count() const;
};

struct RunConfig {
    NeighbourhoodSpec spec;
    Mode mode = Mode::Expand;
    std::uint64_t seed = 0;
    /// Worker threads for the relation evaluations of one neighbour set.
    std::size_t threads = 1;
};

/// Relation over line indices 0..n-1: relates(i, j) == lines[i] R lines[j].
using RelationFn = std::function<bool(std::size_t, std::size_t)>;

ClusterLabels run_literal(std::size_t n, const RelationFn& relates, std::size_t cardinality,
                          std::uint64_t seed, std::size_t threads = 1);
ClusterLabels run_expand(std::size_t n, const RelationFn& relates, std::size_t cardinality,
                         std::uint64_t seed, std::size_t threads = 1);

ClusterLabels run_literal(std::span<const SegmentLike> lines, const RunConfig& cfg);
ClusterLabels run_expand(std::span<const SegmentLike> lines, const RunConfig& cfg);
ClusterLabels run(std::span<const SegmentLike> lines, const RunConfig& cfg);

bool is_core(std::size_t i, std::span<const SegmentLike> lines, const NeighbourhoodSpec& spec);

inline std::uint64_t relation_eval_count(const ClusterLabels& run) { return run.relation_evals; }

/// Writes the trace as JSON lines:
/// {"iteration":0,"chosen":3,"neighbours":4,"decision":"cluster","cluster":1}
void write_trace(std::ostream& out, std::span<const TraceEvent> trace);

}  // namespace deli
