#include "deli/engine.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <thread>

#include <json.hpp>

#include "deli/rng.hpp"

namespace deli {

namespace {

enum class Status : unsigned char { Unvisited, Visited, Noise };

// Computes {j : relates(i, j)} in ascending order. With several threads the
// flags are filled in parallel and reduced in index order afterwards.
class NeighbourScanner {
public:
    NeighbourScanner(std::size_t n, const RelationFn& relates, std::size_t threads)
        : n_(n), relates_(relates), threads_(std::max<std::size_t>(threads, 1)) {}

    std::vector<std::size_t> scan(std::size_t i) {
        std::vector<std::size_t> out;
        if (threads_ == 1 || n_ < 2 * threads_) {
            for (std::size_t j = 0; j < n_; ++j) {
                if (relates_(i, j)) out.push_back(j);
            }
            evals_ += n_;
            return out;
        }
        std::vector<unsigned char> flags(n_, 0);
        {
            std::vector<std::jthread> workers;
            const std::size_t chunk = (n_ + threads_ - 1) / threads_;
            for (std::size_t w = 0; w < threads_; ++w) {
                const std::size_t lo = w * chunk;
                const std::size_t hi = std::min(n_, lo + chunk);
                workers.emplace_back([&, lo, hi] {
                    for (std::size_t j = lo; j < hi; ++j) flags[j] = relates_(i, j) ? 1 : 0;
                });
            }
        }
        for (std::size_t j = 0; j < n_; ++j) {
            if (flags[j]) out.push_back(j);
        }
        evals_ += n_;
        return out;
    }

    std::uint64_t evaluations() const noexcept { return evals_; }

private:
    std::size_t n_;
    const RelationFn& relates_;
    std::size_t threads_;
    std::uint64_t evals_ = 0;
};

// Unvisited lines in ascending index order; draws pick position rng.index(size).
class UnvisitedPool {
public:
    explicit UnvisitedPool(std::size_t n) : items_(n) {
        for (std::size_t i = 0; i < n; ++i) items_[i] = i;
    }

    bool empty() const noexcept { return items_.empty(); }
    std::size_t draw(Rng& rng) const { return items_[rng.index(items_.size())]; }

    void prune(const std::vector<Status>& status) {
        std::erase_if(items_, [&](std::size_t i) { return status[i] != Status::Unvisited; });
    }

private:
    std::vector<std::size_t> items_;
};

void finalise(ClusterLabels& out) {
    for (std::size_t i = 0; i < out.assignment.size(); ++i) {
        const auto& ids = out.memberships[i];
        out.assignment[i] = ids.empty() ? kNoise : ids.front();
        if (ids.size() > 1) out.clusters_may_overlap = true;
    }
}

ClusterLabels prepare(std::size_t n) {
    ClusterLabels out;
    out.assignment.assign(n, kNoise);
    out.memberships.resize(n);
    out.core.resize(n);
    return out;
}

RelationFn relation_of(const Neighbourhood& hood) {
    return [&hood](std::size_t i, std::size_t j) { return hood.relates(i, j); };
}

}  // namespace

std::size_t ClusterLabels::noise_count() const {
    return static_cast<std::size_t>(std::count(assignment.begin(), assignment.end(), kNoise));
}

ClusterLabels run_literal(std::size_t n, const RelationFn& relates, std::size_t cardinality,
                          std::uint64_t seed, std::size_t threads) {
    ClusterLabels out = prepare(n);
    std::vector<Status> status(n, Status::Unvisited);
    UnvisitedPool pool(n);
    NeighbourScanner scanner(n, relates, threads);
    Rng rng(seed);

    for (std::size_t iteration = 0; !pool.empty(); ++iteration) {
        const std::size_t u = pool.draw(rng);
        out.seed_order.push_back(u);
        std::vector<std::size_t> members = scanner.scan(u);
        const std::size_t count = members.size();
        const bool core = count >= cardinality;
        out.core[u] = core;
        TraceEvent event{iteration, u, count, core, std::nullopt};
        if (core) {
            if (!std::binary_search(members.begin(), members.end(), u)) {
                members.insert(std::upper_bound(members.begin(), members.end(), u), u);
            }
            const int id = static_cast<int>(out.clusters.size()) + 1;
            for (std::size_t m : members) {
                status[m] = Status::Visited;
                out.memberships[m].push_back(id);
            }
            out.clusters.push_back(std::move(members));
            event.cluster = id;
        } else {
            status[u] = Status::Noise;
        }
        out.trace.push_back(event);
        pool.prune(status);
    }
    out.relation_evals = scanner.evaluations();
    finalise(out);
    return out;
}

ClusterLabels run_expand(std::size_t n, const RelationFn& relates, std::size_t cardinality,
                         std::uint64_t seed, std::size_t threads) {
    ClusterLabels out = prepare(n);
    std::vector<Status> status(n, Status::Unvisited);
    UnvisitedPool pool(n);
    NeighbourScanner scanner(n, relates, threads);
    Rng rng(seed);
    constexpr int kUnassigned = -1;
    std::vector<int> owner(n, kUnassigned);

    for (std::size_t iteration = 0; !pool.empty(); ++iteration) {
        const std::size_t u = pool.draw(rng);
        out.seed_order.push_back(u);
        status[u] = Status::Visited;
        const std::vector<std::size_t> seeds = scanner.scan(u);
        const bool core = seeds.size() >= cardinality;
        out.core[u] = core;
        TraceEvent event{iteration, u, seeds.size(), core, std::nullopt};
        if (core) {
            const int id = static_cast<int>(out.clusters.size()) + 1;
            std::vector<std::size_t> members;
            std::deque<std::size_t> frontier;
            auto claim = [&](std::size_t m) {
                if (owner[m] != kUnassigned) return;
                owner[m] = id;
                members.push_back(m);
                frontier.push_back(m);
            };
            claim(u);
            for (std::size_t m : seeds) claim(m);
            while (!frontier.empty()) {
                const std::size_t q = frontier.front();
                frontier.pop_front();
                if (status[q] != Status::Unvisited) continue;
                status[q] = Status::Visited;
                const std::vector<std::size_t> reach = scanner.scan(q);
                const bool q_core = reach.size() >= cardinality;
                out.core[q] = q_core;
                if (!q_core) continue;
                for (std::size_t m : reach) claim(m);
            }
            std::sort(members.begin(), members.end());
            for (std::size_t m : members) out.memberships[m].push_back(id);
            out.clusters.push_back(std::move(members));
            event.cluster = id;
        }
        out.trace.push_back(event);
        pool.prune(status);
    }
    out.relation_evals = scanner.evaluations();
    finalise(out);
    return out;
}

ClusterLabels run_literal(std::span<const SegmentLike> lines, const RunConfig& cfg) {
    const Neighbourhood hood(lines, cfg.spec);
    return run_literal(lines.size(), relation_of(hood), cfg.spec.cardinality, cfg.seed, cfg.threads);
}

ClusterLabels run_expand(std::span<const SegmentLike> lines, const RunConfig& cfg) {
    const Neighbourhood hood(lines, cfg.spec);
    return run_expand(lines.size(), relation_of(hood), cfg.spec.cardinality, cfg.seed, cfg.threads);
}

ClusterLabels run(std::span<const SegmentLike> lines, const RunConfig& cfg) {
    return cfg.mode == Mode::Literal ? run_literal(lines, cfg) : run_expand(lines, cfg);
}

bool is_core(std::size_t i, std::span<const SegmentLike> lines, const NeighbourhoodSpec& spec) {
    const Neighbourhood hood(lines, spec);
    return hood.is_core(i);
}

void write_trace(std::ostream& out, std::span<const TraceEvent> trace) {
    for (const TraceEvent& e : trace) {
        nlohmann::ordered_json row;
        row["iteration"] = e.iteration;
        row["chosen"] = e.chosen;
        row["neighbours"] = e.neighbours;
        row["decision"] = e.core ? "cluster" : "noise";
        row["cluster"] = e.cluster ? nlohmann::ordered_json(*e.cluster) : nlohmann::ordered_json();
        out << row.dump() << '\n';
    }
}

}  // namespace deli
