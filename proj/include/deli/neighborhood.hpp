#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "deli/error.hpp"
#include "deli/geometry.hpp"
#include "deli/profile.hpp"

namespace deli {

/// A parameter that is either shared by every line or given per line.
template <class T>
class PerLine {
public:
    PerLine(T value) : values_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
    PerLine(std::vector<T> values) : values_(std::move(values)) {}  // NOLINT

    bool is_constant() const noexcept { return values_.index() == 0; }

    /// Number of per-line entries; 0 for a constant.
    std::size_t size() const noexcept {
        return is_constant() ? 0 : std::get<1>(values_).size();
    }

    const T& at(std::size_t i) const {
        if (is_constant()) return std::get<0>(values_);
        return std::get<1>(values_).at(i);
    }

private:
    std::variant<T, std::vector<T>> values_;
};

/// Which definition of the relation l1 R l2 is used.
enum class Version {
    V1 = 1,  ///< min distance < alpha_{l1}
    V2 = 2,  ///< probabilistic neighbourhood, alpha derived from a volume
    V3 = 3,  ///< probabilistic neighbourhood, alpha given
};

struct NeighbourhoodSpec {
    Version version = Version::V1;
    std::size_t cardinality = 1;
    std::optional<PerLine<double>> alpha;
    std::optional<double> volume;
    /// An absent entry means the line carries no density; see `Neighbourhood`.
    std::optional<PerLine<std::optional<Profile>>> profile;
    AlphaMode alpha_mode = AlphaMode::Literal;
    std::size_t search_samples = 64;
    double search_tol = 1e-9;

    /// Checks the parameter set against the version's requirements for a
    /// dataset of `line_count` lines. Throws ConfigError.
    void validate(std::size_t line_count) const;
};

struct SearchOptions {
    std::size_t samples = 64;
    double tol = 1e-9;
};

/// P lies strictly inside the (alpha * f)-neighbourhood of l.
bool contains_point(const SegmentLike& l, const Profile& p, double alpha, const Point& point);

/// Version 1 relation: the two lines come strictly closer than alpha1.
bool relates_v1(const SegmentLike& l1, const SegmentLike& l2, double alpha1);

/// Probabilistic relation: some point of l2 within the support of p2 (all of
/// l2 when p2 is null) lies strictly inside the (alpha1 * p1)-neighbourhood of l1.
///
/// The witness search minimises
///   phi(s) = d(g2(s), l1) - alpha1 * p1(t*(s))
/// over s. Far pairs are rejected by comparing the segment distance with
/// alpha1 * sup p1; otherwise phi is scanned on a uniform grid plus a few
/// analytic probes, and every grid local minimum is refined by golden section.
bool relates_prob(const SegmentLike& l1, const Profile& p1, double alpha1, const SegmentLike& l2,
                  const Profile* p2, const SearchOptions& options = {});

/// Evaluates the relation over a fixed dataset.
///
/// Lines without a profile under Version 3 fall back to the distance rule with
/// their alpha. Version 2 derives each line's alpha from the volume once, at
/// construction. The evaluation counter is safe to bump from several threads.
class Neighbourhood {
public:
    Neighbourhood(std::span<const SegmentLike> lines, NeighbourhoodSpec spec);

    Neighbourhood(const Neighbourhood&) = delete;
    Neighbourhood& operator=(const Neighbourhood&) = delete;

    std::size_t size() const noexcept { return lines_.size(); }
    const NeighbourhoodSpec& spec() const noexcept { return spec_; }
    std::span<const SegmentLike> lines() const noexcept { return lines_; }

    double alpha(std::size_t i) const { return alphas_.at(i); }
    const Profile* profile(std::size_t i) const;

    /// lines[i] R lines[j]. Counts one evaluation.
    bool relates(std::size_t i, std::size_t j) const;

    /// {j : lines[i] R lines[j]} in ascending order; includes i when reflexive.
    std::vector<std::size_t> neighbor_set(std::size_t i) const;

    bool is_core(std::size_t i) const { return neighbor_set(i).size() >= spec_.cardinality; }

    std::uint64_t evaluations() const noexcept { return evaluations_.load(std::memory_order_relaxed); }
    void reset_evaluations() noexcept { evaluations_.store(0, std::memory_order_relaxed); }

private:
    std::span<const SegmentLike> lines_;
    NeighbourhoodSpec spec_;
    std::vector<double> alphas_;
    SearchOptions search_;
    mutable std::atomic<std::uint64_t> evaluations_{0};
};

/// One-off relation check for specs whose parameters are constants.
bool relates(const SegmentLike& l1, const SegmentLike& l2, const NeighbourhoodSpec& spec);

}  // namespace deli
