#include "deli/neighborhood.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace deli {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Interval intersect(const Interval& a, const Interval& b) {
    return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

Interval domain_of(const SegmentLike& l) {
    return l.is_segment() ? Interval{0.0, 1.0} : Interval{-kInf, kInf};
}

void point_at(const SegmentLike& l, double t, std::vector<double>& out) {
    const auto x = l.x().coords();
    const auto y = l.y().coords();
    out.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + (y[i] - x[i]) * t;
}

// Witness search for relates_prob over a bounded parameter interval of l2.
class WitnessSearch {
public:
    WitnessSearch(const SegmentLike& l1, const Profile& p1, double alpha1, const SegmentLike& l2)
        : l1_(l1), p1_(p1), alpha1_(alpha1), l2_(l2) {}

    double phi(double s) {
        point_at(l2_, s, scratch_);
        const Projection pr = project(scratch_, l1_);
        return std::sqrt(pr.distance2) - alpha1_ * p1_.eval(pr.t_star);
    }

    // Golden-section search for a minimum of phi on [lo, hi]; stops early as
    // soon as a negative value is seen.
    bool refine(double lo, double hi, double tol) {
        constexpr double kInvPhi = std::numbers::phi - 1.0;
        double a = lo;
        double b = hi;
        double c = b - kInvPhi * (b - a);
        double d = a + kInvPhi * (b - a);
        double fc = phi(c);
        double fd = phi(d);
        while (b - a > tol) {
            if (fc < 0.0 || fd < 0.0) return true;
            if (fc < fd) {
                b = d;
                d = c;
                fd = fc;
                c = b - kInvPhi * (b - a);
                fc = phi(c);
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + kInvPhi * (b - a);
                fd = phi(d);
            }
        }
        return fc < 0.0 || fd < 0.0;
    }

private:
    const SegmentLike& l1_;
    const Profile& p1_;
    double alpha1_;
    const SegmentLike& l2_;
    std::vector<double> scratch_;
};

}  // namespace

void NeighbourhoodSpec::validate(std::size_t line_count) const {
    if (cardinality < 1) throw ConfigError("cardinality c must be at least 1");
    if (search_samples < 2) throw ConfigError("search_samples must be at least 2");
    if (!(search_tol > 0.0)) throw ConfigError("search_tol must be positive");
    auto check_size = [line_count](std::size_t size, const char* what) {
        if (size != 0 && size != line_count) {
            throw ConfigError(std::string(what) + " map has " + std::to_string(size) +
                              " entries for " + std::to_string(line_count) + " lines");
        }
    };
    switch (version) {
        case Version::V1:
            if (!alpha) throw ConfigError("version 1 requires alpha");
            if (profile) throw ConfigError("version 1 takes no profile");
            if (volume) throw ConfigError("version 1 takes alpha, not a volume");
            break;
        case Version::V2:
            if (!volume) throw ConfigError("version 2 requires a volume V");
            if (!profile) throw ConfigError("version 2 requires a profile");
            if (alpha) throw ConfigError("version 2 derives alpha from V; do not pass alpha");
            if (!(*volume > 0.0) || !std::isfinite(*volume)) {
                throw ConfigError("volume V must be positive and finite");
            }
            break;
        case Version::V3:
            if (!alpha) throw ConfigError("version 3 requires alpha");
            if (!profile) throw ConfigError("version 3 requires a profile");
            if (volume) throw ConfigError("version 3 takes alpha, not a volume");
            break;
        default:
            throw ConfigError("unknown version");
    }
    if (alpha) {
        check_size(alpha->size(), "alpha");
        const std::size_t count = alpha->is_constant() ? 1 : alpha->size();
        for (std::size_t i = 0; i < count; ++i) {
            const double a = alpha->at(i);
            if (!(a > 0.0) || !std::isfinite(a)) throw ConfigError("alpha must be positive and finite");
        }
    }
    if (profile) {
        check_size(profile->size(), "profile");
        if (version == Version::V2) {
            const std::size_t count = profile->is_constant() ? 1 : profile->size();
            for (std::size_t i = 0; i < count; ++i) {
                if (!profile->at(i)) {
                    throw ConfigError("version 2 needs a profile for every line (line " +
                                      std::to_string(i) + " has none)");
                }
            }
        }
    }
}

bool contains_point(const SegmentLike& l, const Profile& p, double alpha, const Point& point) {
    const Projection pr = project(point.coords(), l);
    const double radius = alpha * p.eval(pr.t_star);
    return std::sqrt(pr.distance2) < radius;
}

bool relates_v1(const SegmentLike& l1, const SegmentLike& l2, double alpha1) {
    return min_distance(l1, l2).distance < alpha1;
}

bool relates_prob(const SegmentLike& l1, const Profile& p1, double alpha1, const SegmentLike& l2,
                  const Profile* p2, const SearchOptions& options) {
    const double reach = alpha1 * p1.max_density();
    if (!(reach > 0.0)) return false;
    const SegmentDistance closest = min_distance(l1, l2);
    if (closest.distance >= reach) return false;

    // Part of l1 where the density can be positive.
    const Interval t1 = intersect(domain_of(l1), p1.tail_window());
    if (t1.empty()) return false;

    Interval s_range = domain_of(l2);
    if (p2 != nullptr) s_range = intersect(s_range, p2->tail_window());
    if (s_range.empty()) return false;

    if (l2.is_degenerate()) {
        if (!(s_range.lo <= 0.0 && 0.0 <= s_range.hi)) return false;
        return WitnessSearch(l1, p1, alpha1, l2).phi(0.0) < 0.0;
    }

    // A witness lies within `reach` of g1(t1), hence within reach + |A B| of A;
    // that ball cuts a bounded parameter interval out of l2.
    std::vector<double> a_pt;
    std::vector<double> b_pt;
    point_at(l1, t1.lo, a_pt);
    point_at(l1, t1.hi, b_pt);
    double ab2 = 0.0;
    for (std::size_t i = 0; i < a_pt.size(); ++i) ab2 += (b_pt[i] - a_pt[i]) * (b_pt[i] - a_pt[i]);
    const double radius = reach + std::sqrt(ab2);
    {
        const auto x2 = l2.x().coords();
        const auto y2 = l2.y().coords();
        double along = 0.0;
        for (std::size_t i = 0; i < x2.size(); ++i) along += (a_pt[i] - x2[i]) * (y2[i] - x2[i]);
        const double s_a = along / l2.direction_norm2();
        double perp2 = 0.0;
        for (std::size_t i = 0; i < x2.size(); ++i) {
            const double r = a_pt[i] - (x2[i] + s_a * (y2[i] - x2[i]));
            perp2 += r * r;
        }
        if (perp2 >= radius * radius) return false;
        const double half = std::sqrt((radius * radius - perp2) / l2.direction_norm2());
        s_range = intersect(s_range, {s_a - half, s_a + half});
    }
    if (s_range.empty()) return false;

    WitnessSearch search(l1, p1, alpha1, l2);
    if (s_range.hi == s_range.lo) return search.phi(s_range.lo) < 0.0;

    // Probes where a witness is most likely: the closest approach and the
    // projection of l1's densest point.
    auto clamp_s = [&](double s) { return std::clamp(s, s_range.lo, s_range.hi); };
    const double mode_t = std::clamp(p1.mode(), t1.lo, t1.hi);
    point_at(l1, mode_t, a_pt);
    const double probes[] = {clamp_s(closest.t2), clamp_s(project(a_pt, l2).t_star)};

    const std::size_t m = std::max<std::size_t>(options.samples, 2);
    const double step = s_range.width() / static_cast<double>(m - 1);
    for (double s : probes) {
        if (search.phi(s) < 0.0) return true;
        if (search.refine(clamp_s(s - step), clamp_s(s + step), options.tol)) return true;
    }

    std::vector<double> values(m);
    for (std::size_t k = 0; k < m; ++k) {
        const double s = k + 1 == m ? s_range.hi : s_range.lo + step * static_cast<double>(k);
        values[k] = search.phi(s);
        if (values[k] < 0.0) return true;
    }
    for (std::size_t k = 0; k < m; ++k) {
        const bool left_ok = k == 0 || values[k] <= values[k - 1];
        const bool right_ok = k + 1 == m || values[k] <= values[k + 1];
        if (!(left_ok && right_ok)) continue;
        const double s = s_range.lo + step * static_cast<double>(k);
        if (search.refine(clamp_s(s - step), clamp_s(s + step), options.tol)) return true;
    }
    return false;
}

Neighbourhood::Neighbourhood(std::span<const SegmentLike> lines, NeighbourhoodSpec spec)
    : lines_(lines), spec_(std::move(spec)) {
    spec_.validate(lines_.size());
    search_ = {spec_.search_samples, spec_.search_tol};
    alphas_.resize(lines_.size());
    for (std::size_t i = 0; i < lines_.size(); ++i) {
        if (spec_.version == Version::V2) {
            const Profile& p = *spec_.profile->at(i);
            const int n = static_cast<int>(lines_[i].dim());
            alphas_[i] = scaling_factor(*spec_.volume, p, lines_[i], n, spec_.alpha_mode);
        } else {
            alphas_[i] = spec_.alpha->at(i);
        }
    }
}

const Profile* Neighbourhood::profile(std::size_t i) const {
    if (!spec_.profile) return nullptr;
    const auto& entry = spec_.profile->at(i);
    return entry ? &*entry : nullptr;
}

bool Neighbourhood::relates(std::size_t i, std::size_t j) const {
    evaluations_.fetch_add(1, std::memory_order_relaxed);
    const SegmentLike& l1 = lines_[i];
    const SegmentLike& l2 = lines_[j];
    if (spec_.version == Version::V1) return relates_v1(l1, l2, alphas_[i]);
    const Profile* p1 = profile(i);
    if (p1 == nullptr) return relates_v1(l1, l2, alphas_[i]);
    return relates_prob(l1, *p1, alphas_[i], l2, profile(j), search_);
}

std::vector<std::size_t> Neighbourhood::neighbor_set(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < lines_.size(); ++j) {
        if (relates(i, j)) out.push_back(j);
    }
    return out;
}

bool relates(const SegmentLike& l1, const SegmentLike& l2, const NeighbourhoodSpec& spec) {
    if ((spec.alpha && !spec.alpha->is_constant()) || (spec.profile && !spec.profile->is_constant())) {
        throw ConfigError("per-line parameters need a Neighbourhood over the whole dataset");
    }
    const std::vector<SegmentLike> pair{l1, l2};
    const Neighbourhood hood(pair, spec);
    return hood.relates(0, 1);
}

}  // namespace deli
