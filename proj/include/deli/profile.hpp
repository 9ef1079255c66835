#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "deli/geometry.hpp"

namespace deli {

/// Tail mass dropped on each unbounded side when a support has to be truncated
/// for quadrature or for the witness search.
inline constexpr double kTailEps = 1e-6;

struct Uniform {
    double a;
    double b;
};
/// Normal distribution, parametrised by mean and variance.
struct Normal {
    double mean;
    double variance;
};
/// Semi-ellipse on [-a, a], normalised to unit mass. The height parameter b
/// cancels under normalisation and is kept only for round-tripping.
struct Ellipsoidal {
    double a;
    double b;
};
/// Gamma with shape alpha and rate lambda.
struct Gamma {
    double shape;
    double rate;
};
struct Beta {
    double alpha1;
    double alpha2;
};
struct Exponential {
    double rate;
};

/// [lo, hi]; either side may be infinite.
struct Interval {
    double lo;
    double hi;

    bool empty() const noexcept { return !(lo <= hi); }
    bool bounded() const noexcept;
    double width() const noexcept { return hi - lo; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// A continuous, bounded probability density over the line parameter t.
///
/// Densities are expressed in t, not in arc length: a Uniform(0, 1) profile on
/// a segment of any length has height 1. Shape parameters that would make the
/// density unbounded (Gamma shape < 1, Beta exponents < 1) are rejected.
class Profile {
public:
    using Family = std::variant<Uniform, Normal, Ellipsoidal, Gamma, Beta, Exponential>;

    explicit Profile(Family family);

    static Profile uniform(double a, double b) { return Profile(Uniform{a, b}); }
    static Profile normal(double mean, double variance) { return Profile(Normal{mean, variance}); }
    static Profile ellipsoidal(double a, double b) { return Profile(Ellipsoidal{a, b}); }
    static Profile gamma(double shape, double rate) { return Profile(Gamma{shape, rate}); }
    static Profile beta(double alpha1, double alpha2) { return Profile(Beta{alpha1, alpha2}); }
    static Profile exponential(double rate) { return Profile(Exponential{rate}); }

    /// Parses `family:p1[,p2]`, case-insensitively (e.g. `uniform:-4,4`,
    /// `Normal:0.5,0.01`). Throws ConfigError on malformed text or invalid parameters.
    static Profile parse(std::string_view text);

    /// Canonical text form accepted by `parse`, with round-trip precision.
    std::string to_string() const;

    const Family& family() const noexcept { return family_; }
    std::string_view family_name() const noexcept;

    double eval(double t) const;

    /// Closure of {t : f(t) > 0}.
    Interval support() const;

    /// Support truncated to the [eps, 1 - eps] quantile range on unbounded sides.
    Interval effective_window(double eps = kTailEps) const;

    /// effective_window(kTailEps), computed once at construction.
    const Interval& tail_window() const noexcept { return tail_window_; }

    /// sup_t f(t), attained at the mode.
    double max_density() const noexcept { return max_density_; }

    /// A point of maximal density.
    double mode() const noexcept { return mode_; }

    double cdf(double t) const;

    friend bool operator==(const Profile& a, const Profile& b);

private:
    Family family_;
    Interval tail_window_{0.0, 0.0};
    double mode_ = 0.0;
    double max_density_ = 0.0;
};

/// Volume of the unit ball in R^m.
double unit_ball_volume(int m);

/// Volume of the (scale * f)-neighbourhood of l in R^n, taken as the solid of
/// revolution c_{n-1} * int (scale f(t))^{n-1} |y - x| dt over the profile's
/// effective window. Throws DomainError for n < 2, degenerate segments and
/// non-finite integrals.
double neighbourhood_volume(const Profile& p, const SegmentLike& l, int n, double scale = 1.0);

enum class AlphaMode {
    /// alpha = V / V(N_f): the neighbourhood volume equals V only in R^2.
    Literal,
    /// alpha = (V / V(N_f))^{1/(n-1)}: the scaled neighbourhood has volume V in every R^n.
    ExactVolume,
};

double scaling_factor(double volume, const Profile& p, const SegmentLike& l, int n,
                      AlphaMode mode = AlphaMode::Literal);

}  // namespace deli
