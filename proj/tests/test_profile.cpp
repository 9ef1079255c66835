#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>

#include "deli/error.hpp"
#include "deli/neighborhood.hpp"
#include "deli/oracle.hpp"
#include "deli/profile.hpp"
#include "deli/quadrature.hpp"
#include "support.hpp"

using namespace deli;

namespace {

const SegmentLike kUnit = SegmentLike::segment({0, 0}, {1, 0});
const SegmentLike kUnit3 = SegmentLike::segment({0, 0, 0}, {1, 0, 0});

constexpr double kPi = std::numbers::pi;

SegmentLike unit_segment(std::size_t n) {
    std::vector<double> y(n, 0.0);
    y[0] = 1.0;
    return SegmentLike::segment(Point(std::vector<double>(n, 0.0)), Point(y));
}

}  // namespace

TEST_CASE("eval examples") {
    CHECK(Profile::uniform(0, 1).eval(0.5) == 1.0);
    CHECK(Profile::uniform(0, 1).eval(2.0) == 0.0);
    const double peak = 1.0 / (0.1 * std::sqrt(2.0 * kPi));
    CHECK(Profile::normal(0.5, 0.01).eval(0.5) == doctest::Approx(peak).epsilon(1e-14));
    CHECK(peak == doctest::Approx(3.98942).epsilon(1e-6));
}

TEST_CASE("support examples") {
    CHECK(Profile::uniform(0, 1).support() == Interval{0, 1});
    CHECK(Profile::exponential(2).support() == Interval{0, INFINITY});
    CHECK(Profile::normal(0, 1).support() == Interval{-INFINITY, INFINITY});
    CHECK(Profile::ellipsoidal(2, 5).support() == Interval{-2, 2});
    CHECK(Profile::gamma(2, 1).support() == Interval{0, INFINITY});
    CHECK(Profile::beta(2, 3).support() == Interval{0, 1});
}

TEST_CASE("effective window") {
    CHECK(Profile::uniform(0, 1).effective_window(1e-6) == Interval{0, 1});

    const auto normal = Profile::normal(0, 1);
    const Interval w = normal.effective_window(0.0227);
    CHECK(w.lo == doctest::Approx(-2.0).epsilon(1e-3));
    CHECK(w.hi == doctest::Approx(2.0).epsilon(1e-3));
    CHECK(normal.cdf(w.lo) == doctest::Approx(0.0227).epsilon(1e-10));
    CHECK(1.0 - normal.cdf(w.hi) == doctest::Approx(0.0227).epsilon(1e-10));

    const double eps = std::exp(-4.0);
    CHECK(Profile::exponential(1).effective_window(eps).hi == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(Profile::exponential(2).effective_window(eps).hi == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(Profile::exponential(2).effective_window(eps).lo == 0.0);

    const auto gamma = Profile::gamma(3, 2);
    const Interval g = gamma.effective_window(1e-6);
    CHECK(g.lo == 0.0);
    CHECK(1.0 - gamma.cdf(g.hi) == doctest::Approx(1e-6).epsilon(1e-8));

    CHECK_THROWS_AS(normal.effective_window(0.0), DomainError);
    CHECK_THROWS_AS(normal.effective_window(0.5), DomainError);
    CHECK(normal.tail_window() == normal.effective_window(kTailEps));
}

TEST_CASE("unit ball volume") {
    CHECK(unit_ball_volume(1) == doctest::Approx(2.0));
    CHECK(unit_ball_volume(2) == doctest::Approx(kPi));
    CHECK(unit_ball_volume(3) == doctest::Approx(4.0 * kPi / 3.0));
    CHECK(unit_ball_volume(4) == doctest::Approx(kPi * kPi / 2.0));
    CHECK_THROWS_AS(unit_ball_volume(0), DomainError);
}

TEST_CASE("neighbourhood volume examples") {
    const auto u = Profile::uniform(0, 1);
    CHECK(neighbourhood_volume(u, kUnit, 2) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(neighbourhood_volume(u, kUnit3, 3) == doctest::Approx(kPi).epsilon(1e-12));

    // Windowed Gaussian: 2 L (1 - 2 eps), cross-checked by the Boost oracle.
    const auto g = Profile::normal(0.5, 0.04);
    const double v = neighbourhood_volume(g, kUnit, 2);
    CHECK(v == doctest::Approx(2.0 * (1.0 - 2.0 * kTailEps)).epsilon(1e-9));
    CHECK(std::abs(v - oracle::reference_volume(g, kUnit, 2)) <= 1e-9);

    // Length enters as the Jacobian.
    const auto long_seg = SegmentLike::segment({0, 0}, {3, 4});
    CHECK(neighbourhood_volume(u, long_seg, 2) == doctest::Approx(10.0).epsilon(1e-12));
}

TEST_CASE("neighbourhood volume errors") {
    const auto u = Profile::uniform(0, 1);
    CHECK_THROWS_AS(neighbourhood_volume(u, SegmentLike::segment({1, 1}, {1, 1}), 2), DomainError);
    CHECK_THROWS_AS(neighbourhood_volume(u, kUnit, 1), DomainError);
    CHECK_THROWS_AS(neighbourhood_volume(u, kUnit, 2, 0.0), DomainError);
    CHECK_THROWS_AS(scaling_factor(-1.0, u, kUnit, 2), DomainError);
}

TEST_CASE("scaling factor examples") {
    const auto u = Profile::uniform(0, 1);
    CHECK(scaling_factor(4.0, u, kUnit, 2) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(scaling_factor(kPi, u, kUnit3, 3) == doctest::Approx(1.0).epsilon(1e-12));
    // Unscaled display: V equal to the f-neighbourhood volume gives alpha 1, and
    // the neighbourhood is then exactly {P : d(P, l) < f(t*)}.
    const auto g = Profile::normal(0.5, 0.02);
    const double base = neighbourhood_volume(g, kUnit, 2);
    const double alpha = scaling_factor(base, g, kUnit, 2);
    CHECK(alpha == doctest::Approx(1.0).epsilon(1e-14));
    testing::Gen gen(3);
    for (int rep = 0; rep < 200; ++rep) {
        const Point p = gen.point(2, -1.0, 2.0);
        const auto cp = closest_point(p, kUnit);
        CHECK(contains_point(kUnit, g, alpha, p) == (cp.distance < g.eval(cp.t_star)));
    }
}

TEST_CASE("exact-volume alpha mode") {
    const auto u = Profile::uniform(0, 1);
    // V(N_f) = pi in R^3; V = 4 pi needs alpha = 2 for radius-2 cylinder.
    CHECK(scaling_factor(4.0 * kPi, u, kUnit3, 3, AlphaMode::ExactVolume) == doctest::Approx(2.0));
    CHECK(scaling_factor(4.0 * kPi, u, kUnit3, 3, AlphaMode::Literal) == doctest::Approx(4.0));
}

TEST_CASE("parse and format") {
    CHECK(Profile::parse("uniform:-4,4") == Profile::uniform(-4, 4));
    CHECK(Profile::parse("Normal:0.5,0.01") == Profile::normal(0.5, 0.01));
    CHECK(Profile::parse("  EXPONENTIAL : 2 ") == Profile::exponential(2));
    CHECK(Profile::parse("gamma:2,3").family_name() == "gamma");
    CHECK(Profile::parse("ellipsoidal:1,2") == Profile::ellipsoidal(1, 2));
    CHECK(Profile::parse("beta:2,2") == Profile::beta(2, 2));
    CHECK_THROWS_AS(Profile::parse("uniform"), ConfigError);
    CHECK_THROWS_AS(Profile::parse("uniform:1"), ConfigError);
    CHECK_THROWS_AS(Profile::parse("uniform:2,1"), ConfigError);
    CHECK_THROWS_AS(Profile::parse("normal:0,-1"), ConfigError);
    CHECK_THROWS_AS(Profile::parse("normal:0,abc"), ConfigError);
    CHECK_THROWS_AS(Profile::parse("cauchy:0,1"), ConfigError);
    CHECK_THROWS_AS(Profile::parse("gamma:0.5,1"), ConfigError);
    CHECK_THROWS_AS(Profile::parse("beta:0.5,2"), ConfigError);
    CHECK_THROWS_AS(Profile::parse("exponential:0"), ConfigError);
    CHECK_THROWS_AS(Profile::parse("ellipsoidal:0,1"), ConfigError);

    testing::Gen gen(4);
    for (int rep = 0; rep < 300; ++rep) {
        const Profile p = gen.profile();
        REQUIRE(Profile::parse(p.to_string()) == p);
        REQUIRE(Profile::parse(p.to_string()).family() .index() == p.family().index());
    }
}

TEST_CASE("ellipsoidal height parameter does not change the density") {
    CHECK(Profile::ellipsoidal(2, 1).eval(0.7) == Profile::ellipsoidal(2, 9).eval(0.7));
    CHECK(Profile::ellipsoidal(2, 1).max_density() == doctest::Approx(1.0 / kPi));
}

TEST_CASE("property: every family integrates to one") {
    testing::Gen gen(5);
    for (std::size_t family = 0; family < 6; ++family) {
        for (int rep = 0; rep < 50; ++rep) {
            const Profile p = gen.profile_of(family);
            const Interval w = p.effective_window(1e-9);
            REQUIRE(w.bounded());
            auto f = [&](double t) { return p.eval(t); };
            const double mass = quadrature::integrate(f, w.lo, w.hi, 1e-10).value;
            CAPTURE(p.to_string());
            REQUIRE(mass >= 1.0 - 1e-6);
            REQUIRE(mass <= 1.0 + 1e-9);
            // Independent integration of the same density agrees.
            const double ref = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, w.lo, w.hi, 20, 1e-12);
            REQUIRE(std::abs(mass - ref) <= 1e-9);
        }
    }
}

TEST_CASE("property: density matches the Boost reference and vanishes off the support") {
    testing::Gen gen(6);
    for (int rep = 0; rep < 600; ++rep) {
        const Profile p = gen.profile();
        const Interval s = p.support();
        const Interval w = p.tail_window();
        CAPTURE(p.to_string());
        for (int k = 0; k < 20; ++k) {
            const double t = gen.real(w.lo - 1.0, w.hi + 1.0);
            const double mine = p.eval(t);
            const double ref = oracle::reference_pdf(p, t);
            REQUIRE(mine >= 0.0);
            REQUIRE(std::abs(mine - ref) <= 1e-10 * std::max(1.0, ref));
            if (t < s.lo || t > s.hi) REQUIRE(mine == 0.0);
        }
        REQUIRE(p.cdf(w.lo) <= 1e-6 * (1 + 1e-8));
        REQUIRE(p.cdf(w.hi) >= 1.0 - 1e-6 * (1 + 1e-8));
    }
}

TEST_CASE("property: max density is the supremum") {
    testing::Gen gen(7);
    for (int rep = 0; rep < 300; ++rep) {
        const Profile p = gen.profile();
        const Interval w = p.tail_window();
        double grid_max = 0.0;
        for (int k = 0; k <= 20000; ++k) grid_max = std::max(grid_max, p.eval(w.lo + w.width() * k / 20000.0));
        CAPTURE(p.to_string());
        REQUIRE(grid_max <= p.max_density() * (1.0 + 1e-12));
        REQUIRE(grid_max >= p.max_density() * (1.0 - 1e-3));
        REQUIRE(p.eval(p.mode()) == doctest::Approx(p.max_density()).epsilon(1e-12));
    }
}

TEST_CASE("property: volume matches the Boost quadrature oracle") {
    testing::Gen gen(8);
    for (int rep = 0; rep < 200; ++rep) {
        const Profile p = gen.profile();
        const int n = gen.integer(2, 4);
        const auto l = gen.segment(static_cast<std::size_t>(n), -3.0, 3.0);
        const double scale = gen.real(0.1, 3.0);
        const double mine = neighbourhood_volume(p, l, n, scale);
        const double ref = oracle::reference_volume(p, l, n, scale);
        CAPTURE(p.to_string());
        REQUIRE(mine == doctest::Approx(ref).epsilon(1e-7));
    }
}

TEST_CASE("property: scale power law") {
    testing::Gen gen(9);
    for (int rep = 0; rep < 100; ++rep) {
        const Profile p = gen.profile();
        const int n = gen.integer(2, 4);
        const auto l = gen.segment(static_cast<std::size_t>(n), -3.0, 3.0);
        const double alpha = gen.real(0.05, 20.0);
        const double scaled = neighbourhood_volume(p, l, n, alpha);
        const double base = neighbourhood_volume(p, l, n, 1.0);
        REQUIRE(std::abs(scaled - std::pow(alpha, n - 1) * base) <= 1e-6 * scaled);
    }
}

TEST_CASE("property: in R^2 the literal alpha reproduces the volume") {
    testing::Gen gen(10);
    for (int rep = 0; rep < 100; ++rep) {
        const Profile p = gen.profile();
        const auto l = gen.segment(2, -3.0, 3.0);
        const double v = gen.real(0.1, 50.0);
        const double alpha = scaling_factor(v, p, l, 2);
        REQUIRE(std::abs(neighbourhood_volume(p, l, 2, alpha) - v) <= 1e-6 * std::max(1.0, v));
        // Exact-volume mode holds in every dimension.
        const int n = gen.integer(3, 5);
        const auto ln = gen.segment(static_cast<std::size_t>(n), -3.0, 3.0);
        const double a = scaling_factor(v, p, ln, n, AlphaMode::ExactVolume);
        REQUIRE(std::abs(neighbourhood_volume(p, ln, n, a) - v) <= 1e-6 * std::max(1.0, v));
    }
}

TEST_CASE("property: volume is monotone in the profile height") {
    testing::Gen gen(16);
    for (int rep = 0; rep < 100; ++rep) {
        const Profile p = gen.profile();
        const int n = gen.integer(2, 4);
        const auto l = gen.segment(static_cast<std::size_t>(n));
        const double lo = gen.real(0.1, 2.0);
        const double hi = lo * gen.real(1.01, 3.0);
        REQUIRE(neighbourhood_volume(p, l, n, lo) < neighbourhood_volume(p, l, n, hi));
    }
    // Uniform(0, 0.5) is twice as high as Uniform(0, 1) on half the window.
    CHECK(neighbourhood_volume(Profile::uniform(0, 0.5), unit_segment(3), 3) >
          neighbourhood_volume(Profile::uniform(0, 1), unit_segment(3), 3));
}

TEST_CASE("property: eval is continuous on the support") {
    testing::Gen gen(17);
    const double h = 1e-7;
    for (int rep = 0; rep < 100; ++rep) {
        const Profile p = gen.profile();
        const Interval w = p.tail_window();
        const double margin = 0.01 * w.width();
        const double t = gen.real(w.lo + margin, w.hi - margin);
        const double delta = 1e-4 * w.width();
        const double lipschitz = std::max(std::abs(p.eval(t + delta) - p.eval(t)),
                                          std::abs(p.eval(t) - p.eval(t - delta))) / delta;
        CAPTURE(p.to_string());
        REQUIRE(std::abs(p.eval(t + h) - p.eval(t)) <= 2.0 * lipschitz * h + 1e-12 * p.max_density());
    }
}
