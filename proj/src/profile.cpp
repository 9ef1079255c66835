#include "deli/profile.hpp"

#include <boost/math/distributions/gamma.hpp>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "deli/error.hpp"
#include "deli/quadrature.hpp"

namespace deli {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require(bool ok, const std::string& what) {
    if (!ok) throw ConfigError(what);
}

bool finite_all(std::initializer_list<double> xs) {
    return std::all_of(xs.begin(), xs.end(), [](double v) { return std::isfinite(v); });
}

void validate(const Profile::Family& family) {
    std::visit(Overloaded{
                   [](const Uniform& u) {
                       require(finite_all({u.a, u.b}) && u.a < u.b, "uniform profile needs a < b");
                   },
                   [](const Normal& n) {
                       require(finite_all({n.mean, n.variance}) && n.variance > 0.0,
                               "normal profile needs a positive variance");
                   },
                   [](const Ellipsoidal& e) {
                       require(finite_all({e.a, e.b}) && e.a > 0.0 && e.b > 0.0,
                               "ellipsoidal profile needs a > 0 and b > 0");
                   },
                   [](const Gamma& g) {
                       require(finite_all({g.shape, g.rate}) && g.rate > 0.0,
                               "gamma profile needs a positive rate");
                       require(g.shape >= 1.0,
                               "gamma profile needs shape >= 1 (smaller shapes are unbounded at 0)");
                   },
                   [](const Beta& b) {
                       require(finite_all({b.alpha1, b.alpha2}), "beta profile needs finite parameters");
                       require(b.alpha1 >= 1.0 && b.alpha2 >= 1.0,
                               "beta profile needs both exponents >= 1 (smaller values are unbounded)");
                   },
                   [](const Exponential& e) {
                       require(std::isfinite(e.rate) && e.rate > 0.0,
                               "exponential profile needs a positive rate");
                   },
               },
               family);
}

double gamma_pdf(double shape, double rate, double t) {
    if (t < 0.0) return 0.0;
    if (t == 0.0) return shape == 1.0 ? rate : 0.0;
    return std::exp(shape * std::log(rate) + (shape - 1.0) * std::log(t) - rate * t -
                    std::lgamma(shape));
}

double beta_pdf(double a1, double a2, double t) {
    if (t < 0.0 || t > 1.0) return 0.0;
    const double log_norm = std::lgamma(a1 + a2) - std::lgamma(a1) - std::lgamma(a2);
    return std::exp(log_norm) * std::pow(t, a1 - 1.0) * std::pow(1.0 - t, a2 - 1.0);
}

double eval_family(const Profile::Family& family, double t) {
    return std::visit(
        Overloaded{
            [t](const Uniform& u) { return (t >= u.a && t <= u.b) ? 1.0 / (u.b - u.a) : 0.0; },
            [t](const Normal& n) {
                const double z = (t - n.mean);
                return std::exp(-0.5 * z * z / n.variance) /
                       std::sqrt(2.0 * std::numbers::pi * n.variance);
            },
            [t](const Ellipsoidal& e) {
                if (std::abs(t) > e.a) return 0.0;
                const double u = t / e.a;
                return 2.0 / (std::numbers::pi * e.a) * std::sqrt(std::max(0.0, 1.0 - u * u));
            },
            [t](const Gamma& g) { return gamma_pdf(g.shape, g.rate, t); },
            [t](const Beta& b) { return beta_pdf(b.alpha1, b.alpha2, t); },
            [t](const Exponential& e) { return t < 0.0 ? 0.0 : e.rate * std::exp(-e.rate * t); },
        },
        family);
}

double mode_of(const Profile::Family& family) {
    return std::visit(Overloaded{
                          [](const Uniform& u) { return 0.5 * (u.a + u.b); },
                          [](const Normal& n) { return n.mean; },
                          [](const Ellipsoidal&) { return 0.0; },
                          [](const Gamma& g) { return (g.shape - 1.0) / g.rate; },
                          [](const Beta& b) {
                              const double denom = b.alpha1 + b.alpha2 - 2.0;
                              return denom > 0.0 ? (b.alpha1 - 1.0) / denom : 0.5;
                          },
                          [](const Exponential&) { return 0.0; },
                      },
                      family);
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

double parse_number(std::string_view text, std::string_view context) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw ConfigError("invalid number '" + std::string(text) + "' in profile '" +
                          std::string(context) + "'");
    }
    return value;
}

std::string format_number(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

}  // namespace

bool Interval::bounded() const noexcept { return std::isfinite(lo) && std::isfinite(hi); }

Profile::Profile(Family family) : family_(family) {
    validate(family_);
    mode_ = mode_of(family_);
    max_density_ = eval_family(family_, mode_);
    tail_window_ = effective_window(kTailEps);
}

Profile Profile::parse(std::string_view text) {
    const std::string_view body = trim(text);
    const auto colon = body.find(':');
    if (colon == std::string_view::npos) {
        throw ConfigError("profile '" + std::string(text) + "' must look like family:p1[,p2]");
    }
    const std::string name = lower(trim(body.substr(0, colon)));
    std::vector<double> params;
    std::string_view rest = body.substr(colon + 1);
    while (true) {
        const auto comma = rest.find(',');
        params.push_back(parse_number(rest.substr(0, comma), text));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    auto expect = [&](std::size_t count) {
        if (params.size() != count) {
            throw ConfigError("profile family '" + name + "' takes " + std::to_string(count) +
                              " parameter(s), got " + std::to_string(params.size()));
        }
    };
    if (name == "uniform") {
        expect(2);
        return uniform(params[0], params[1]);
    }
    if (name == "normal") {
        expect(2);
        return normal(params[0], params[1]);
    }
    if (name == "ellipsoidal") {
        expect(2);
        return ellipsoidal(params[0], params[1]);
    }
    if (name == "gamma") {
        expect(2);
        return gamma(params[0], params[1]);
    }
    if (name == "beta") {
        expect(2);
        return beta(params[0], params[1]);
    }
    if (name == "exponential") {
        expect(1);
        return exponential(params[0]);
    }
    throw ConfigError("unknown profile family '" + name + "'");
}

std::string Profile::to_string() const {
    std::string out(family_name());
    out += ':';
    std::visit(Overloaded{
                   [&](const Uniform& u) { out += format_number(u.a) + "," + format_number(u.b); },
                   [&](const Normal& n) {
                       out += format_number(n.mean) + "," + format_number(n.variance);
                   },
                   [&](const Ellipsoidal& e) { out += format_number(e.a) + "," + format_number(e.b); },
                   [&](const Gamma& g) { out += format_number(g.shape) + "," + format_number(g.rate); },
                   [&](const Beta& b) {
                       out += format_number(b.alpha1) + "," + format_number(b.alpha2);
                   },
                   [&](const Exponential& e) { out += format_number(e.rate); },
               },
               family_);
    return out;
}

std::string_view Profile::family_name() const noexcept {
    static constexpr std::string_view names[] = {"uniform", "normal", "ellipsoidal",
                                                  "gamma",   "beta",   "exponential"};
    return names[family_.index()];
}

double Profile::eval(double t) const { return eval_family(family_, t); }

Interval Profile::support() const {
    return std::visit(Overloaded{
                          [](const Uniform& u) { return Interval{u.a, u.b}; },
                          [](const Normal&) { return Interval{-kInf, kInf}; },
                          [](const Ellipsoidal& e) { return Interval{-e.a, e.a}; },
                          [](const Gamma&) { return Interval{0.0, kInf}; },
                          [](const Beta&) { return Interval{0.0, 1.0}; },
                          [](const Exponential&) { return Interval{0.0, kInf}; },
                      },
                      family_);
}

double Profile::cdf(double t) const {
    return std::visit(
        Overloaded{
            [t](const Uniform& u) { return std::clamp((t - u.a) / (u.b - u.a), 0.0, 1.0); },
            [t](const Normal& n) {
                return 0.5 * std::erfc(-(t - n.mean) / std::sqrt(2.0 * n.variance));
            },
            [t](const Ellipsoidal& e) {
                if (t <= -e.a) return 0.0;
                if (t >= e.a) return 1.0;
                const double u = t / e.a;
                return 0.5 + (u * std::sqrt(1.0 - u * u) + std::asin(u)) / std::numbers::pi;
            },
            [t](const Gamma& g) {
                return t <= 0.0 ? 0.0 : boost::math::gamma_p(g.shape, g.rate * t);
            },
            [t](const Beta& b) {
                if (t <= 0.0) return 0.0;
                if (t >= 1.0) return 1.0;
                return boost::math::ibeta(b.alpha1, b.alpha2, t);
            },
            [t](const Exponential& e) { return t <= 0.0 ? 0.0 : -std::expm1(-e.rate * t); },
        },
        family_);
}

Interval Profile::effective_window(double eps) const {
    if (!(eps > 0.0 && eps < 0.5)) throw DomainError("tail mass must lie in (0, 0.5)");
    const Interval s = support();
    if (s.bounded()) return s;
    return std::visit(
        Overloaded{
            [&](const Normal& n) {
                const boost::math::normal_distribution<> dist(n.mean, std::sqrt(n.variance));
                return Interval{boost::math::quantile(dist, eps),
                                boost::math::quantile(boost::math::complement(dist, eps))};
            },
            [&](const Gamma& g) {
                const boost::math::gamma_distribution<> dist(g.shape, 1.0 / g.rate);
                return Interval{s.lo, boost::math::quantile(boost::math::complement(dist, eps))};
            },
            [&](const Exponential& e) { return Interval{s.lo, -std::log(eps) / e.rate}; },
            [&](const auto&) { return s; },
        },
        family_);
}

bool operator==(const Profile& a, const Profile& b) {
    if (a.family_.index() != b.family_.index()) return false;
    return a.to_string() == b.to_string();
}

double unit_ball_volume(int m) {
    if (m < 1) throw DomainError("unit ball dimension must be >= 1");
    const double half = 0.5 * m;
    return std::pow(std::numbers::pi, half) / std::tgamma(half + 1.0);
}

double neighbourhood_volume(const Profile& p, const SegmentLike& l, int n, double scale) {
    if (n < 2) throw DomainError("neighbourhood volume needs n >= 2");
    if (!(scale > 0.0) || !std::isfinite(scale)) throw DomainError("scale must be positive");
    if (l.is_degenerate()) {
        throw DomainError("degenerate segment has no axis of revolution");
    }
    const Interval& window = p.tail_window();
    if (!window.bounded()) throw DomainError("profile window is unbounded");
    const double jacobian = std::sqrt(l.direction_norm2());
    const int power = n - 1;
    auto cross_section = [&](double t) { return std::pow(scale * p.eval(t), power); };
    const quadrature::Result r = quadrature::integrate(cross_section, window.lo, window.hi, 1e-8);
    const double volume = unit_ball_volume(power) * r.value * jacobian;
    if (!std::isfinite(volume)) throw DomainError("neighbourhood volume is not finite");
    return volume;
}

double scaling_factor(double volume, const Profile& p, const SegmentLike& l, int n, AlphaMode mode) {
    if (!(volume > 0.0) || !std::isfinite(volume)) throw DomainError("volume must be positive");
    const double base = neighbourhood_volume(p, l, n, 1.0);
    if (!(base > 0.0)) throw DomainError("neighbourhood volume must be positive");
    const double ratio = volume / base;
    return mode == AlphaMode::Literal ? ratio : std::pow(ratio, 1.0 / (n - 1));
}

}  // namespace deli
