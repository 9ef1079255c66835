#include "deli/oracle.hpp"

#include <boost/math/distributions/beta.hpp>
#include <boost/math/distributions/exponential.hpp>
#include <boost/math/distributions/gamma.hpp>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/uniform.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>

#include "deli/error.hpp"

namespace deli::oracle {

namespace {

std::vector<double> lerp(const Point& a, const Point& b, double t) {
    std::vector<double> out(a.dim());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a[k] + (b[k] - a[k]) * t;
    return out;
}

double dist(const std::vector<double>& p, const std::vector<double>& q) {
    double acc = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) acc += (p[k] - q[k]) * (p[k] - q[k]);
    return std::sqrt(acc);
}

// Closest point of segment [a, b] to p by the perpendicular foot, clamped.
std::pair<double, double> foot_on_segment(const std::vector<double>& p, const Point& a, const Point& b) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        num += (p[k] - a[k]) * (b[k] - a[k]);
        den += (b[k] - a[k]) * (b[k] - a[k]);
    }
    const double t = den > 0.0 ? std::clamp(num / den, 0.0, 1.0) : 0.0;
    return {t, dist(p, lerp(a, b, t))};
}

std::size_t grid_size(double step) {
    if (!(step > 0.0)) throw DomainError("grid step must be positive");
    return static_cast<std::size_t>(std::ceil(1.0 / step - 1e-9));
}

double grid_t(std::size_t k, std::size_t m) {
    return k == m ? 1.0 : static_cast<double>(k) / static_cast<double>(m);
}

}  // namespace

double grid_min_distance(const SegmentLike& l1, const SegmentLike& l2, double step) {
    if (!l1.is_segment() || !l2.is_segment()) throw DomainError("grid oracle handles segments only");
    const std::size_t m = grid_size(step);
    std::vector<std::vector<double>> second(m + 1);
    for (std::size_t j = 0; j <= m; ++j) second[j] = lerp(l2.x(), l2.y(), grid_t(j, m));
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i <= m; ++i) {
        const auto p = lerp(l1.x(), l1.y(), grid_t(i, m));
        for (const auto& q : second) {
            double acc = 0.0;
            for (std::size_t k = 0; k < p.size(); ++k) acc += (p[k] - q[k]) * (p[k] - q[k]);
            best = std::min(best, acc);
        }
    }
    return std::sqrt(best);
}

double dense_min_phi(const SegmentLike& l1, const Profile& p1, double alpha1, const SegmentLike& l2,
                     const Profile* p2, double step) {
    if (!l1.is_segment() || !l2.is_segment()) throw DomainError("dense scan handles segments only");
    const std::size_t m = grid_size(step);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k <= m; ++k) {
        const double s = grid_t(k, m);
        if (p2 != nullptr && p2->eval(s) <= 0.0) continue;
        const auto q = lerp(l2.x(), l2.y(), s);
        const auto [t, d] = foot_on_segment(q, l1.x(), l1.y());
        best = std::min(best, d - alpha1 * p1.eval(t));
    }
    return best;
}

double reference_pdf(const Profile& p, double t) {
    namespace bm = boost::math;
    const auto& f = p.family();
    if (const auto* u = std::get_if<Uniform>(&f)) {
        return (t < u->a || t > u->b) ? 0.0 : bm::pdf(bm::uniform_distribution<>(u->a, u->b), t);
    }
    if (const auto* n = std::get_if<Normal>(&f)) {
        return bm::pdf(bm::normal_distribution<>(n->mean, std::sqrt(n->variance)), t);
    }
    if (const auto* e = std::get_if<Ellipsoidal>(&f)) {
        if (std::abs(t) >= e->a) return 0.0;
        // Area of the half-ellipse with semi-axes a and 1 is pi a / 2.
        return std::sqrt(1.0 - (t / e->a) * (t / e->a)) / (M_PI * e->a / 2.0);
    }
    if (const auto* g = std::get_if<Gamma>(&f)) {
        return t < 0.0 ? 0.0 : bm::pdf(bm::gamma_distribution<>(g->shape, 1.0 / g->rate), t);
    }
    if (const auto* b = std::get_if<Beta>(&f)) {
        return (t < 0.0 || t > 1.0) ? 0.0 : bm::pdf(bm::beta_distribution<>(b->alpha1, b->alpha2), t);
    }
    const auto& x = std::get<Exponential>(f);
    return t < 0.0 ? 0.0 : bm::pdf(bm::exponential_distribution<>(x.rate), t);
}

Interval reference_window(const Profile& p, double eps) {
    namespace bm = boost::math;
    const auto& f = p.family();
    if (const auto* n = std::get_if<Normal>(&f)) {
        const bm::normal_distribution<> d(n->mean, std::sqrt(n->variance));
        return {bm::quantile(d, eps), bm::quantile(d, 1.0 - eps)};
    }
    if (const auto* g = std::get_if<Gamma>(&f)) {
        const bm::gamma_distribution<> d(g->shape, 1.0 / g->rate);
        return {0.0, bm::quantile(bm::complement(d, eps))};
    }
    if (const auto* x = std::get_if<Exponential>(&f)) {
        return {0.0, bm::quantile(bm::complement(bm::exponential_distribution<>(x->rate), eps))};
    }
    if (const auto* u = std::get_if<Uniform>(&f)) return {u->a, u->b};
    if (const auto* e = std::get_if<Ellipsoidal>(&f)) return {-e->a, e->a};
    return {0.0, 1.0};
}

double reference_volume(const Profile& p, const SegmentLike& l, int n, double scale, double eps) {
    if (!l.is_segment() || l.is_degenerate()) throw DomainError("reference volume needs a proper segment");
    const Interval w = reference_window(p, eps);
    auto integrand = [&](double t) { return std::pow(scale * reference_pdf(p, t), n - 1); };
    const double integral =
        boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, w.lo, w.hi, 20, 1e-12);
    const double ball = std::pow(M_PI, 0.5 * (n - 1)) / std::tgamma(0.5 * (n - 1) + 1.0);
    return ball * integral * distance(l.x(), l.y());
}

DbscanResult reference_dbscan(std::span<const Point> points, double eps, std::size_t minpts) {
    const std::size_t n = points.size();
    auto region = [&](std::size_t i) {
        std::vector<std::size_t> out;
        for (std::size_t j = 0; j < n; ++j) {
            if (distance(points[i], points[j]) < eps) out.push_back(j);
        }
        return out;
    };
    DbscanResult out;
    out.labels.assign(n, 0);
    out.core.assign(n, false);
    std::vector<bool> visited(n, false);
    int cluster = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (visited[i]) continue;
        visited[i] = true;
        const auto seeds = region(i);
        if (seeds.size() < minpts) continue;
        out.core[i] = true;
        out.labels[i] = ++cluster;
        std::deque<std::size_t> queue(seeds.begin(), seeds.end());
        while (!queue.empty()) {
            const std::size_t q = queue.front();
            queue.pop_front();
            if (out.labels[q] == 0) out.labels[q] = cluster;
            if (visited[q]) continue;
            visited[q] = true;
            const auto more = region(q);
            if (more.size() < minpts) continue;
            out.core[q] = true;
            queue.insert(queue.end(), more.begin(), more.end());
        }
    }
    return out;
}

RelationMatrix relation_matrix(const Neighbourhood& hood) {
    const std::size_t n = hood.size();
    RelationMatrix m(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = hood.relates(i, j);
    }
    return m;
}

double adjusted_rand_index(std::span<const int> a, std::span<const int> b) {
    if (a.size() != b.size()) throw DomainError("labelings differ in length");
    const double n = static_cast<double>(a.size());
    if (a.size() < 2) return 1.0;
    std::map<std::pair<int, int>, double> joint;
    std::map<int, double> rows;
    std::map<int, double> cols;
    for (std::size_t i = 0; i < a.size(); ++i) {
        joint[{a[i], b[i]}] += 1.0;
        rows[a[i]] += 1.0;
        cols[b[i]] += 1.0;
    }
    auto pairs = [](double x) { return x * (x - 1.0) / 2.0; };
    double index = 0.0;
    for (const auto& [key, count] : joint) index += pairs(count);
    double sum_rows = 0.0;
    for (const auto& [key, count] : rows) sum_rows += pairs(count);
    double sum_cols = 0.0;
    for (const auto& [key, count] : cols) sum_cols += pairs(count);
    const double expected = sum_rows * sum_cols / pairs(n);
    const double maximum = 0.5 * (sum_rows + sum_cols);
    if (maximum == expected) return index == expected ? 1.0 : 0.0;
    return (index - expected) / (maximum - expected);
}

}  // namespace deli::oracle
