#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <queue>
#include <vector>

namespace deli::quadrature {

struct Result {
    double value = 0.0;
    double error = 0.0;
    std::size_t intervals = 0;
    bool converged = false;
};

namespace detail {

// Gauss-Kronrod 7/15 nodes on [-1, 1]: abscissae, Kronrod weights, Gauss weights
// (the Gauss weight is zero on the Kronrod-only nodes).
inline constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrod = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 8> kGauss = {
    0.0, 0.129484966168869693270611432679082, 0.0, 0.279705391489276667901467771423780,
    0.0, 0.381830050505118944950369775488975, 0.0, 0.417959183673469387755102040816327};

struct Piece {
    double lo;
    double hi;
    double value;
    double error;
    bool operator<(const Piece& other) const { return error < other.error; }
};

template <class F>
Piece gauss_kronrod15(const F& f, double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double fc = f(mid);
    double kronrod = kKronrod[7] * fc;
    double gauss = kGauss[7] * fc;
    for (std::size_t i = 0; i < 7; ++i) {
        const double dx = half * kNodes[i];
        const double sum = f(mid - dx) + f(mid + dx);
        kronrod += kKronrod[i] * sum;
        gauss += kGauss[i] * sum;
    }
    return {lo, hi, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (7, 15) integration of f over [lo, hi].
///
/// The interval with the largest error estimate is bisected until the summed
/// estimate drops below max(abs_tol, rel_tol * |I|) or `max_intervals` pieces exist.
template <class F>
Result integrate(const F& f, double lo, double hi, double rel_tol = 1e-8,
                 double abs_tol = 1e-14, std::size_t max_intervals = std::size_t{1} << 16) {
    Result out;
    if (!(hi > lo)) {
        out.converged = true;
        return out;
    }
    std::priority_queue<detail::Piece> pieces;
    const detail::Piece first = detail::gauss_kronrod15(f, lo, hi);
    pieces.push(first);
    double value = first.value;
    double error = first.error;
    while (error > std::max(abs_tol, rel_tol * std::abs(value)) && pieces.size() < max_intervals) {
        const detail::Piece worst = pieces.top();
        pieces.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (!(mid > worst.lo && mid < worst.hi)) {
            pieces.push(worst);  // interval exhausted at machine precision
            break;
        }
        const detail::Piece left = detail::gauss_kronrod15(f, worst.lo, mid);
        const detail::Piece right = detail::gauss_kronrod15(f, mid, worst.hi);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        pieces.push(left);
        pieces.push(right);
    }
    // Re-sum to shed the drift of the running updates.
    value = 0.0;
    error = 0.0;
    out.intervals = pieces.size();
    while (!pieces.empty()) {
        value += pieces.top().value;
        error += pieces.top().error;
        pieces.pop();
    }
    out.value = value;
    out.error = error;
    out.converged = error <= std::max(abs_tol, rel_tol * std::abs(value));
    return out;
}

}  // namespace deli::quadrature
