#include "rsinfer/core/support.hpp"

#include "rsinfer/models/distribution.hpp"

#include <algorithm>
#include <cmath>

namespace rsinfer {

Direction::Direction(Vec v) : nu(std::move(v)) {
    if (nu.empty()) throw ConfigError("direction needs at least one component");
    double n2 = 0.0;
    for (double c : nu) n2 += c * c;
    if (!(n2 > 0.0) || !std::isfinite(n2))
        throw ConfigError("direction must be a nonzero finite vector");
    const double inv = 1.0 / std::sqrt(n2);
    for (double& c : nu) c *= inv;
}

double support_function(const SetRealization& s, const Direction& d) {
    if (s.is_empty()) throw ConfigError("support function of the empty set");
    const Vec& nu = d.nu;
    if (s.is_points()) {
        double best = -std::numeric_limits<double>::infinity();
        for (const auto& p : s.as_points().pts) {
            double dp = 0.0;
            for (std::size_t i = 0; i < nu.size(); ++i) dp += nu[i] * p[i];
            best = std::max(best, dp);
        }
        return best;
    }
    auto box_support = [&nu](const IntervalBox& b) {
        double v = 0.0;
        for (std::size_t i = 0; i < nu.size(); ++i) {
            if (nu[i] > 0.0)
                v += nu[i] * b.hi[i];
            else if (nu[i] < 0.0)
                v += nu[i] * b.lo[i];
        }
        return v;
    };
    if (s.is_box()) return box_support(s.as_box());
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& b : s.as_box_union().boxes) best = std::max(best, box_support(b));
    return best;
}

std::vector<Direction> direction_grid(std::size_t ndim, std::size_t count) {
    if (ndim == 0 || count == 0) throw ConfigError("direction grid needs ndim, count >= 1");
    std::vector<Direction> dirs;
    if (ndim == 1) {
        dirs.emplace_back(Vec{1.0});
        dirs.emplace_back(Vec{-1.0});
        return dirs;
    }
    if (ndim == 2) {
        dirs.reserve(count);
        for (std::size_t k = 0; k < count; ++k) {
            const double th = 2.0 * 3.14159265358979323846 * double(k) / double(count);
            dirs.emplace_back(Vec{std::cos(th), std::sin(th)});
        }
        return dirs;
    }
    // deterministic low-discrepancy covering: an additive recurrence in the
    // unit cube pushed through the normal quantile and normalized
    const double g = [ndim] {
        double x = 1.5;
        for (int it = 0; it < 64; ++it) x = std::pow(1.0 + x, 1.0 / double(ndim + 1));
        return x;
    }();
    Vec alpha(ndim);
    double a = 1.0;
    for (std::size_t i = 0; i < ndim; ++i) {
        a /= g;
        alpha[i] = a;
    }
    const auto std_normal = Distribution::normal(0.0, 1.0);
    dirs.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        Vec v(ndim);
        for (std::size_t i = 0; i < ndim; ++i) {
            double u = std::fmod(0.5 + double(k + 1) * alpha[i], 1.0);
            u = std::clamp(u, 1e-6, 1.0 - 1e-6);
            v[i] = std_normal.quantile(u);
        }
        dirs.emplace_back(std::move(v));
    }
    return dirs;
}

bool polytope_contains(const Polytope& p, const Vec& x, double tol) {
    for (std::size_t k = 0; k < p.dirs.size(); ++k) {
        double dp = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) dp += p.dirs[k].nu[i] * x[i];
        if (dp > p.offsets[k] + tol) return false;
    }
    return true;
}

Polytope selection_expectation(const SampleBundle& b,
                               const std::vector<Direction>& dirs) {
    if (dirs.empty()) throw ConfigError("selection expectation needs directions");
    Polytope out;
    out.dirs = dirs;
    out.offsets.assign(dirs.size(), 0.0);
    for (std::size_t k = 0; k < dirs.size(); ++k) {
        double sum = 0.0;
        for (const auto& s : b.realizations) sum += support_function(s, dirs[k]);
        out.offsets[k] = sum / double(b.size());
    }
    return out;
}

std::vector<Vec> polytope_vertices_2d(const Polytope& p) {
    if (p.dim() != 2) throw ConfigError("vertex extraction is 2-D only");
    double r = 1.0;
    for (double h : p.offsets) r = std::max(r, std::abs(h));
    r = 2.0 * r + 1.0;
    std::vector<Vec> poly = {{-r, -r}, {r, -r}, {r, r}, {-r, r}};
    for (std::size_t k = 0; k < p.dirs.size() && !poly.empty(); ++k) {
        const Vec& nu = p.dirs[k].nu;
        const double h = p.offsets[k];
        std::vector<Vec> next;
        const std::size_t n = poly.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Vec& aPt = poly[i];
            const Vec& bPt = poly[(i + 1) % n];
            const double da = nu[0] * aPt[0] + nu[1] * aPt[1] - h;
            const double db = nu[0] * bPt[0] + nu[1] * bPt[1] - h;
            if (da <= 0.0) next.push_back(aPt);
            if ((da < 0.0 && db > 0.0) || (da > 0.0 && db <= 0.0)) {
                const double den = da - db;
                if (std::abs(den) > 1e-300) {
                    const double t = da / den;
                    next.push_back(Vec{aPt[0] + t * (bPt[0] - aPt[0]),
                                       aPt[1] + t * (bPt[1] - aPt[1])});
                }
            }
        }
        poly = std::move(next);
    }
    // drop near-duplicate consecutive vertices
    std::vector<Vec> out;
    const double tol = 1e-10 * r;
    for (const auto& v : poly) {
        if (!out.empty() && std::abs(out.back()[0] - v[0]) <= tol &&
            std::abs(out.back()[1] - v[1]) <= tol)
            continue;
        out.push_back(v);
    }
    while (out.size() > 1 && std::abs(out.front()[0] - out.back()[0]) <= tol &&
           std::abs(out.front()[1] - out.back()[1]) <= tol)
        out.pop_back();
    return out;
}

}  // namespace rsinfer
