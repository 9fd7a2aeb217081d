#include "rsinfer/core/hausdorff.hpp"

#include "rsinfer/kernels/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace rsinfer {

namespace {

// Column-major view of a point cloud for the distance kernel.
struct Cloud {
    std::vector<Vec> cols;
    std::vector<const double*> ptrs;
    std::size_t n = 0;

    explicit Cloud(const std::vector<Vec>& pts) {
        n = pts.size();
        const std::size_t d = pts.empty() ? 0 : pts[0].size();
        cols.assign(d, Vec(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < d; ++k) cols[k][i] = pts[i][k];
        for (auto& c : cols) ptrs.push_back(c.data());
    }

    double min_dist(const Vec& x) const {
        return std::sqrt(kernels::min_sq_dist(ptrs.data(), cols.size(), n, x.data()));
    }
};

double dist_point_to_box(const Vec& x, const IntervalBox& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = std::max({0.0, b.lo[i] - x[i], x[i] - b.hi[i]});
        s += d * d;
    }
    return std::sqrt(s);
}

double dist_point_to_union(const Vec& x, const std::vector<IntervalBox>& boxes) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& b : boxes) best = std::min(best, dist_point_to_box(x, b));
    return best;
}

// sup over points of distance to the box side
double directed_points_to_boxes(const std::vector<Vec>& pts,
                                const std::vector<IntervalBox>& boxes) {
    double worst = 0.0;
    for (const auto& p : pts) worst = std::max(worst, dist_point_to_union(p, boxes));
    return worst;
}

struct Cell {
    IntervalBox box;
    double ub;
    bool operator<(const Cell& o) const { return ub < o.ub; }
};

double half_diag(const IntervalBox& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < b.dim(); ++i) {
        const double w = 0.5 * (b.hi[i] - b.lo[i]);
        s += w * w;
    }
    return std::sqrt(s);
}

Vec center(const IntervalBox& b) {
    Vec c(b.dim());
    for (std::size_t i = 0; i < b.dim(); ++i) c[i] = 0.5 * (b.lo[i] + b.hi[i]);
    return c;
}

// sup over the box union of the distance to the point cloud, by
// branch-and-bound: the cell center gives a lower bound, center distance
// plus half diagonal an upper bound.
double directed_boxes_to_points(const std::vector<IntervalBox>& boxes,
                                const Cloud& cloud, double tol) {
    std::priority_queue<Cell> heap;
    double lb = 0.0;
    auto push = [&](IntervalBox b) {
        const Vec c = center(b);
        const double d = cloud.min_dist(c);
        const double hd = half_diag(b);
        lb = std::max(lb, d);
        heap.push(Cell{std::move(b), d + hd});
    };
    for (const auto& b : boxes) push(b);
    while (!heap.empty()) {
        Cell top = heap.top();
        heap.pop();
        if (top.ub <= lb + tol) break;
        std::size_t wd = 0;
        double ww = -1.0;
        for (std::size_t i = 0; i < top.box.dim(); ++i) {
            const double w = top.box.hi[i] - top.box.lo[i];
            if (w > ww) {
                ww = w;
                wd = i;
            }
        }
        const double mid = 0.5 * (top.box.lo[wd] + top.box.hi[wd]);
        IntervalBox left = top.box, right = top.box;
        left.hi[wd] = mid;
        right.lo[wd] = mid;
        push(std::move(left));
        push(std::move(right));
    }
    return lb;
}

double points_vs_points(const std::vector<Vec>& a, const std::vector<Vec>& b) {
    const Cloud ca(a), cb(b);
    double worst = 0.0;
    for (const auto& p : a) worst = std::max(worst, cb.min_dist(p));
    for (const auto& p : b) worst = std::max(worst, ca.min_dist(p));
    return worst;
}

std::vector<IntervalBox> boxes_of(const SetRealization& s) {
    if (s.is_box()) return {s.as_box()};
    return s.as_box_union().boxes;
}

} // namespace

double hausdorff_distance(const SetRealization& a, const SetRealization& b,
                          double tol) {
    if (a.is_empty() || b.is_empty())
        throw ConfigError("hausdorff distance needs nonempty sets");
    if (a.is_points() && b.is_points())
        return points_vs_points(a.as_points().pts, b.as_points().pts);
    if (a.is_points() || b.is_points()) {
        const auto& pts = (a.is_points() ? a : b).as_points().pts;
        const auto boxes = boxes_of(a.is_points() ? b : a);
        const Cloud cloud(pts);
        return std::max(directed_points_to_boxes(pts, boxes),
                        directed_boxes_to_points(boxes, cloud, tol));
    }
    throw ConfigError("hausdorff distance for box-vs-box pairs is not supported");
}

}  // namespace rsinfer
