#pragma once

#include "rsinfer/core/sample_bundle.hpp"
#include "rsinfer/core/set_realization.hpp"

#include <vector>

namespace rsinfer {

struct Direction {
    Vec nu; // unit vector

    explicit Direction(Vec v);
};

// Exact supremum of nu . x over the set.
double support_function(const SetRealization& s, const Direction& d);

// Deterministic direction grids: {+1,-1} in 1-D, equally spaced in 2-D, a
// low-discrepancy sphere covering above that.
std::vector<Direction> direction_grid(std::size_t ndim, std::size_t count);

// Convex polytope as a half-space list {x : nu_k . x <= offset_k}.
struct Polytope {
    std::vector<Direction> dirs;
    Vec offsets;

    std::size_t dim() const { return dirs.empty() ? 0 : dirs[0].nu.size(); }
};

bool polytope_contains(const Polytope& p, const Vec& x, double tol = 1e-9);

// Selection expectation estimate: h(nu) = mean of support functions over the
// bundle; the polytope is the intersection of the induced half-spaces and
// tightens as the direction grid densifies.
Polytope selection_expectation(const SampleBundle& b,
                               const std::vector<Direction>& dirs);

// Vertices of a 2-D polytope, counterclockwise (clipping a bounding square).
std::vector<Vec> polytope_vertices_2d(const Polytope& p);

}  // namespace rsinfer
