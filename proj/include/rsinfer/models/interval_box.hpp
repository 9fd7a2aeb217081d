#pragma once

#include "rsinfer/common.hpp"

#include <limits>
#include <optional>

namespace rsinfer {

// Axis-aligned box [lo_1,hi_1] x ... x [lo_n,hi_n]. Degenerate dimensions
// (lo == hi) are allowed; infinite endpoints are allowed for query boxes.
struct IntervalBox {
    Vec lo, hi;

    IntervalBox() = default;
    IntervalBox(Vec lo_in, Vec hi_in) : lo(std::move(lo_in)), hi(std::move(hi_in)) {
        if (lo.size() != hi.size() || lo.empty())
            throw ConfigError("interval box needs matching nonempty lo/hi");
        for (std::size_t i = 0; i < lo.size(); ++i)
            if (!(lo[i] <= hi[i]))
                throw ConfigError("interval box needs lo <= hi in every dimension");
    }

    static IntervalBox point(Vec x) {
        Vec cp = x;
        return IntervalBox(std::move(x), std::move(cp));
    }

    static IntervalBox whole(std::size_t dim) {
        const double inf = std::numeric_limits<double>::infinity();
        return IntervalBox(Vec(dim, -inf), Vec(dim, inf));
    }

    std::size_t dim() const { return lo.size(); }

    bool is_point() const {
        for (std::size_t i = 0; i < lo.size(); ++i)
            if (lo[i] != hi[i]) return false;
        return true;
    }

    bool contains_point(const Vec& x) const {
        for (std::size_t i = 0; i < lo.size(); ++i)
            if (x[i] < lo[i] || x[i] > hi[i]) return false;
        return true;
    }

    // *this subset of q
    bool subset_of(const IntervalBox& q) const {
        for (std::size_t i = 0; i < lo.size(); ++i)
            if (lo[i] < q.lo[i] || hi[i] > q.hi[i]) return false;
        return true;
    }

    bool intersects(const IntervalBox& q) const {
        for (std::size_t i = 0; i < lo.size(); ++i)
            if (hi[i] < q.lo[i] || lo[i] > q.hi[i]) return false;
        return true;
    }

    std::optional<IntervalBox> intersect(const IntervalBox& q) const {
        Vec l(lo.size()), h(lo.size());
        for (std::size_t i = 0; i < lo.size(); ++i) {
            l[i] = std::max(lo[i], q.lo[i]);
            h[i] = std::min(hi[i], q.hi[i]);
            if (l[i] > h[i]) return std::nullopt;
        }
        return IntervalBox(std::move(l), std::move(h));
    }

    bool approx_equal(const IntervalBox& q, double tol) const {
        if (q.dim() != dim()) return false;
        for (std::size_t i = 0; i < lo.size(); ++i)
            if (std::abs(lo[i] - q.lo[i]) > tol || std::abs(hi[i] - q.hi[i]) > tol)
                return false;
        return true;
    }
};

}  // namespace rsinfer
