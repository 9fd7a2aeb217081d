#include "rsinfer/inference/dempster.hpp"

#include <algorithm>
#include <numeric>

namespace rsinfer {

namespace {

int kind_rank(const SetRealization& s) {
    if (s.is_points()) return 0;
    if (s.is_box()) return 1;
    return 2;
}

bool box_less(const IntervalBox& a, const IntervalBox& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.hi < b.hi;
}

// Strict weak order on canonicalized sets; used to fix the focal order of a
// combination independently of argument order.
bool set_less(const SetRealization& a, const SetRealization& b) {
    const int ra = kind_rank(a), rb = kind_rank(b);
    if (ra != rb) return ra < rb;
    switch (ra) {
        case 0:
            return a.as_points().pts < b.as_points().pts;
        case 1:
            return box_less(a.as_box(), b.as_box());
        default: {
            const auto& ba = a.as_box_union().boxes;
            const auto& bb = b.as_box_union().boxes;
            return std::lexicographical_compare(ba.begin(), ba.end(), bb.begin(),
                                                bb.end(), box_less);
        }
    }
}

double sorted_sum(std::vector<double>& terms) {
    std::sort(terms.begin(), terms.end());
    return std::accumulate(terms.begin(), terms.end(), 0.0);
}

}  // namespace

CombinationResult dempster_combine(const MassFunction& m1, const MassFunction& m2) {
    if (m1.dim() != m2.dim())
        throw ConfigError("dempster_combine: dimension mismatch");

    struct Cell {
        SetRealization set;
        std::vector<double> products;
    };
    std::vector<Cell> cells;
    std::vector<double> empties;

    for (std::size_t i = 0; i < m1.size(); ++i) {
        for (std::size_t j = 0; j < m2.size(); ++j) {
            const double w = m1.mass[i] * m2.mass[j];
            SetRealization inter = canonicalize(intersect(m1.focal[i], m2.focal[j]));
            if (inter.is_empty()) {
                empties.push_back(w);
                continue;
            }
            bool merged = false;
            for (Cell& c : cells) {
                if (set_equal(c.set, inter)) {
                    // Keep the smaller representative so near-equal
                    // intersections resolve the same way under argument swap.
                    if (set_less(inter, c.set)) c.set = std::move(inter);
                    c.products.push_back(w);
                    merged = true;
                    break;
                }
            }
            if (!merged) cells.push_back(Cell{std::move(inter), {w}});
        }
    }

    const double conflict = sorted_sum(empties);
    if (conflict >= 1.0 - 1e-12)
        throw TotalConflictError("dempster_combine: total conflict (K = " +
                                 std::to_string(conflict) + ")");

    std::sort(cells.begin(), cells.end(),
              [](const Cell& a, const Cell& b) { return set_less(a.set, b.set); });

    std::vector<SetRealization> focal;
    Vec mass;
    focal.reserve(cells.size());
    mass.reserve(cells.size());
    const double norm = 1.0 - conflict;
    for (Cell& c : cells) {
        focal.push_back(std::move(c.set));
        mass.push_back(sorted_sum(c.products) / norm);
    }
    return CombinationResult{MassFunction(std::move(focal), std::move(mass)), conflict};
}

}  // namespace rsinfer
