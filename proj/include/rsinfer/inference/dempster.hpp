#pragma once

#include "rsinfer/common.hpp"
#include "rsinfer/models/mass_function.hpp"

namespace rsinfer {

struct CombinationResult {
    MassFunction combined;
    double conflict;  // K, the mass assigned to empty intersections
};

// Dempster's rule: intersect all focal pairs, drop empties, renormalize by
// 1 / (1 - K). Intersections equal within 1e-12 are merged. The combined
// focal list is sorted canonically and partial products are summed in
// ascending order, so the result is bit-identical under argument swap.
// Throws TotalConflictError when K >= 1 - 1e-12.
CombinationResult dempster_combine(const MassFunction& m1, const MassFunction& m2);

}  // namespace rsinfer
