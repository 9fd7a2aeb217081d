#pragma once

#include "rsinfer/core/set_realization.hpp"

namespace rsinfer {

// Hausdorff distance under the Euclidean metric. Supported pairings: points
// vs points (exact) and box/box-union vs points (branch-and-bound on the
// box side, accurate to tol). Box-vs-box pairs are rejected.
double hausdorff_distance(const SetRealization& a, const SetRealization& b,
                          double tol = 1e-6);

}  // namespace rsinfer
