#pragma once

#include "rsinfer/common.hpp"
#include "rsinfer/core/set_realization.hpp"

#include <utility>
#include <vector>

namespace rsinfer {

// Dempster-Shafer evidence: focal sets with positive masses summing to one.
// Masses are renormalized only when the sum is within 1e-9 of one; anything
// further off is rejected as a data error.
struct MassFunction {
    std::vector<SetRealization> focal;
    Vec mass;

    MassFunction(std::vector<SetRealization> focal_in, Vec mass_in);

    std::size_t size() const { return focal.size(); }
    std::size_t dim() const { return focal.empty() ? 0 : focal[0].dim(); }
};

// Random-set embedding: cumulative-mass partition of [0,1]. u = 0 maps to the
// first focal set.
const SetRealization& mass_to_random_set(const MassFunction& m, double u);

// (Bel, Pl) of a query set.
std::pair<double, double> bel_pl(const MassFunction& m, const SetRealization& query);

}  // namespace rsinfer
