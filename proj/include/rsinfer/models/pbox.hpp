#pragma once

#include "rsinfer/common.hpp"
#include "rsinfer/models/distribution.hpp"
#include "rsinfer/models/interval_box.hpp"

#include <vector>

namespace rsinfer {

// Per-dimension cdf bound pair. upper.cdf(x) >= lower.cdf(x) must hold
// pointwise; the upper cdf therefore belongs to the stochastically smaller
// distribution and supplies the left interval endpoint under inversion.
struct PBoxDim {
    Distribution upper;
    Distribution lower;
};

struct PBox {
    std::vector<PBoxDim> dims;

    explicit PBox(std::vector<PBoxDim> dims_in);
    std::size_t dim() const { return dims.size(); }
};

// Quantile-inversion embedding: dimension i maps u_i to the interval
// [upper_i^{-1}(u_i), lower_i^{-1}(u_i)]. u components must be strictly
// inside (0,1); quantiles at 0/1 can be unbounded.
IntervalBox pbox_to_random_set(const PBox& p, const Vec& u);

}  // namespace rsinfer
