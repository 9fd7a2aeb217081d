#pragma once

#include "rsinfer/common.hpp"
#include "rsinfer/inference/measurement.hpp"
#include "rsinfer/models/interval_box.hpp"
#include "rsinfer/models/prior.hpp"

#include <functional>

namespace rsinfer {

// Unnormalized density over points. Nothing here attempts to normalize: the
// MH sampler only ever takes ratios, and the normalizing constant of the
// posterior transform is unknown anyway. support_hint bounds the region of
// nonzero mass (used to seed chains and to place plotting grids).
struct UnnormalizedDensity {
    std::function<double(const Vec&)> evaluator;
    IntervalBox support_hint;

    double operator()(const Vec& x) const { return evaluator(x); }
    std::size_t dim() const { return support_hint.dim(); }
};

// Capacity transform of the prior random set.
UnnormalizedDensity capacity_transform_prior(const PriorSpec& spec);

// Posterior transform: prior density times interval likelihood. Evaluates the
// prior factor first and skips the forward model wherever it is zero, so the
// model is never probed outside the prior support.
UnnormalizedDensity posterior_capacity_density(const UnnormalizedDensity& prior,
                                               const MeasurementModel& mm);

}  // namespace rsinfer
