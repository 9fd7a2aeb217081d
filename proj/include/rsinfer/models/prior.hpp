#pragma once

#include "rsinfer/common.hpp"
#include "rsinfer/core/set_realization.hpp"
#include "rsinfer/models/distribution.hpp"
#include "rsinfer/models/mass_function.hpp"
#include "rsinfer/models/pbox.hpp"

#include <variant>
#include <vector>

namespace rsinfer {

struct FixedInterval {
    double lo, hi;
};

// One prior dimension: p-box, 1-D mass function, random variable, or a fixed
// interval. Dimensions are independent; a realization of the full prior is
// the Cartesian product of the per-dimension draws.
using PriorDim = std::variant<PBoxDim, MassFunction, Distribution, FixedInterval>;

struct PriorSpec {
    std::vector<PriorDim> dims;

    explicit PriorSpec(std::vector<PriorDim> dims_in);
    std::size_t dim() const { return dims.size(); }
};

// One draw of the prior random set (advances rng by exactly one u per
// dimension). Result is a Box, or a BoxUnion when point-set focal elements
// fan the product out.
SetRealization prior_realization(const PriorSpec& spec, Rng& rng);

// Seeded single-draw wrapper.
SetRealization prior_sampler(const PriorSpec& spec, std::uint64_t seed);

// Unnormalized capacity transform density: per-dimension product of
// (upper cdf - lower cdf) for p-boxes, mass-weighted indicator sums for mass
// functions, the pdf for random variables, and box indicators for intervals.
double prior_capacity_density(const PriorSpec& spec, const Vec& x);

// Box on which the capacity density lives (quantiles truncated at 1e-9 for
// unbounded families).
IntervalBox prior_support_hint(const PriorSpec& spec);

// True when the dimension yields a single point in every realization.
bool prior_dim_singleton(const PriorDim& d);
// True when every realization of the whole prior is a singleton (pure rv).
bool prior_always_singleton(const PriorSpec& spec);

}  // namespace rsinfer
