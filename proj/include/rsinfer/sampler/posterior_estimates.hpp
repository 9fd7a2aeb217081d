#pragma once

#include "rsinfer/core/sample_bundle.hpp"
#include "rsinfer/core/support.hpp"
#include "rsinfer/sampler/algorithm_one.hpp"

#include <utility>
#include <vector>

namespace rsinfer {

// (RSD, capacity) of a box query over the discrete posterior samples:
// fraction contained in the box, fraction hitting it. Matches the bundle
// estimators on the materialized point sets, just without the copies.
std::pair<double, double> posterior_bounds(
    const std::vector<PosteriorDiscreteSample>& samples, const AtomSet& atoms,
    const IntervalBox& q);

// Lower/upper cdf estimates along one coordinate: for each threshold x,
// P((-inf, x]) and T((-inf, x]) of that marginal.
struct CdfBand {
    Vec thresholds;
    Vec p_hat;  // lower envelope (containment)
    Vec t_hat;  // upper envelope (hit)
};

CdfBand cdf_bounds(const std::vector<PosteriorDiscreteSample>& samples,
                   const AtomSet& atoms, std::size_t dim_index, Vec thresholds);

// Selection expectation of the discrete posterior: mean support function per
// direction. Equals core selection_expectation on the materialized bundle.
Polytope selection_expectation_from_samples(
    const std::vector<PosteriorDiscreteSample>& samples, const AtomSet& atoms,
    const std::vector<Direction>& dirs);

// Points realizations of the samples, for the generic bundle machinery.
SampleBundle materialize_samples(const std::vector<PosteriorDiscreteSample>& samples,
                                 const AtomSet& atoms);

void write_cdf_band_csv(const CdfBand& band, std::size_t dim_index,
                        std::ostream& os);

}  // namespace rsinfer
