#pragma once

#include "rsinfer/common.hpp"
#include "rsinfer/inference/density.hpp"
#include "rsinfer/inference/measurement.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace rsinfer {

struct McmcConfig {
    std::size_t kappa = 1000;
    std::size_t burn_in = 1000;
    // Random-walk step per dimension; empty means tune by pilot runs until
    // the acceptance rate lands in [0.2, 0.4].
    Vec proposal_scale;
    std::uint64_t seed = 0;
    // Chain start; empty means rejection-draw a point of positive target
    // density from the support box.
    Vec init;
};

struct AtomSet {
    std::vector<Vec> atoms;
    std::vector<Vec> responses;  // one per atom; empty vectors without a model
    double acceptance_rate = 0.0;
    Vec scale_used;              // proposal scale after tuning
    std::string warning;         // set when the acceptance rate looks sick
};

// Gaussian random-walk Metropolis targeting the (unnormalized) density.
// Returns the kappa post-burn-in states; deterministic given cfg.seed.
// Responses stay empty: use the overload below when a forward model is in
// play.
AtomSet mh_sample(const UnnormalizedDensity& target, const McmcConfig& cfg);

// Posterior variant: the target is prior(x) * likelihood(h(x)). The forward
// model runs once per proposal, the prior factor gates it (no call where the
// prior vanishes), and the response of the current state is recorded with
// each atom so later stages never need the model again.
AtomSet mh_sample(const UnnormalizedDensity& prior, const MeasurementModel& mm,
                  const McmcConfig& cfg);

// CSV round trip: header `index,x0..,r0..`, doubles at full precision.
void write_atoms_csv(const AtomSet& a, std::ostream& os);
AtomSet read_atoms_csv(std::istream& is);

}  // namespace rsinfer
