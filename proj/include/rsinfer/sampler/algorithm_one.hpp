#pragma once

#include "rsinfer/common.hpp"
#include "rsinfer/inference/measurement.hpp"
#include "rsinfer/models/prior.hpp"
#include "rsinfer/sampler/mcmc.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace rsinfer {

struct AlgoOneConfig {
    std::size_t n_prior = 100;  // prior realizations
    std::size_t n_eps = 100;    // noise draws per realization
    std::uint64_t seed = 0;
    int threads = 1;
};

// One draw of the discrete posterior set: sorted unique references into the
// atom set. Always nonempty.
struct PosteriorDiscreteSample {
    std::vector<std::uint32_t> indices;
};

struct AlgoOneResult {
    std::vector<PosteriorDiscreteSample> samples;
    // origin[s] is the index of the prior realization that produced samples[s]
    // (zero on the pure random-variable path). Lets callers pair each sample
    // with its enclosing realization.
    std::vector<std::uint32_t> origin;
    // Fraction of (realization, noise) candidates that came up empty; the MC
    // estimate of the conflict K. NaN on the pure random-variable path, which
    // has no rejection stage.
    double conflict_hat = 0.0;
    std::size_t n_candidates = 0;
    std::string note;  // diagnostics, e.g. point-valued focal elements
};

// The Monte-Carlo posterior stage: for each prior realization and each noise
// draw, collect the atoms that lie in the realization and whose stored
// responses land in the data intervals. Never touches the forward model.
//
// A prior that is a random variable in every dimension short-circuits: its
// posterior is again a random variable with the atoms' own distribution, so
// the atom list is thinned evenly to at most n_prior * n_eps singletons.
// Mixing singleton dimensions with set-valued ones is rejected, since the
// acceptance probability of such candidates is zero.
AlgoOneResult algorithm_one(const AtomSet& atoms, const PriorSpec& prior,
                            const MeasurementModel& mm, const AlgoOneConfig& cfg);

// Core with caller-supplied draws; realizations and noise vectors are reused
// verbatim (the convergence study shares them across atom redraws).
AlgoOneResult algorithm_one_with_draws(const AtomSet& atoms,
                                       const std::vector<SetRealization>& realizations,
                                       const std::vector<Vec>& noise_draws,
                                       const MeasurementModel& mm, int threads = 1);

// One line per sample: space-separated indices. Round-trips exactly.
void write_sample_stream(const std::vector<PosteriorDiscreteSample>& samples,
                         std::ostream& os);
std::vector<PosteriorDiscreteSample> read_sample_stream(std::istream& is);

}  // namespace rsinfer
