#pragma once

#include "rsinfer/core/support.hpp"
#include "rsinfer/inference/density.hpp"
#include "rsinfer/sampler/algorithm_one.hpp"
#include "rsinfer/sampler/posterior_estimates.hpp"

#include <vector>

namespace rsinfer {

struct MseConfig {
    std::vector<std::size_t> kappas;
    std::size_t kappa_inf = 0;  // 0 means 10 * max(kappas)
    std::size_t replications = 20;
    std::size_t n_prior = 50;
    std::size_t n_eps = 20;
    std::size_t burn_in = 500;
    std::uint64_t seed = 0;
    std::vector<Direction> dirs;  // empty means a 16-direction grid
    int threads = 1;
};

struct MseRow {
    std::size_t kappa;
    std::size_t dir_index;
    double mse;       // RMS gap to the kappa_inf reference over replications
    bool normalized;  // divided by |reference| unless the reference is ~0
};

// Support-function convergence study. The prior realizations and noise draws
// are drawn once and shared by the reference and every replication, so the
// only randomness across rows is the atom redraw; kappa = kappa_inf with the
// reference seed therefore reproduces the reference exactly. kappa_inf must
// be at least 5x the largest kappa.
std::vector<MseRow> mse_convergence(const UnnormalizedDensity& prior_density,
                                    const PriorSpec& prior,
                                    const MeasurementModel& mm, MseConfig cfg);

// Reference support values h_inf(nu) used by the table (one per direction),
// computed the same way; exposed for reporting.
Vec mse_reference_offsets(const UnnormalizedDensity& prior_density,
                          const PriorSpec& prior, const MeasurementModel& mm,
                          const MseConfig& cfg);

// d_H between prior_set and kappa density draws clipped to it. A single
// chain of max(kappas) states is drawn and prefixes stand in for the smaller
// kappas, which makes the table nonincreasing by construction. Rows with no
// draw inside prior_set report +inf.
std::vector<std::pair<std::size_t, double>> hausdorff_convergence(
    const SetRealization& prior_set, const UnnormalizedDensity& density,
    const std::vector<std::size_t>& kappas, std::uint64_t seed,
    std::size_t burn_in = 500);

}  // namespace rsinfer
