#include "rsinfer/sampler/convergence.hpp"

#include "rsinfer/core/hausdorff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rsinfer {

namespace {

// Support offsets of one full pipeline run: chain -> posterior samples ->
// mean support function per direction. The Algorithm-1 stage always reuses
// algo_seed, so its realization and noise draws are shared across runs.
Vec pipeline_offsets(const UnnormalizedDensity& prior_density,
                     const PriorSpec& prior, const MeasurementModel& mm,
                     const MseConfig& cfg, const std::vector<Direction>& dirs,
                     std::size_t kappa, std::uint64_t chain_seed) {
    McmcConfig mc;
    mc.kappa = kappa;
    mc.burn_in = cfg.burn_in;
    mc.seed = chain_seed;
    AtomSet atoms = mh_sample(prior_density, mm, mc);

    AlgoOneConfig ac;
    ac.n_prior = cfg.n_prior;
    ac.n_eps = cfg.n_eps;
    ac.seed = cfg.seed;
    ac.threads = cfg.threads;
    AlgoOneResult res = algorithm_one(atoms, prior, mm, ac);

    return selection_expectation_from_samples(res.samples, atoms, dirs).offsets;
}

}  // namespace

std::vector<MseRow> mse_convergence(const UnnormalizedDensity& prior_density,
                                    const PriorSpec& prior,
                                    const MeasurementModel& mm, MseConfig cfg) {
    if (cfg.kappas.empty()) throw ConfigError("mse convergence: no kappas");
    for (std::size_t k : cfg.kappas)
        if (k < 1) throw ConfigError("mse convergence: kappa must be >= 1");
    if (cfg.replications < 1)
        throw ConfigError("mse convergence: replications must be >= 1");
    const std::size_t kmax = *std::max_element(cfg.kappas.begin(), cfg.kappas.end());
    if (cfg.kappa_inf == 0) cfg.kappa_inf = 10 * kmax;
    // The self-reference row kappa == kappa_inf is exempt from the headroom
    // requirement; everything else needs kappa_inf >= 5x.
    std::size_t kcheck = 0;
    for (std::size_t k : cfg.kappas)
        if (k != cfg.kappa_inf) kcheck = std::max(kcheck, k);
    if (cfg.kappa_inf < 5 * kcheck)
        throw ConfigError("mse convergence: kappa_inf must be at least 5x the "
                          "largest kappa");
    std::vector<Direction> dirs =
        cfg.dirs.empty() ? direction_grid(prior.dim(), 16) : cfg.dirs;

    const std::uint64_t ref_seed = derive_seed(cfg.seed, seed_stream::kMseReference);
    const Vec href =
        pipeline_offsets(prior_density, prior, mm, cfg, dirs, cfg.kappa_inf, ref_seed);

    const std::uint64_t rep_base =
        derive_seed(cfg.seed, seed_stream::kMseReplication);
    std::vector<MseRow> rows;
    rows.reserve(cfg.kappas.size() * dirs.size());
    for (std::size_t kappa : cfg.kappas) {
        // kappa_inf is its own reference: every replication would repeat the
        // reference chain bit for bit, so one run suffices.
        const std::size_t reps = kappa == cfg.kappa_inf ? 1 : cfg.replications;
        std::vector<Vec> gaps(dirs.size());
        for (std::size_t r = 0; r < reps; ++r) {
            const std::uint64_t chain_seed =
                kappa == cfg.kappa_inf
                    ? ref_seed
                    : derive_seed(rep_base, kappa * 1000003ull + r);
            const Vec h =
                pipeline_offsets(prior_density, prior, mm, cfg, dirs, kappa,
                                 chain_seed);
            for (std::size_t t = 0; t < dirs.size(); ++t)
                gaps[t].push_back(h[t] - href[t]);
        }
        for (std::size_t t = 0; t < dirs.size(); ++t) {
            double s = 0.0;
            for (double g : gaps[t]) s += g * g;
            double rms = std::sqrt(s / static_cast<double>(reps));
            const bool norm = std::abs(href[t]) > 1e-12;
            if (norm) rms /= std::abs(href[t]);
            rows.push_back(MseRow{kappa, t, rms, norm});
        }
    }
    return rows;
}

Vec mse_reference_offsets(const UnnormalizedDensity& prior_density,
                          const PriorSpec& prior, const MeasurementModel& mm,
                          const MseConfig& cfg_in) {
    MseConfig cfg = cfg_in;
    if (cfg.kappas.empty()) throw ConfigError("mse convergence: no kappas");
    const std::size_t kmax = *std::max_element(cfg.kappas.begin(), cfg.kappas.end());
    if (cfg.kappa_inf == 0) cfg.kappa_inf = 10 * kmax;
    std::vector<Direction> dirs =
        cfg.dirs.empty() ? direction_grid(prior.dim(), 16) : cfg.dirs;
    return pipeline_offsets(prior_density, prior, mm, cfg, dirs, cfg.kappa_inf,
                            derive_seed(cfg.seed, seed_stream::kMseReference));
}

std::vector<std::pair<std::size_t, double>> hausdorff_convergence(
    const SetRealization& prior_set, const UnnormalizedDensity& density,
    const std::vector<std::size_t>& kappas, std::uint64_t seed,
    std::size_t burn_in) {
    if (kappas.empty()) throw ConfigError("hausdorff convergence: no kappas");
    for (std::size_t k : kappas)
        if (k < 1) throw ConfigError("hausdorff convergence: kappa must be >= 1");
    if (prior_set.is_empty())
        throw ConfigError("hausdorff convergence: empty prior set");

    const std::size_t kmax = *std::max_element(kappas.begin(), kappas.end());
    McmcConfig mc;
    mc.kappa = kmax;
    mc.burn_in = burn_in;
    mc.seed = derive_seed(seed, seed_stream::kHausdorffDraw);
    const AtomSet atoms = mh_sample(density, mc);

    std::vector<std::pair<std::size_t, double>> rows;
    rows.reserve(kappas.size());
    for (std::size_t kappa : kappas) {
        std::vector<Vec> kept;
        for (std::size_t t = 0; t < kappa; ++t)
            if (contains_point(prior_set, atoms.atoms[t]))
                kept.push_back(atoms.atoms[t]);
        if (kept.empty()) {
            rows.emplace_back(kappa, std::numeric_limits<double>::infinity());
            continue;
        }
        rows.emplace_back(
            kappa, hausdorff_distance(prior_set, SetRealization::points(kept)));
    }
    return rows;
}

}  // namespace rsinfer
