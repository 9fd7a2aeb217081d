#include "rsinfer/sampler/algorithm_one.hpp"

#include "rsinfer/kernels/kernels.hpp"

#include <cmath>
#include <cstring>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>
#include <unordered_set>

namespace rsinfer {

namespace {

// Membership mask of every atom (column-major coords) in one realization.
// The mask comes in pre-filled; Points realizations fall back to row scans.
void realization_mask(const SetRealization& s, const std::vector<Vec>& cols,
                      const std::vector<Vec>& rows, std::size_t n,
                      std::uint64_t* mask, std::vector<std::uint64_t>& tmp) {
    const std::size_t words = kernels::mask_words(n);
    if (s.is_box()) {
        const IntervalBox& b = s.as_box();
        for (std::size_t d = 0; d < cols.size(); ++d)
            kernels::range_mask_and(cols[d].data(), n, b.lo[d], b.hi[d], mask);
        return;
    }
    if (s.is_box_union()) {
        std::vector<std::uint64_t> acc(words, 0);
        for (const IntervalBox& b : s.as_box_union().boxes) {
            tmp.assign(words, 0);
            kernels::mask_fill(tmp.data(), n);
            for (std::size_t d = 0; d < cols.size(); ++d)
                kernels::range_mask_and(cols[d].data(), n, b.lo[d], b.hi[d],
                                        tmp.data());
            kernels::mask_or_inplace(acc.data(), tmp.data(), words);
        }
        kernels::mask_and(mask, acc.data(), words, mask);
        return;
    }
    // Points or Empty: per-row test.
    for (std::size_t k = 0; k < n; ++k) {
        if (!contains_point(s, rows[k]))
            mask[k / 64] &= ~(std::uint64_t{1} << (k % 64));
    }
}

std::string atom_key(const Vec& x) {
    std::string key(x.size() * sizeof(double), '\0');
    std::memcpy(key.data(), x.data(), key.size());
    return key;
}

bool any_point_focal(const PriorSpec& prior) {
    for (const PriorDim& d : prior.dims) {
        if (const auto* m = std::get_if<MassFunction>(&d)) {
            for (const SetRealization& f : m->focal)
                if (f.is_points()) return true;
        }
    }
    return false;
}

}  // namespace

AlgoOneResult algorithm_one_with_draws(const AtomSet& atoms,
                                       const std::vector<SetRealization>& realizations,
                                       const std::vector<Vec>& noise_draws,
                                       const MeasurementModel& mm, int threads) {
    const std::size_t n = atoms.atoms.size();
    if (n == 0) throw ConfigError("algorithm one: empty atom set");
    const std::size_t dim = atoms.atoms[0].size();
    const std::size_t m = mm.m();
    if (atoms.responses.size() != n)
        throw ConfigError("algorithm one: responses not populated");
    for (const Vec& r : atoms.responses)
        if (r.size() != m)
            throw ConfigError(
                "algorithm one: responses not populated (rerun the sampler with "
                "the forward model)");
    if (realizations.empty() || noise_draws.empty())
        throw ConfigError("algorithm one: need at least one realization and one "
                          "noise draw");
    for (const Vec& e : noise_draws)
        if (e.size() != m) throw ConfigError("algorithm one: noise draw dim mismatch");

    const std::size_t n1 = realizations.size();
    const std::size_t n2 = noise_draws.size();
    const std::size_t words = kernels::mask_words(n);

    // Column-major copies for the mask kernels.
    std::vector<Vec> xcols(dim, Vec(n)), rcols(m, Vec(n));
    for (std::size_t k = 0; k < n; ++k) {
        if (atoms.atoms[k].size() != dim)
            throw ConfigError("algorithm one: ragged atom list");
        for (std::size_t d = 0; d < dim; ++d) xcols[d][k] = atoms.atoms[k][d];
        for (std::size_t c = 0; c < m; ++c) rcols[c][k] = atoms.responses[k][c];
    }

    // Exact-duplicate atoms (rejected-move repeats) keep their first index
    // only; folding the keep mask into the realization masks dedups every
    // sample at once.
    std::vector<std::uint64_t> keep(words, 0);
    kernels::mask_fill(keep.data(), n);
    {
        std::unordered_set<std::string> seen;
        seen.reserve(n * 2);
        for (std::size_t k = 0; k < n; ++k)
            if (!seen.insert(atom_key(atoms.atoms[k])).second)
                keep[k / 64] &= ~(std::uint64_t{1} << (k % 64));
    }

    // Response acceptance masks, one per noise draw: resp + eps in Z.
    std::vector<std::vector<std::uint64_t>> eps_mask(
        n2, std::vector<std::uint64_t>(words, 0));
    for (std::size_t j = 0; j < n2; ++j) {
        kernels::mask_fill(eps_mask[j].data(), n);
        for (std::size_t c = 0; c < m; ++c) {
            const Channel& ch = mm.channels[c];
            kernels::range_mask_and(rcols[c].data(), n, ch.z_lo - noise_draws[j][c],
                                    ch.z_hi - noise_draws[j][c], eps_mask[j].data());
        }
    }

    for (const SetRealization& r : realizations)
        if (!r.is_empty() && r.dim() != dim)
            throw ConfigError("algorithm one: realization dim mismatch");

    std::vector<std::vector<PosteriorDiscreteSample>> per_i(n1);
    std::vector<std::size_t> rejects(n1, 0);

    auto work = [&](std::size_t i_begin, std::size_t i_end) {
        std::vector<std::uint64_t> pmask(words), smask(words), tmp;
        for (std::size_t i = i_begin; i < i_end; ++i) {
            std::copy(keep.begin(), keep.end(), pmask.begin());
            realization_mask(realizations[i], xcols, atoms.atoms, n, pmask.data(),
                             tmp);
            const bool prior_empty = kernels::mask_count(pmask.data(), words) == 0;
            for (std::size_t j = 0; j < n2; ++j) {
                if (prior_empty) {
                    ++rejects[i];
                    continue;
                }
                kernels::mask_and(pmask.data(), eps_mask[j].data(), words,
                                  smask.data());
                auto idx = kernels::mask_to_indices(smask.data(), n);
                if (idx.empty()) ++rejects[i];
                else per_i[i].push_back(PosteriorDiscreteSample{std::move(idx)});
            }
        }
    };

    int nthreads = threads < 1 ? 1 : threads;
    if (static_cast<std::size_t>(nthreads) > n1) nthreads = static_cast<int>(n1);
    if (nthreads <= 1) {
        work(0, n1);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (n1 + nthreads - 1) / nthreads;
        for (int t = 0; t < nthreads; ++t) {
            const std::size_t b = t * chunk;
            const std::size_t e = std::min(n1, b + chunk);
            if (b >= e) break;
            pool.emplace_back(work, b, e);
        }
        for (std::thread& th : pool) th.join();
    }

    AlgoOneResult out;
    out.n_candidates = n1 * n2;
    std::size_t rejected = 0;
    for (std::size_t i = 0; i < n1; ++i) {
        rejected += rejects[i];
        for (PosteriorDiscreteSample& s : per_i[i]) {
            out.samples.push_back(std::move(s));
            out.origin.push_back(static_cast<std::uint32_t>(i));
        }
    }
    if (out.samples.empty())
        throw TotalConflictError(
            "algorithm one: every candidate posterior sample was empty");
    out.conflict_hat =
        static_cast<double>(rejected) / static_cast<double>(out.n_candidates);
    return out;
}

AlgoOneResult algorithm_one(const AtomSet& atoms, const PriorSpec& prior,
                            const MeasurementModel& mm, const AlgoOneConfig& cfg) {
    if (cfg.n_prior < 1 || cfg.n_eps < 1)
        throw ConfigError("algorithm one: n_prior and n_eps must be >= 1");
    const std::size_t n = atoms.atoms.size();
    if (n == 0) throw ConfigError("algorithm one: empty atom set");
    if (atoms.atoms[0].size() != prior.dim())
        throw ConfigError("algorithm one: atom dim != prior dim");

    std::size_t singleton_dims = 0;
    for (const PriorDim& d : prior.dims)
        if (prior_dim_singleton(d)) ++singleton_dims;

    if (singleton_dims == prior.dim()) {
        // Pure random-variable prior: the posterior is a random variable whose
        // pdf the chain already targets, so the atoms are the posterior draws.
        // Thin evenly to respect the sample budget.
        AlgoOneResult out;
        out.n_candidates = cfg.n_prior * cfg.n_eps;
        const std::size_t take = std::min(out.n_candidates, n);
        out.samples.reserve(take);
        for (std::size_t t = 0; t < take; ++t) {
            const auto k = static_cast<std::uint32_t>(t * n / take);
            out.samples.push_back(PosteriorDiscreteSample{{k}});
        }
        out.origin.assign(take, 0);
        out.conflict_hat = std::numeric_limits<double>::quiet_NaN();
        out.note = "pure random-variable prior: atoms taken as posterior draws";
        return out;
    }
    if (singleton_dims > 0)
        throw ConfigError(
            "algorithm one: prior mixes singleton dimensions with set-valued "
            "ones; such candidates are rejected almost surely");

    std::vector<SetRealization> realizations;
    realizations.reserve(cfg.n_prior);
    Rng rng_prior(derive_seed(cfg.seed, seed_stream::kPriorRealizations));
    for (std::size_t i = 0; i < cfg.n_prior; ++i)
        realizations.push_back(prior_realization(prior, rng_prior));

    std::vector<Vec> noise;
    noise.reserve(cfg.n_eps);
    Rng rng_eps(derive_seed(cfg.seed, seed_stream::kNoiseDraws));
    for (std::size_t j = 0; j < cfg.n_eps; ++j) {
        Vec e(mm.m());
        for (std::size_t c = 0; c < mm.m(); ++c)
            e[c] = mm.channels[c].noise.sample(rng_eps);
        noise.push_back(std::move(e));
    }

    AlgoOneResult out =
        algorithm_one_with_draws(atoms, realizations, noise, mm, cfg.threads);
    if (any_point_focal(prior))
        out.note = "prior has point-valued focal elements; their draws reject "
                   "almost surely and inflate the conflict estimate";
    return out;
}

void write_sample_stream(const std::vector<PosteriorDiscreteSample>& samples,
                         std::ostream& os) {
    for (const PosteriorDiscreteSample& s : samples) {
        for (std::size_t i = 0; i < s.indices.size(); ++i) {
            if (i) os << ' ';
            os << s.indices[i];
        }
        os << '\n';
    }
}

std::vector<PosteriorDiscreteSample> read_sample_stream(std::istream& is) {
    std::vector<PosteriorDiscreteSample> out;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        PosteriorDiscreteSample s;
        std::uint32_t v;
        while (ss >> v) s.indices.push_back(v);
        if (s.indices.empty()) throw ConfigError("sample stream: bad line: " + line);
        out.push_back(std::move(s));
    }
    if (out.empty()) throw ConfigError("sample stream: no samples");
    return out;
}

}  // namespace rsinfer
