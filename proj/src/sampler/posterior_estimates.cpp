#include "rsinfer/sampler/posterior_estimates.hpp"

#include "rsinfer/kernels/kernels.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

namespace rsinfer {

namespace {

void check_inputs(const std::vector<PosteriorDiscreteSample>& samples,
                  const AtomSet& atoms) {
    if (samples.empty()) throw ConfigError("posterior estimates: no samples");
    if (atoms.atoms.empty()) throw ConfigError("posterior estimates: no atoms");
    const std::size_t n = atoms.atoms.size();
    for (const PosteriorDiscreteSample& s : samples) {
        if (s.indices.empty())
            throw ConfigError("posterior estimates: empty sample");
        for (std::uint32_t k : s.indices)
            if (k >= n) throw ConfigError("posterior estimates: index out of range");
    }
}

}  // namespace

std::pair<double, double> posterior_bounds(
    const std::vector<PosteriorDiscreteSample>& samples, const AtomSet& atoms,
    const IntervalBox& q) {
    check_inputs(samples, atoms);
    if (q.dim() != atoms.atoms[0].size())
        throw ConfigError("posterior bounds: query dim mismatch");

    // Membership mask of every atom in q, probed per sample index.
    const std::size_t n = atoms.atoms.size();
    const std::size_t dim = q.dim();
    const std::size_t words = kernels::mask_words(n);
    std::vector<Vec> cols(dim, Vec(n));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t d = 0; d < dim; ++d) cols[d][k] = atoms.atoms[k][d];
    std::vector<std::uint64_t> in_q(words, 0);
    kernels::mask_fill(in_q.data(), n);
    for (std::size_t d = 0; d < dim; ++d)
        kernels::range_mask_and(cols[d].data(), n, q.lo[d], q.hi[d], in_q.data());

    std::size_t contained = 0, hit = 0;
    for (const PosteriorDiscreteSample& s : samples) {
        bool all = true, any = false;
        for (std::uint32_t k : s.indices) {
            const bool in = (in_q[k / 64] >> (k % 64)) & 1u;
            all = all && in;
            any = any || in;
            if (!all && any) break;
        }
        contained += all;
        hit += any;
    }
    const double nn = static_cast<double>(samples.size());
    return {static_cast<double>(contained) / nn, static_cast<double>(hit) / nn};
}

CdfBand cdf_bounds(const std::vector<PosteriorDiscreteSample>& samples,
                   const AtomSet& atoms, std::size_t dim_index, Vec thresholds) {
    check_inputs(samples, atoms);
    if (dim_index >= atoms.atoms[0].size())
        throw ConfigError("cdf bounds: dimension index out of range");
    if (thresholds.empty()) throw ConfigError("cdf bounds: empty threshold grid");
    std::sort(thresholds.begin(), thresholds.end());

    // Per sample, only the extreme coordinates matter: the sample lies in
    // (-inf, x] iff its max is <= x, and hits it iff its min is <= x.
    const std::size_t ns = samples.size();
    Vec smin(ns), smax(ns);
    for (std::size_t i = 0; i < ns; ++i) {
        double lo = atoms.atoms[samples[i].indices[0]][dim_index];
        double hi = lo;
        for (std::uint32_t k : samples[i].indices) {
            const double v = atoms.atoms[k][dim_index];
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        smin[i] = lo;
        smax[i] = hi;
    }
    std::sort(smin.begin(), smin.end());
    std::sort(smax.begin(), smax.end());

    CdfBand band;
    band.thresholds = std::move(thresholds);
    band.p_hat.resize(band.thresholds.size());
    band.t_hat.resize(band.thresholds.size());
    for (std::size_t t = 0; t < band.thresholds.size(); ++t) {
        const double x = band.thresholds[t];
        const auto np = std::upper_bound(smax.begin(), smax.end(), x) - smax.begin();
        const auto nt = std::upper_bound(smin.begin(), smin.end(), x) - smin.begin();
        band.p_hat[t] = static_cast<double>(np) / static_cast<double>(ns);
        band.t_hat[t] = static_cast<double>(nt) / static_cast<double>(ns);
    }
    return band;
}

Polytope selection_expectation_from_samples(
    const std::vector<PosteriorDiscreteSample>& samples, const AtomSet& atoms,
    const std::vector<Direction>& dirs) {
    check_inputs(samples, atoms);
    if (dirs.empty()) throw ConfigError("selection expectation: no directions");
    const std::size_t n = atoms.atoms.size();
    const std::size_t dim = atoms.atoms[0].size();
    const std::size_t words = kernels::mask_words(n);

    std::vector<Vec> cols(dim, Vec(n));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t d = 0; d < dim; ++d) cols[d][k] = atoms.atoms[k][d];
    std::vector<const double*> col_ptrs(dim);
    for (std::size_t d = 0; d < dim; ++d) col_ptrs[d] = cols[d].data();

    std::vector<std::vector<std::uint64_t>> masks(
        samples.size(), std::vector<std::uint64_t>(words));
    for (std::size_t i = 0; i < samples.size(); ++i)
        kernels::indices_to_mask(samples[i].indices.data(), samples[i].indices.size(),
                                 n, masks[i].data());

    Polytope p;
    p.dirs = dirs;
    p.offsets.resize(dirs.size());
    Vec dots(n);
    for (std::size_t t = 0; t < dirs.size(); ++t) {
        if (dirs[t].nu.size() != dim)
            throw ConfigError("selection expectation: direction dim mismatch");
        kernels::dot_products(col_ptrs.data(), dim, n, dirs[t].nu.data(),
                              dots.data());
        double acc = 0.0;
        for (const auto& mask : masks)
            acc += kernels::masked_max(dots.data(), mask.data(), n);
        p.offsets[t] = acc / static_cast<double>(samples.size());
    }
    return p;
}

SampleBundle materialize_samples(const std::vector<PosteriorDiscreteSample>& samples,
                                 const AtomSet& atoms) {
    check_inputs(samples, atoms);
    std::vector<SetRealization> reals;
    reals.reserve(samples.size());
    for (const PosteriorDiscreteSample& s : samples) {
        std::vector<Vec> pts;
        pts.reserve(s.indices.size());
        for (std::uint32_t k : s.indices) pts.push_back(atoms.atoms[k]);
        reals.push_back(SetRealization::points(std::move(pts)));
    }
    return SampleBundle(std::move(reals));
}

void write_cdf_band_csv(const CdfBand& band, std::size_t dim_index,
                        std::ostream& os) {
    os << "dim,threshold,p_hat,t_hat\n";
    char buf[96];
    for (std::size_t t = 0; t < band.thresholds.size(); ++t) {
        std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g,%.17g", dim_index,
                      band.thresholds[t], band.p_hat[t], band.t_hat[t]);
        os << buf << '\n';
    }
}

}  // namespace rsinfer
