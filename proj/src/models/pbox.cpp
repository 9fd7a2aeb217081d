#include "rsinfer/models/pbox.hpp"

namespace rsinfer {

PBox::PBox(std::vector<PBoxDim> dims_in) : dims(std::move(dims_in)) {
    if (dims.empty()) throw ConfigError("p-box needs at least one dimension");
    // spot-check the cdf ordering on a quantile-spread grid
    for (const auto& d : dims) {
        for (int k = 1; k < 40; ++k) {
            const double u = k / 40.0;
            const double x_lo = d.upper.quantile(u);
            const double x_hi = d.lower.quantile(u);
            for (double x : {x_lo, x_hi, 0.5 * (x_lo + x_hi)}) {
                if (d.upper.cdf(x) < d.lower.cdf(x) - 1e-12)
                    throw ConfigError("p-box upper cdf must dominate lower cdf");
            }
        }
    }
}

IntervalBox pbox_to_random_set(const PBox& p, const Vec& u) {
    if (u.size() != p.dim())
        throw ConfigError("pbox_to_random_set u dimension mismatch");
    Vec lo(p.dim()), hi(p.dim());
    for (std::size_t i = 0; i < p.dim(); ++i) {
        if (!(u[i] > 0.0) || !(u[i] < 1.0))
            throw ConfigError("pbox_to_random_set needs u strictly inside (0,1)");
        lo[i] = p.dims[i].upper.quantile(u[i]);
        hi[i] = p.dims[i].lower.quantile(u[i]);
        if (lo[i] > hi[i])
            throw NumericalError("p-box quantile inversion produced lo > hi");
    }
    return IntervalBox(std::move(lo), std::move(hi));
}

}  // namespace rsinfer
