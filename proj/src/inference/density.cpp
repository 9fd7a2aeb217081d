#include "rsinfer/inference/density.hpp"

namespace rsinfer {

UnnormalizedDensity capacity_transform_prior(const PriorSpec& spec) {
    return UnnormalizedDensity{
        [spec](const Vec& x) { return prior_capacity_density(spec, x); },
        prior_support_hint(spec)};
}

UnnormalizedDensity posterior_capacity_density(const UnnormalizedDensity& prior,
                                               const MeasurementModel& mm) {
    if (prior.dim() != mm.forward->input_dim())
        throw ConfigError("posterior density: prior dim != forward input dim");
    auto prior_eval = prior.evaluator;
    return UnnormalizedDensity{
        [prior_eval, mm](const Vec& x) {
            const double p = prior_eval(x);
            if (p <= 0.0) return 0.0;
            return p * likelihood(mm, x);
        },
        prior.support_hint};
}

}  // namespace rsinfer
