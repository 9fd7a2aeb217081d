#include "rsinfer/models/prior.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rsinfer {

namespace {

struct DimDraw {
    // either one interval or a finite list of values for this dimension
    double lo = 0.0, hi = 0.0;
    Vec values; // nonempty means point list
};

DimDraw draw_dim(const PriorDim& d, Rng& rng) {
    const double u = rng.uniform01();
    DimDraw out;
    if (const auto* pb = std::get_if<PBoxDim>(&d)) {
        const double uc = std::clamp(u, kQuantileTrunc, 1.0 - kQuantileTrunc);
        out.lo = pb->upper.quantile(uc);
        out.hi = pb->lower.quantile(uc);
        return out;
    }
    if (const auto* m = std::get_if<MassFunction>(&d)) {
        const SetRealization& f = mass_to_random_set(*m, u);
        if (f.is_box()) {
            out.lo = f.as_box().lo[0];
            out.hi = f.as_box().hi[0];
        } else if (f.is_points()) {
            for (const auto& p : f.as_points().pts) out.values.push_back(p[0]);
        } else {
            throw ConfigError("mass-function prior dimension needs interval or point focals");
        }
        return out;
    }
    if (const auto* rv = std::get_if<Distribution>(&d)) {
        const double uc = std::clamp(u, kQuantileTrunc, 1.0 - kQuantileTrunc);
        out.lo = out.hi = rv->quantile(uc);
        return out;
    }
    const auto& iv = std::get<FixedInterval>(d);
    out.lo = iv.lo;
    out.hi = iv.hi;
    return out;
}

double dim_capacity_density(const PriorDim& d, double x) {
    if (const auto* pb = std::get_if<PBoxDim>(&d)) {
        const double v = pb->upper.cdf(x) - pb->lower.cdf(x);
        return v > 0.0 ? v : 0.0;
    }
    if (const auto* m = std::get_if<MassFunction>(&d)) {
        double s = 0.0;
        for (std::size_t i = 0; i < m->size(); ++i)
            if (contains_point(m->focal[i], Vec{x})) s += m->mass[i];
        return s;
    }
    if (const auto* rv = std::get_if<Distribution>(&d)) return rv->pdf(x);
    const auto& iv = std::get<FixedInterval>(d);
    return (x >= iv.lo && x <= iv.hi) ? 1.0 : 0.0;
}

std::pair<double, double> dim_support(const PriorDim& d) {
    if (const auto* pb = std::get_if<PBoxDim>(&d))
        return {pb->upper.quantile(kQuantileTrunc),
                pb->lower.quantile(1.0 - kQuantileTrunc)};
    if (const auto* m = std::get_if<MassFunction>(&d)) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (const auto& f : m->focal) {
            if (f.is_box()) {
                lo = std::min(lo, f.as_box().lo[0]);
                hi = std::max(hi, f.as_box().hi[0]);
            } else if (f.is_points()) {
                for (const auto& p : f.as_points().pts) {
                    lo = std::min(lo, p[0]);
                    hi = std::max(hi, p[0]);
                }
            }
        }
        return {lo, hi};
    }
    if (const auto* rv = std::get_if<Distribution>(&d))
        return {rv->quantile(kQuantileTrunc), rv->quantile(1.0 - kQuantileTrunc)};
    const auto& iv = std::get<FixedInterval>(d);
    return {iv.lo, iv.hi};
}

} // namespace

PriorSpec::PriorSpec(std::vector<PriorDim> dims_in) : dims(std::move(dims_in)) {
    if (dims.empty()) throw ConfigError("prior spec needs at least one dimension");
    for (const auto& d : dims) {
        if (const auto* pb = std::get_if<PBoxDim>(&d)) {
            PBox check({*pb}); // runs the cdf-ordering spot check
            (void)check;
        } else if (const auto* m = std::get_if<MassFunction>(&d)) {
            if (m->dim() != 1)
                throw ConfigError("mass-function prior dimensions must be 1-D");
        } else if (const auto* iv = std::get_if<FixedInterval>(&d)) {
            if (!std::isfinite(iv->lo) || !std::isfinite(iv->hi) || iv->lo > iv->hi)
                throw ConfigError("fixed-interval prior dimension needs lo <= hi");
        }
    }
}

SetRealization prior_realization(const PriorSpec& spec, Rng& rng) {
    std::vector<DimDraw> draws;
    draws.reserve(spec.dim());
    std::size_t combos = 1;
    for (const auto& d : spec.dims) {
        draws.push_back(draw_dim(d, rng));
        if (!draws.back().values.empty()) combos *= draws.back().values.size();
    }
    std::vector<IntervalBox> boxes;
    boxes.reserve(combos);
    for (std::size_t c = 0; c < combos; ++c) {
        Vec lo(spec.dim()), hi(spec.dim());
        std::size_t rem = c;
        for (std::size_t i = 0; i < spec.dim(); ++i) {
            const auto& dd = draws[i];
            if (dd.values.empty()) {
                lo[i] = dd.lo;
                hi[i] = dd.hi;
            } else {
                lo[i] = hi[i] = dd.values[rem % dd.values.size()];
                rem /= dd.values.size();
            }
        }
        boxes.emplace_back(std::move(lo), std::move(hi));
    }
    if (boxes.size() == 1) return SetRealization::box(std::move(boxes[0]));
    return canonicalize(SetRealization::box_union(std::move(boxes)));
}

SetRealization prior_sampler(const PriorSpec& spec, std::uint64_t seed) {
    Rng rng(seed);
    return prior_realization(spec, rng);
}

double prior_capacity_density(const PriorSpec& spec, const Vec& x) {
    if (x.size() != spec.dim())
        throw ConfigError("prior_capacity_density dimension mismatch");
    double v = 1.0;
    for (std::size_t i = 0; i < spec.dim(); ++i) {
        v *= dim_capacity_density(spec.dims[i], x[i]);
        if (v == 0.0) return 0.0;
    }
    return v;
}

IntervalBox prior_support_hint(const PriorSpec& spec) {
    Vec lo(spec.dim()), hi(spec.dim());
    for (std::size_t i = 0; i < spec.dim(); ++i) {
        const auto [a, b] = dim_support(spec.dims[i]);
        lo[i] = a;
        hi[i] = b;
    }
    return IntervalBox(std::move(lo), std::move(hi));
}

bool prior_dim_singleton(const PriorDim& d) {
    if (const auto* pb = std::get_if<PBoxDim>(&d)) {
        return pb->upper.family() == pb->lower.family() &&
               pb->upper.param1() == pb->lower.param1() &&
               pb->upper.param2() == pb->lower.param2();
    }
    if (const auto* m = std::get_if<MassFunction>(&d)) {
        for (const auto& f : m->focal) {
            if (f.is_points() && f.as_points().pts.size() == 1) continue;
            if (f.is_box() && f.as_box().is_point()) continue;
            return false;
        }
        return true;
    }
    if (std::holds_alternative<Distribution>(d)) return true;
    const auto& iv = std::get<FixedInterval>(d);
    return iv.lo == iv.hi;
}

bool prior_always_singleton(const PriorSpec& spec) {
    for (const auto& d : spec.dims)
        if (!prior_dim_singleton(d)) return false;
    return true;
}

}  // namespace rsinfer
