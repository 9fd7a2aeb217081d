#include "rsinfer/models/distribution.hpp"

#include <cmath>
#include <limits>

namespace rsinfer {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244;
constexpr double kInvSqrt2Pi = 0.3989422804014326779;

// Bisection inverse of a nondecreasing cdf. The initial bracket is widened
// by doubling until it straddles u, so no tail bound is needed up front.
template <typename Cdf>
double bisect_quantile(Cdf cdf, double u, double lo, double hi, double floor_lo) {
    double span = hi - lo;
    while (cdf(lo) >= u && lo > floor_lo) {
        lo -= span;
        if (lo < floor_lo) lo = floor_lo;
        span *= 2.0;
    }
    span = hi - lo;
    while (cdf(hi) < u) {
        hi += span;
        span *= 2.0;
        if (!std::isfinite(hi)) throw NumericalError("quantile bracket diverged");
    }
    for (int it = 0; it < 200 && hi - lo > kQuantileTol; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (cdf(mid) < u)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

double normal_cdf(double z) { return 0.5 * std::erfc(-z * kInvSqrt2); }

double normal_pdf(double z) { return kInvSqrt2Pi * std::exp(-0.5 * z * z); }

double normal_interval_prob(double mean, double sd, double lo, double hi) {
    if (!(hi > lo)) return 0.0;
    const double a = (lo - mean) / sd;
    const double b = (hi - mean) / sd;
    double p;
    if (a >= 0.0) {
        p = 0.5 * (std::erfc(a * kInvSqrt2) - std::erfc(b * kInvSqrt2));
    } else if (b <= 0.0) {
        p = 0.5 * (std::erfc(-b * kInvSqrt2) - std::erfc(-a * kInvSqrt2));
    } else {
        p = 1.0 - 0.5 * (std::erfc(b * kInvSqrt2) + std::erfc(-a * kInvSqrt2));
    }
    if (p < 0.0) p = 0.0;
    if (p > 1.0) p = 1.0;
    return p;
}

Distribution Distribution::normal(double mean, double sd) {
    if (!std::isfinite(mean) || !std::isfinite(sd) || sd <= 0.0)
        throw ConfigError("normal distribution needs finite mean and sd > 0");
    return Distribution(DistFamily::Normal, mean, sd, mean, sd);
}

Distribution Distribution::lognormal(double mean, double sd) {
    if (!std::isfinite(mean) || !std::isfinite(sd) || mean <= 0.0 || sd <= 0.0)
        throw ConfigError("lognormal distribution needs mean > 0 and sd > 0");
    const double sigma2 = std::log(1.0 + (sd * sd) / (mean * mean));
    const double mu = std::log(mean) - 0.5 * sigma2;
    return Distribution(DistFamily::Lognormal, mean, sd, mu, std::sqrt(sigma2));
}

Distribution Distribution::uniform(double lo, double hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi))
        throw ConfigError("uniform distribution needs lo < hi");
    return Distribution(DistFamily::Uniform, lo, hi, lo, hi);
}

double Distribution::pdf(double x) const {
    switch (fam_) {
    case DistFamily::Normal:
        return normal_pdf((x - a_) / b_) / b_;
    case DistFamily::Lognormal:
        if (x <= 0.0) return 0.0;
        return normal_pdf((std::log(x) - a_) / b_) / (x * b_);
    case DistFamily::Uniform:
        return (x >= a_ && x <= b_) ? 1.0 / (b_ - a_) : 0.0;
    }
    return 0.0;
}

double Distribution::cdf(double x) const {
    switch (fam_) {
    case DistFamily::Normal:
        return normal_cdf((x - a_) / b_);
    case DistFamily::Lognormal:
        if (x <= 0.0) return 0.0;
        return normal_cdf((std::log(x) - a_) / b_);
    case DistFamily::Uniform:
        if (x <= a_) return 0.0;
        if (x >= b_) return 1.0;
        return (x - a_) / (b_ - a_);
    }
    return 0.0;
}

double Distribution::quantile(double u) const {
    if (!(u > 0.0) || !(u < 1.0))
        throw ConfigError("quantile requires u strictly inside (0,1)");
    switch (fam_) {
    case DistFamily::Normal:
        return bisect_quantile([this](double x) { return cdf(x); }, u,
                               a_ - 10.0 * b_, a_ + 10.0 * b_,
                               -std::numeric_limits<double>::infinity());
    case DistFamily::Lognormal: {
        const double lo = std::exp(a_ - 10.0 * b_);
        const double hi = std::exp(a_ + 10.0 * b_);
        return bisect_quantile([this](double x) { return cdf(x); }, u, lo, hi, 0.0);
    }
    case DistFamily::Uniform:
        return a_ + u * (b_ - a_);
    }
    return 0.0;
}

double Distribution::interval_prob(double lo, double hi) const {
    switch (fam_) {
    case DistFamily::Normal:
        return normal_interval_prob(a_, b_, lo, hi);
    case DistFamily::Lognormal: {
        if (hi <= 0.0) return 0.0;
        const double llo = lo <= 0.0 ? -std::numeric_limits<double>::infinity()
                                     : std::log(lo);
        return normal_interval_prob(a_, b_, llo, std::log(hi));
    }
    case DistFamily::Uniform: {
        const double l = std::max(lo, a_);
        const double h = std::min(hi, b_);
        return h > l ? (h - l) / (b_ - a_) : 0.0;
    }
    }
    return 0.0;
}

double Distribution::sample(Rng& rng) const {
    switch (fam_) {
    case DistFamily::Normal:
        return a_ + b_ * rng.normal();
    case DistFamily::Lognormal:
        return std::exp(a_ + b_ * rng.normal());
    case DistFamily::Uniform:
        return rng.uniform(a_, b_);
    }
    return 0.0;
}

double Distribution::mean() const {
    switch (fam_) {
    case DistFamily::Normal:
        return a_;
    case DistFamily::Lognormal:
        return p1_;
    case DistFamily::Uniform:
        return 0.5 * (a_ + b_);
    }
    return 0.0;
}

const char* dist_family_name(DistFamily f) {
    switch (f) {
    case DistFamily::Normal: return "normal";
    case DistFamily::Lognormal: return "lognormal";
    case DistFamily::Uniform: return "uniform";
    }
    return "?";
}

}  // namespace rsinfer
