#pragma once

#include "rsinfer/common.hpp"

namespace rsinfer {

double normal_cdf(double z);
double normal_pdf(double z);
// P(lo <= Y <= hi) for Y ~ N(mean, sd^2), stable in both tails.
double normal_interval_prob(double mean, double sd, double lo, double hi);

enum class DistFamily { Normal, Lognormal, Uniform };

// One-dimensional parametric distribution. Lognormal is parametrized by the
// mean and standard deviation of the variate itself; (mu, sigma) of the
// underlying normal are derived from the moment relations.
class Distribution {
public:
    static Distribution normal(double mean, double sd);
    static Distribution lognormal(double mean, double sd);
    static Distribution uniform(double lo, double hi);

    DistFamily family() const { return fam_; }
    // Parameters as given at construction (mean/sd, mean/sd, lo/hi).
    double param1() const { return p1_; }
    double param2() const { return p2_; }

    double pdf(double x) const;
    double cdf(double x) const;
    // Inverse cdf for u strictly inside (0,1); bisection to 1e-10 on the
    // parameter axis for the curved families.
    double quantile(double u) const;
    double interval_prob(double lo, double hi) const;
    double sample(Rng& rng) const;

    double mean() const;

private:
    Distribution(DistFamily fam, double p1, double p2, double a, double b)
        : fam_(fam), p1_(p1), p2_(p2), a_(a), b_(b) {}

    DistFamily fam_;
    double p1_, p2_;  // as-given parameters
    double a_, b_;    // internal: normal mean/sd, lognormal mu/sigma, uniform lo/hi
};

const char* dist_family_name(DistFamily f);

}  // namespace rsinfer
