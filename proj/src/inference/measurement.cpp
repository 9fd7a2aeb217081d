#include "rsinfer/inference/measurement.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

namespace rsinfer {

MeasurementModel::MeasurementModel(std::shared_ptr<const ForwardModel> fwd,
                                   std::vector<Channel> ch)
    : forward(std::move(fwd)), channels(std::move(ch)) {
    if (!forward) throw ConfigError("measurement model: null forward model");
    if (channels.empty()) throw ConfigError("measurement model: no channels");
    if (forward->output_dim() != channels.size())
        throw ConfigError("measurement model: forward output dim " +
                          std::to_string(forward->output_dim()) + " != channel count " +
                          std::to_string(channels.size()));
    for (std::size_t i = 0; i < channels.size(); ++i) {
        const Channel& c = channels[i];
        if (std::isnan(c.z_lo) || std::isnan(c.z_hi) || !(c.z_lo < c.z_hi))
            throw ConfigError("measurement channel " + std::to_string(i) +
                              ": need z_lo < z_hi");
    }
}

SelectorModel::SelectorModel(std::shared_ptr<const ForwardModel> inner,
                             std::vector<std::size_t> idx)
    : inner_(std::move(inner)), idx_(std::move(idx)) {
    if (!inner_) throw ConfigError("selector model: null inner model");
    if (idx_.empty()) throw ConfigError("selector model: no channels selected");
    for (std::size_t i : idx_)
        if (i >= inner_->output_dim())
            throw ConfigError("selector model: channel " + std::to_string(i) +
                              " out of range");
}

Vec SelectorModel::eval_impl(const Vec& x) const {
    const Vec z = inner_->eval(x);
    Vec out;
    out.reserve(idx_.size());
    for (std::size_t i : idx_) out.push_back(z[i]);
    return out;
}

bool response_membership(const MeasurementModel& mm, const Vec& eps, const Vec& z) {
    if (eps.size() != mm.m() || z.size() != mm.m())
        throw ConfigError("response membership: dimension mismatch");
    for (std::size_t i = 0; i < mm.m(); ++i) {
        const double v = z[i] + eps[i];
        if (v < mm.channels[i].z_lo || v > mm.channels[i].z_hi) return false;
    }
    return true;
}

bool data_set_membership(const MeasurementModel& mm, const Vec& eps, const Vec& x) {
    if (x.size() != mm.forward->input_dim())
        throw ConfigError("data set membership: point dimension mismatch");
    return response_membership(mm, eps, mm.forward->eval(x));
}

double likelihood_response(const MeasurementModel& mm, const Vec& z) {
    if (z.size() != mm.m()) throw ConfigError("likelihood: response dimension mismatch");
    double p = 1.0;
    for (std::size_t i = 0; i < mm.m(); ++i) {
        const Channel& c = mm.channels[i];
        p *= c.noise.interval_prob(c.z_lo - z[i], c.z_hi - z[i]);
        if (p == 0.0) return 0.0;
    }
    return p;
}

double log_likelihood_response(const MeasurementModel& mm, const Vec& z) {
    if (z.size() != mm.m()) throw ConfigError("likelihood: response dimension mismatch");
    double lp = 0.0;
    for (std::size_t i = 0; i < mm.m(); ++i) {
        const Channel& c = mm.channels[i];
        const double pi = c.noise.interval_prob(c.z_lo - z[i], c.z_hi - z[i]);
        if (pi <= 0.0) return -std::numeric_limits<double>::infinity();
        lp += std::log(pi);
    }
    return lp;
}

double likelihood(const MeasurementModel& mm, const Vec& x) {
    if (x.size() != mm.forward->input_dim())
        throw ConfigError("likelihood: point dimension mismatch");
    return likelihood_response(mm, mm.forward->eval(x));
}

bool posterior_membership(const SetRealization& prior_realization,
                          const MeasurementModel& mm, const Vec& eps, const Vec& x) {
    if (!contains_point(prior_realization, x)) return false;
    return data_set_membership(mm, eps, x);
}

std::vector<Channel> read_measurements_csv(std::istream& is) {
    std::vector<Channel> out;
    std::string line;
    if (!std::getline(is, line)) throw ConfigError("measurements csv: empty stream");
    if (line.rfind("channel,", 0) != 0)
        throw ConfigError("measurements csv: bad header: " + line);
    std::size_t row = 0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string ch, lo, hi, fam, sc;
        if (!std::getline(ss, ch, ',') || !std::getline(ss, lo, ',') ||
            !std::getline(ss, hi, ',') || !std::getline(ss, fam, ',') ||
            !std::getline(ss, sc))
            throw ConfigError("measurements csv: malformed row: " + line);
        std::size_t pos = 0;
        const double zl = std::stod(lo, &pos);
        const double zh = std::stod(hi);
        const double scale = std::stod(sc);
        (void)pos;
        Distribution noise = [&]() {
            if (fam == "normal") return Distribution::normal(0.0, scale);
            if (fam == "uniform") return Distribution::uniform(-scale, scale);
            throw ConfigError("measurements csv: unknown noise family: " + fam);
        }();
        out.push_back(Channel{zl, zh, noise});
        ++row;
    }
    if (out.empty()) throw ConfigError("measurements csv: no data rows");
    return out;
}

void write_measurements_csv(const std::vector<Channel>& ch, std::ostream& os) {
    os << "channel,z_lo,z_hi,noise_family,noise_scale\n";
    char buf[96];
    for (std::size_t i = 0; i < ch.size(); ++i) {
        const char* fam = nullptr;
        double scale = 0.0;
        switch (ch[i].noise.family()) {
            case DistFamily::Normal:
                fam = "normal";
                scale = ch[i].noise.param2();
                break;
            case DistFamily::Uniform:
                fam = "uniform";
                scale = 0.5 * (ch[i].noise.param2() - ch[i].noise.param1());
                break;
            default:
                throw ConfigError("measurements csv: unsupported noise family");
        }
        std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g,%s,%.17g", i, ch[i].z_lo,
                      ch[i].z_hi, fam, scale);
        os << buf << '\n';
    }
}

}  // namespace rsinfer
