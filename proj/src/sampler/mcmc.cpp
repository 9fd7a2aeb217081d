#include "rsinfer/sampler/mcmc.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>

namespace rsinfer {

namespace {

struct Eval {
    double t = 0.0;
    Vec resp;
};

using EvalFn = std::function<Eval(const Vec&)>;

void check_config(const McmcConfig& cfg, std::size_t dim) {
    if (cfg.kappa < 1) throw ConfigError("mcmc: kappa must be >= 1");
    if (!cfg.proposal_scale.empty()) {
        if (cfg.proposal_scale.size() != dim)
            throw ConfigError("mcmc: proposal_scale dimension mismatch");
        for (double s : cfg.proposal_scale)
            if (!(s > 0.0)) throw ConfigError("mcmc: proposal_scale must be positive");
    }
    if (!cfg.init.empty() && cfg.init.size() != dim)
        throw ConfigError("mcmc: init dimension mismatch");
}

Vec find_init(const EvalFn& eval, const IntervalBox& support, Rng& rng) {
    const std::size_t d = support.dim();
    for (std::size_t i = 0; i < d; ++i)
        if (!std::isfinite(support.lo[i]) || !std::isfinite(support.hi[i]))
            throw ConfigError(
                "mcmc: support hint must be bounded to draw a chain start; "
                "pass init explicitly");
    Vec x(d);
    for (int tries = 0; tries < 200000; ++tries) {
        for (std::size_t i = 0; i < d; ++i)
            x[i] = rng.uniform(support.lo[i], support.hi[i]);
        if (eval(x).t > 0.0) return x;
    }
    throw NumericalError(
        "mcmc: failed to find a start of positive target density inside the "
        "support box");
}

Vec default_scale(const IntervalBox& support) {
    Vec s(support.dim());
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double w = support.hi[i] - support.lo[i];
        s[i] = (std::isfinite(w) && w > 0.0) ? w / 10.0 : 1.0;
    }
    return s;
}

// One Metropolis pass; records states into out when it is non-null.
double run_steps(const EvalFn& eval, Vec& x, Eval& ex, const Vec& scale,
                 std::size_t steps, std::size_t discard, Rng& rng,
                 std::vector<Vec>* out_atoms, std::vector<Vec>* out_resp) {
    const std::size_t d = x.size();
    std::size_t accepted = 0;
    Vec y(d);
    for (std::size_t step = 0; step < steps; ++step) {
        for (std::size_t i = 0; i < d; ++i) y[i] = x[i] + scale[i] * rng.normal();
        Eval ey = eval(y);
        bool accept = false;
        if (ey.t > 0.0) {
            if (ey.t >= ex.t) accept = true;
            else accept = rng.uniform01() < ey.t / ex.t;
        }
        if (accept) {
            x = y;
            ex = std::move(ey);
            ++accepted;
        }
        if (step >= discard && out_atoms) {
            out_atoms->push_back(x);
            if (out_resp) out_resp->push_back(ex.resp);
        }
    }
    return static_cast<double>(accepted) / static_cast<double>(steps);
}

AtomSet run_mcmc(const EvalFn& eval, const IntervalBox& support,
                 const McmcConfig& cfg, bool with_resp) {
    check_config(cfg, support.dim());

    Vec init = cfg.init;
    if (init.empty()) {
        Rng rng_init(derive_seed(cfg.seed, seed_stream::kChainInit));
        init = find_init(eval, support, rng_init);
    }
    Eval e0 = eval(init);
    if (!(e0.t > 0.0))
        throw ConfigError("mcmc: target density is zero at the chain start");

    Vec scale = cfg.proposal_scale;
    if (scale.empty()) {
        scale = default_scale(support);
        Rng rng_tune(derive_seed(cfg.seed, seed_stream::kMcmcTuning));
        for (int round = 0; round < 24; ++round) {
            Vec xp = init;
            Eval ep = e0;
            const double acc = run_steps(eval, xp, ep, scale, 160, 160, rng_tune,
                                         nullptr, nullptr);
            if (acc < 0.2) {
                for (double& s : scale) s *= 0.5;
            } else if (acc > 0.4) {
                for (double& s : scale) s *= 2.0;
            } else {
                break;
            }
        }
    }

    AtomSet out;
    out.atoms.reserve(cfg.kappa);
    if (with_resp) out.responses.reserve(cfg.kappa);
    out.scale_used = scale;

    Rng rng_chain(derive_seed(cfg.seed, seed_stream::kMcmcChain));
    Vec x = init;
    Eval ex = std::move(e0);
    out.acceptance_rate =
        run_steps(eval, x, ex, scale, cfg.burn_in + cfg.kappa, cfg.burn_in,
                  rng_chain, &out.atoms, with_resp ? &out.responses : nullptr);
    if (!with_resp) out.responses.assign(cfg.kappa, Vec{});

    if (out.acceptance_rate < 0.05 || out.acceptance_rate > 0.9) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "acceptance rate %.4f outside [0.05, 0.9]",
                      out.acceptance_rate);
        out.warning = buf;
    }
    return out;
}

}  // namespace

AtomSet mh_sample(const UnnormalizedDensity& target, const McmcConfig& cfg) {
    EvalFn eval = [&target](const Vec& x) { return Eval{target.evaluator(x), {}}; };
    return run_mcmc(eval, target.support_hint, cfg, false);
}

AtomSet mh_sample(const UnnormalizedDensity& prior, const MeasurementModel& mm,
                  const McmcConfig& cfg) {
    if (prior.dim() != mm.forward->input_dim())
        throw ConfigError("mcmc: prior dim != forward input dim");
    EvalFn eval = [&prior, &mm](const Vec& x) -> Eval {
        const double p = prior.evaluator(x);
        if (p <= 0.0) return {0.0, {}};
        Vec z = mm.forward->eval(x);
        const double l = likelihood_response(mm, z);
        return {p * l, std::move(z)};
    };
    return run_mcmc(eval, prior.support_hint, cfg, true);
}

void write_atoms_csv(const AtomSet& a, std::ostream& os) {
    if (a.atoms.empty()) throw ConfigError("atoms csv: empty atom set");
    const std::size_t d = a.atoms[0].size();
    const std::size_t m = a.responses.empty() ? 0 : a.responses[0].size();
    os << "index";
    for (std::size_t i = 0; i < d; ++i) os << ",x" << i;
    for (std::size_t i = 0; i < m; ++i) os << ",r" << i;
    os << '\n';
    char buf[32];
    for (std::size_t k = 0; k < a.atoms.size(); ++k) {
        os << k;
        for (std::size_t i = 0; i < d; ++i) {
            std::snprintf(buf, sizeof buf, ",%.17g", a.atoms[k][i]);
            os << buf;
        }
        const Vec& r = k < a.responses.size() ? a.responses[k] : Vec{};
        if (r.size() != m) throw ConfigError("atoms csv: ragged responses");
        for (std::size_t i = 0; i < m; ++i) {
            std::snprintf(buf, sizeof buf, ",%.17g", r[i]);
            os << buf;
        }
        os << '\n';
    }
}

AtomSet read_atoms_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw ConfigError("atoms csv: empty stream");
    std::size_t d = 0, m = 0;
    {
        std::istringstream hs(line);
        std::string col;
        if (!std::getline(hs, col, ',') || col != "index")
            throw ConfigError("atoms csv: bad header: " + line);
        while (std::getline(hs, col, ',')) {
            if (col.rfind('x', 0) == 0) ++d;
            else if (col.rfind('r', 0) == 0) ++m;
            else throw ConfigError("atoms csv: bad column: " + col);
        }
    }
    if (d == 0) throw ConfigError("atoms csv: no coordinate columns");
    AtomSet out;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string cell;
        if (!std::getline(ss, cell, ',')) throw ConfigError("atoms csv: bad row");
        Vec x(d), r(m);
        for (std::size_t i = 0; i < d; ++i) {
            if (!std::getline(ss, cell, ','))
                throw ConfigError("atoms csv: short row: " + line);
            x[i] = std::stod(cell);
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (!std::getline(ss, cell, ','))
                throw ConfigError("atoms csv: short row: " + line);
            r[i] = std::stod(cell);
        }
        out.atoms.push_back(std::move(x));
        out.responses.push_back(std::move(r));
    }
    if (out.atoms.empty()) throw ConfigError("atoms csv: no data rows");
    return out;
}

}  // namespace rsinfer
