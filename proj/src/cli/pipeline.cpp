#include "rsinfer/cli/pipeline.hpp"

#include "rsinfer/sampler/posterior_estimates.hpp"

#include <json.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <csignal>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace rsinfer {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// ---- JSON parsing ----------------------------------------------------------

[[noreturn]] void bad(const std::string& msg) { throw ConfigError("config: " + msg); }

const json& need(const json& j, const char* key, const char* where) {
    auto it = j.find(key);
    if (it == j.end())
        bad(std::string("missing key '") + key + "' in " + where);
    return *it;
}

Distribution parse_distribution(const json& j) {
    const std::string fam = need(j, "family", "distribution").get<std::string>();
    if (fam == "normal")
        return Distribution::normal(need(j, "mean", "normal").get<double>(),
                                    need(j, "sd", "normal").get<double>());
    if (fam == "lognormal")
        return Distribution::lognormal(need(j, "mean", "lognormal").get<double>(),
                                       need(j, "sd", "lognormal").get<double>());
    if (fam == "uniform")
        return Distribution::uniform(need(j, "lo", "uniform").get<double>(),
                                     need(j, "hi", "uniform").get<double>());
    bad("unknown distribution family '" + fam + "'");
}

SetRealization parse_set(const json& j) {
    const std::string kind = need(j, "kind", "set").get<std::string>();
    if (kind == "interval")
        return SetRealization::interval(need(j, "lo", "interval").get<double>(),
                                        need(j, "hi", "interval").get<double>());
    if (kind == "box")
        return SetRealization::box(IntervalBox(need(j, "lo", "box").get<Vec>(),
                                               need(j, "hi", "box").get<Vec>()));
    if (kind == "points") {
        std::vector<Vec> pts = need(j, "pts", "points").get<std::vector<Vec>>();
        if (pts.empty()) bad("point set needs at least one point");
        return SetRealization::points(std::move(pts));
    }
    if (kind == "box_union") {
        std::vector<IntervalBox> boxes;
        for (const json& b : need(j, "boxes", "box_union"))
            boxes.emplace_back(need(b, "lo", "box").get<Vec>(),
                               need(b, "hi", "box").get<Vec>());
        if (boxes.empty()) bad("box union needs at least one box");
        return SetRealization::box_union(std::move(boxes));
    }
    bad("unknown set kind '" + kind + "'");
}

json set_to_json(const SetRealization& s) {
    if (s.is_points()) return {{"kind", "points"}, {"pts", s.as_points().pts}};
    if (s.is_box()) {
        const IntervalBox& b = s.as_box();
        if (b.dim() == 1)
            return {{"kind", "interval"}, {"lo", b.lo[0]}, {"hi", b.hi[0]}};
        return {{"kind", "box"}, {"lo", b.lo}, {"hi", b.hi}};
    }
    if (s.is_box_union()) {
        json boxes = json::array();
        for (const IntervalBox& b : s.as_box_union().boxes)
            boxes.push_back({{"lo", b.lo}, {"hi", b.hi}});
        return {{"kind", "box_union"}, {"boxes", std::move(boxes)}};
    }
    return {{"kind", "empty"}};
}

MassFunction parse_mass_function(const json& j, const char* where) {
    std::vector<SetRealization> focal;
    for (const json& s : need(j, "focal", where)) focal.push_back(parse_set(s));
    Vec mass = need(j, "mass", where).get<Vec>();
    return MassFunction(std::move(focal), std::move(mass));
}

PriorSpec parse_prior(const json& arr) {
    if (!arr.is_array() || arr.empty()) bad("'prior' must be a nonempty array");
    std::vector<PriorDim> dims;
    for (const json& j : arr) {
        const std::string kind = need(j, "kind", "prior dimension").get<std::string>();
        if (kind == "pbox") {
            dims.emplace_back(PBoxDim{parse_distribution(need(j, "upper", "pbox")),
                                      parse_distribution(need(j, "lower", "pbox"))});
        } else if (kind == "mass") {
            dims.emplace_back(parse_mass_function(j, "mass prior"));
        } else if (kind == "rv") {
            dims.emplace_back(parse_distribution(j));
        } else if (kind == "interval") {
            dims.emplace_back(FixedInterval{need(j, "lo", "interval").get<double>(),
                                            need(j, "hi", "interval").get<double>()});
        } else {
            bad("unknown prior dimension kind '" + kind + "'");
        }
    }
    return PriorSpec(std::move(dims));
}

std::vector<std::size_t> parse_kappas(const json& j, const char* key) {
    std::vector<std::size_t> out;
    for (const json& v : j) {
        const long long k = v.get<long long>();
        if (k <= 0) bad(std::string(key) + " entries must be positive");
        out.push_back(static_cast<std::size_t>(k));
    }
    return out;
}

// ---- artifact helpers ------------------------------------------------------

std::ofstream open_out(const fs::path& p) {
    std::ofstream f(p);
    if (!f) throw ConfigError("cannot write " + p.string());
    return f;
}

void write_json_file(const fs::path& p, const json& j) {
    std::ofstream f = open_out(p);
    f << j.dump(2) << "\n";
}

void append_band_rows(std::ostream& os, const CdfBand& band, std::size_t dim) {
    char buf[96];
    for (std::size_t t = 0; t < band.thresholds.size(); ++t) {
        std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g,%.17g", dim,
                      band.thresholds[t], band.p_hat[t], band.t_hat[t]);
        os << buf << '\n';
    }
}

std::vector<Vec> threshold_grids(const RunConfig& cfg) {
    const std::size_t dim = cfg.prior->dim();
    if (!cfg.queries.thresholds.empty()) {
        if (cfg.queries.thresholds.size() != dim)
            bad("'queries.thresholds' must list one grid per prior dimension");
        for (const Vec& g : cfg.queries.thresholds)
            if (g.empty()) bad("threshold grids must be nonempty");
        return cfg.queries.thresholds;
    }
    const std::size_t n = cfg.queries.threshold_count;
    if (n < 2) bad("'queries.threshold_count' must be at least 2");
    const IntervalBox hint = prior_support_hint(*cfg.prior);
    std::vector<Vec> grids(dim);
    for (std::size_t d = 0; d < dim; ++d) {
        if (!std::isfinite(hint.lo[d]) || !std::isfinite(hint.hi[d]))
            bad("prior support is unbounded; give explicit 'queries.thresholds'");
        grids[d].reserve(n);
        for (std::size_t t = 0; t < n; ++t)
            grids[d].push_back(hint.lo[d] +
                               (hint.hi[d] - hint.lo[d]) *
                                   (static_cast<double>(t) / static_cast<double>(n - 1)));
    }
    return grids;
}

SampleBundle draw_prior_bundle(const PriorSpec& prior, std::size_t count,
                               std::uint64_t master_seed) {
    Rng rng(derive_seed(master_seed, seed_stream::kPriorBundle));
    std::vector<SetRealization> rs;
    rs.reserve(count);
    for (std::size_t i = 0; i < count; ++i) rs.push_back(prior_realization(prior, rng));
    return SampleBundle(std::move(rs));
}

// Band of the prior itself over the same grids, from an independent bundle.
CdfBand prior_band(const SampleBundle& bundle, std::size_t dim_index,
                   std::size_t dim, Vec thresholds) {
    const double inf = std::numeric_limits<double>::infinity();
    CdfBand band;
    band.thresholds = std::move(thresholds);
    for (double x : band.thresholds) {
        Vec lo(dim, -inf), hi(dim, inf);
        hi[dim_index] = x;
        const IntervalBox q(lo, hi);
        band.p_hat.push_back(estimate_rsd(bundle, q));
        band.t_hat.push_back(estimate_capacity(bundle, q));
    }
    return band;
}

void write_polytope_csv(const Polytope& poly, const fs::path& path) {
    std::ofstream os = open_out(path);
    const std::size_t dim = poly.dim();
    os << "dir_index";
    for (std::size_t d = 0; d < dim; ++d) os << ",nu" << d;
    os << ",offset\n";
    char buf[48];
    for (std::size_t k = 0; k < poly.dirs.size(); ++k) {
        os << k;
        for (std::size_t d = 0; d < dim; ++d) {
            std::snprintf(buf, sizeof buf, ",%.17g", poly.dirs[k].nu[d]);
            os << buf;
        }
        std::snprintf(buf, sizeof buf, ",%.17g", poly.offsets[k]);
        os << buf << '\n';
    }
}

void write_vertices_csv(const std::vector<Vec>& verts, const fs::path& path) {
    std::ofstream os = open_out(path);
    os << "x0,x1\n";
    char buf[96];
    for (const Vec& v : verts) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g", v[0], v[1]);
        os << buf << '\n';
    }
}

void require_prior(const RunConfig& cfg) {
    if (!cfg.prior) bad("this command needs a 'prior' section");
}

}  // namespace

RunConfig load_run_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open config file " + path);
    json j;
    try {
        f >> j;
    } catch (const json::exception& e) {
        throw ConfigError(path + ": " + e.what());
    }

    try {
        RunConfig cfg;
        const fs::path base = fs::path(path).parent_path();
        const auto resolve = [&base](const std::string& p) -> std::string {
            if (p.empty()) return p;
            const fs::path q(p);
            return q.is_absolute() ? p : (base / q).string();
        };

        cfg.seed = j.value("seed", std::uint64_t{0});
        cfg.threads = j.value("threads", 1);
        if (cfg.threads < 1) bad("'threads' must be at least 1");
        cfg.output_dir = resolve(j.value("output", std::string("out")));

        if (j.contains("prior")) cfg.prior = parse_prior(j["prior"]);
        cfg.measurements_path = resolve(j.value("measurements", std::string()));

        if (j.contains("forward")) {
            const json& fw = j["forward"];
            cfg.forward.kind = need(fw, "kind", "forward").get<std::string>();
            cfg.forward.geometry_path = resolve(fw.value("geometry", std::string()));
            cfg.forward.identity_dim = fw.value("dim", std::size_t{0});
            cfg.forward.command = fw.value("command", std::string());
            cfg.forward.input_dim = fw.value("input_dim", std::size_t{0});
            cfg.forward.output_dim = fw.value("output_dim", std::size_t{0});
            cfg.forward.reentrant = fw.value("reentrant", false);
            if (fw.contains("select"))
                cfg.forward.select = fw["select"].get<std::vector<std::size_t>>();
        }

        if (j.contains("mcmc")) {
            const json& m = j["mcmc"];
            cfg.mcmc.kappa = m.value("kappa", cfg.mcmc.kappa);
            cfg.mcmc.burn_in = m.value("burn_in", cfg.mcmc.burn_in);
            if (m.contains("proposal_scale"))
                cfg.mcmc.proposal_scale = m["proposal_scale"].get<Vec>();
            if (m.contains("init")) cfg.mcmc.init = m["init"].get<Vec>();
        }

        if (j.contains("algo")) {
            const json& a = j["algo"];
            cfg.algo.n_prior = a.value("n_prior", cfg.algo.n_prior);
            cfg.algo.n_eps = a.value("n_eps", cfg.algo.n_eps);
        }

        if (j.contains("queries")) {
            const json& q = j["queries"];
            if (q.contains("thresholds"))
                cfg.queries.thresholds = q["thresholds"].get<std::vector<Vec>>();
            cfg.queries.threshold_count =
                q.value("threshold_count", cfg.queries.threshold_count);
            cfg.queries.directions = q.value("directions", cfg.queries.directions);
            cfg.queries.prior_bundle =
                q.value("prior_bundle", cfg.queries.prior_bundle);
        }

        if (j.contains("converge")) {
            const json& c = j["converge"];
            if (c.contains("kappas"))
                cfg.converge.kappas = parse_kappas(c["kappas"], "converge.kappas");
            cfg.converge.kappa_inf = c.value("kappa_inf", std::size_t{0});
            cfg.converge.replications =
                c.value("replications", cfg.converge.replications);
            if (c.contains("hausdorff_kappas"))
                cfg.converge.hausdorff_kappas =
                    parse_kappas(c["hausdorff_kappas"], "converge.hausdorff_kappas");
            cfg.converge.n_prior = c.value("n_prior", std::size_t{0});
            cfg.converge.n_eps = c.value("n_eps", std::size_t{0});
        }

        if (j.contains("dempster")) {
            const json& d = j["dempster"];
            cfg.dempster_m1 = parse_mass_function(need(d, "m1", "dempster"), "m1");
            cfg.dempster_m2 = parse_mass_function(need(d, "m2", "dempster"), "m2");
        }

        cfg.algo.threads = cfg.threads;
        return cfg;
    } catch (const json::exception& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

std::shared_ptr<const ForwardModel> make_forward_model(const ForwardSelector& sel) {
    std::shared_ptr<const ForwardModel> model;
    if (sel.kind == "truss") {
        if (sel.geometry_path.empty()) {
            model = std::make_shared<TrussModel>(default_truss());
        } else {
            std::ifstream g(sel.geometry_path);
            if (!g)
                throw ConfigError("cannot open geometry file " + sel.geometry_path);
            model = std::make_shared<TrussModel>(read_geometry(g));
        }
    } else if (sel.kind == "identity") {
        if (sel.identity_dim == 0) bad("identity forward model needs 'dim' >= 1");
        model = std::make_shared<IdentityModel>(sel.identity_dim);
    } else if (sel.kind == "external") {
        if (sel.command.empty()) bad("external forward model needs 'command'");
        if (sel.input_dim == 0 || sel.output_dim == 0)
            bad("external forward model needs 'input_dim' and 'output_dim'");
        model = std::make_shared<ExternalModel>(sel.command, sel.input_dim,
                                                sel.output_dim, sel.reentrant);
    } else {
        bad("unknown forward model kind '" + sel.kind + "'");
    }
    if (!sel.select.empty())
        model = std::make_shared<SelectorModel>(std::move(model), sel.select);
    return model;
}

MeasurementModel load_measurement_model(const RunConfig& cfg) {
    if (cfg.measurements_path.empty()) bad("this command needs 'measurements'");
    std::ifstream f(cfg.measurements_path);
    if (!f)
        throw ConfigError("cannot open measurement file " + cfg.measurements_path);
    return MeasurementModel(make_forward_model(cfg.forward),
                            read_measurements_csv(f));
}

void run_sample(const RunConfig& cfg, std::ostream& log) {
    require_prior(cfg);
    const MeasurementModel mm = load_measurement_model(cfg);
    const UnnormalizedDensity prior_pdf = capacity_transform_prior(*cfg.prior);

    McmcConfig mc = cfg.mcmc;
    mc.seed = cfg.seed;
    const AtomSet atoms = mh_sample(prior_pdf, mm, mc);

    fs::create_directories(cfg.output_dir);
    const fs::path dir(cfg.output_dir);
    {
        std::ofstream os = open_out(dir / "atoms.csv");
        write_atoms_csv(atoms, os);
    }
    write_json_file(dir / "sample_meta.json",
                    {{"kappa", mc.kappa},
                     {"burn_in", mc.burn_in},
                     {"seed", cfg.seed},
                     {"acceptance_rate", atoms.acceptance_rate},
                     {"scale_used", atoms.scale_used},
                     {"warning", atoms.warning},
                     {"forward_calls", mm.forward->call_count()}});

    log << "wrote " << (dir / "atoms.csv").string() << " (" << atoms.atoms.size()
        << " atoms, acceptance " << atoms.acceptance_rate << ")\n";
    if (!atoms.warning.empty()) log << "warning: " << atoms.warning << "\n";
}

void run_posterior(const RunConfig& cfg, std::ostream& log) {
    require_prior(cfg);
    const MeasurementModel mm = load_measurement_model(cfg);
    const fs::path dir(cfg.output_dir);

    const fs::path atoms_path = dir / "atoms.csv";
    std::ifstream af(atoms_path);
    if (!af)
        throw ConfigError("no atoms artifact at " + atoms_path.string() +
                          "; run the sample command first");
    const AtomSet atoms = read_atoms_csv(af);

    AlgoOneConfig ac = cfg.algo;
    ac.seed = cfg.seed;
    ac.threads = cfg.threads;
    mm.forward->reset_call_count();
    const AlgoOneResult res = algorithm_one(atoms, *cfg.prior, mm, ac);
    const std::uint64_t mc_calls = mm.forward->call_count();

    {
        std::ofstream os = open_out(dir / "samples.txt");
        write_sample_stream(res.samples, os);
    }

    const std::size_t dim = cfg.prior->dim();
    const std::vector<Vec> grids = threshold_grids(cfg);
    {
        std::ofstream os = open_out(dir / "cdf_bounds.csv");
        os << "dim,threshold,p_hat,t_hat\n";
        for (std::size_t d = 0; d < dim; ++d)
            append_band_rows(os, cdf_bounds(res.samples, atoms, d, grids[d]), d);
    }

    const SampleBundle bundle =
        draw_prior_bundle(*cfg.prior, cfg.queries.prior_bundle, cfg.seed);
    {
        std::ofstream os = open_out(dir / "prior_cdf_bounds.csv");
        os << "dim,threshold,p_hat,t_hat\n";
        for (std::size_t d = 0; d < dim; ++d)
            append_band_rows(os, prior_band(bundle, d, dim, grids[d]), d);
    }

    const std::vector<Direction> dirs = direction_grid(dim, cfg.queries.directions);
    const Polytope post_poly =
        selection_expectation_from_samples(res.samples, atoms, dirs);
    const Polytope prior_poly = selection_expectation(bundle, dirs);
    write_polytope_csv(post_poly, dir / "expectation.csv");
    write_polytope_csv(prior_poly, dir / "prior_expectation.csv");
    if (dim == 2) {
        write_vertices_csv(polytope_vertices_2d(post_poly),
                           dir / "expectation_vertices.csv");
        write_vertices_csv(polytope_vertices_2d(prior_poly),
                           dir / "prior_expectation_vertices.csv");
    }

    write_json_file(dir / "posterior_meta.json",
                    {{"conflict", res.conflict_hat},
                     {"n_samples", res.samples.size()},
                     {"n_candidates", res.n_candidates},
                     {"note", res.note},
                     {"seed", cfg.seed},
                     {"n_prior", ac.n_prior},
                     {"n_eps", ac.n_eps},
                     {"forward_calls_during_mc", mc_calls}});

    log << "posterior samples: " << res.samples.size();
    if (std::isnan(res.conflict_hat))
        log << " (random-variable prior, no rejection stage)";
    else
        log << ", estimated conflict " << res.conflict_hat;
    log << "\n";
    if (!res.note.empty()) log << "note: " << res.note << "\n";
    log << "artifacts in " << dir.string() << ": samples.txt, cdf_bounds.csv, "
           "prior_cdf_bounds.csv, expectation.csv, prior_expectation.csv\n";
}

void run_converge(const RunConfig& cfg, std::ostream& log) {
    require_prior(cfg);
    if (cfg.converge.kappas.empty())
        bad("converge command needs 'converge.kappas'");
    const MeasurementModel mm = load_measurement_model(cfg);
    const UnnormalizedDensity prior_pdf = capacity_transform_prior(*cfg.prior);

    MseConfig mcfg;
    mcfg.kappas = cfg.converge.kappas;
    mcfg.kappa_inf = cfg.converge.kappa_inf;
    mcfg.replications = cfg.converge.replications;
    mcfg.n_prior = cfg.converge.n_prior ? cfg.converge.n_prior : cfg.algo.n_prior;
    mcfg.n_eps = cfg.converge.n_eps ? cfg.converge.n_eps : cfg.algo.n_eps;
    mcfg.burn_in = cfg.mcmc.burn_in;
    mcfg.seed = cfg.seed;
    mcfg.threads = cfg.threads;

    const std::vector<MseRow> rows = mse_convergence(prior_pdf, *cfg.prior, mm, mcfg);
    const Vec href = mse_reference_offsets(prior_pdf, *cfg.prior, mm, mcfg);

    fs::create_directories(cfg.output_dir);
    const fs::path dir(cfg.output_dir);
    {
        std::ofstream os = open_out(dir / "mse.csv");
        os << "kappa,dir_index,mse,normalized\n";
        char buf[80];
        for (const MseRow& r : rows) {
            std::snprintf(buf, sizeof buf, "%zu,%zu,%.17g,%d", r.kappa, r.dir_index,
                          r.mse, r.normalized ? 1 : 0);
            os << buf << '\n';
        }
    }

    std::size_t kmax = 0;
    for (std::size_t k : mcfg.kappas) kmax = std::max(kmax, k);
    write_json_file(dir / "mse_meta.json",
                    {{"kappa_inf",
                      mcfg.kappa_inf == 0 ? 10 * kmax : mcfg.kappa_inf},
                     {"replications", mcfg.replications},
                     {"n_prior", mcfg.n_prior},
                     {"n_eps", mcfg.n_eps},
                     {"seed", cfg.seed},
                     {"reference_offsets", href}});

    const std::vector<std::size_t>& hk = cfg.converge.hausdorff_kappas.empty()
                                             ? cfg.converge.kappas
                                             : cfg.converge.hausdorff_kappas;
    const SetRealization prior_set =
        SetRealization::box(prior_support_hint(*cfg.prior));
    const auto hrows =
        hausdorff_convergence(prior_set, prior_pdf, hk, cfg.seed, cfg.mcmc.burn_in);
    {
        std::ofstream os = open_out(dir / "hausdorff.csv");
        os << "kappa,distance\n";
        char buf[64];
        for (const auto& [k, d] : hrows) {
            std::snprintf(buf, sizeof buf, "%zu,%.17g", k, d);
            os << buf << '\n';
        }
    }

    log << "wrote " << (dir / "mse.csv").string() << " (" << rows.size()
        << " rows) and " << (dir / "hausdorff.csv").string() << "\n";
}

void run_dempster(const RunConfig& cfg, std::ostream& log) {
    if (!cfg.dempster_m1 || !cfg.dempster_m2)
        bad("dempster command needs 'dempster.m1' and 'dempster.m2'");
    const CombinationResult res =
        dempster_combine(*cfg.dempster_m1, *cfg.dempster_m2);

    json combined = json::array();
    for (std::size_t i = 0; i < res.combined.size(); ++i)
        combined.push_back({{"set", set_to_json(res.combined.focal[i])},
                            {"mass", res.combined.mass[i]}});

    fs::create_directories(cfg.output_dir);
    write_json_file(fs::path(cfg.output_dir) / "dempster.json",
                    {{"conflict", res.conflict}, {"combined", combined}});

    log << "K = " << res.conflict << "\n";
    for (std::size_t i = 0; i < res.combined.size(); ++i)
        log << "  mass " << res.combined.mass[i] << " on "
            << set_to_json(res.combined.focal[i]).dump() << "\n";
}

void run_truss_demo(const std::string& out_dir, std::uint64_t seed,
                    std::ostream& log) {
    fs::create_directories(out_dir);
    const fs::path dir(out_dir);

    {
        std::ofstream os = open_out(dir / "geometry.txt");
        write_geometry(default_truss(), os);
    }

    const auto write_record = [&](const VirtualRecord& r, const fs::path& p) {
        std::ofstream os = open_out(p);
        os << "channel,u_true,u_tilde,z_lo,z_hi\n";
        char buf[160];
        for (std::size_t i = 0; i < r.u_true.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g,%.17g,%.17g", i,
                          r.u_true[i], r.u_tilde[i], r.z[i].first, r.z[i].second);
            os << buf << '\n';
        }
    };
    write_record(bridge_demo_data(), dir / "reference_record.csv");
    write_record(consistent_demo_data(), dir / "consistent_record.csv");

    {
        std::ofstream os = open_out(dir / "measurements_11.csv");
        write_measurements_csv(demo_channels(consistent_demo_data(), 11), os);
    }
    {
        std::ofstream os = open_out(dir / "measurements_1.csv");
        write_measurements_csv(demo_channels(consistent_demo_data(), 1), os);
    }

    const json prior = json::array(
        {{{"kind", "pbox"},
          {"upper", {{"family", "lognormal"}, {"mean", 0.9}, {"sd", 0.1}}},
          {"lower", {{"family", "lognormal"}, {"mean", 1.0}, {"sd", 0.11}}}},
         {{"kind", "mass"},
          {"focal", json::array({{{"kind", "interval"}, {"lo", 0.77}, {"hi", 0.92}},
                                 {{"kind", "interval"}, {"lo", 0.85}, {"hi", 0.98}},
                                 {{"kind", "interval"}, {"lo", 0.96}, {"hi", 1.08}}})},
          {"mass", {0.3, 0.3, 0.4}}}});

    // Eleven unit-width windows jointly pin the two parameters hard: only
    // about one noise draw in 1e4 is compatible with any atom, so the all-data
    // run needs a deep noise pool to collect posterior samples. The one-datum
    // run accepts roughly half of all candidates and stays small.
    write_json_file(dir / "config_demo.json",
                    {{"seed", seed},
                     {"threads", 4},
                     {"output", "demo_out"},
                     {"prior", prior},
                     {"measurements", "measurements_11.csv"},
                     {"forward", {{"kind", "truss"}}},
                     {"mcmc", {{"kappa", 2000}, {"burn_in", 1000}}},
                     {"algo", {{"n_prior", 500}, {"n_eps", 100000}}},
                     {"queries",
                      {{"threshold_count", 101},
                       {"directions", 64},
                       {"prior_bundle", 2000}}},
                     {"converge",
                      {{"kappas", {250, 500, 1000, 2000}},
                       {"replications", 20},
                       {"n_prior", 500},
                       {"n_eps", 50000},
                       {"hausdorff_kappas", {250, 1000, 4000, 10000}}}}});

    write_json_file(dir / "config_demo_1.json",
                    {{"seed", seed},
                     {"threads", 4},
                     {"output", "demo_out_1"},
                     {"prior", prior},
                     {"measurements", "measurements_1.csv"},
                     {"forward", {{"kind", "truss"}, {"select", {0}}}},
                     {"mcmc", {{"kappa", 2000}, {"burn_in", 1000}}},
                     {"algo", {{"n_prior", 500}, {"n_eps", 200}}},
                     {"queries",
                      {{"threshold_count", 101},
                       {"directions", 64},
                       {"prior_bundle", 2000}}},
                     {"converge",
                      {{"kappas", {250, 500, 1000, 2000}},
                       {"replications", 20},
                       {"hausdorff_kappas", {250, 1000, 4000, 10000}}}}});

    log << "demo kit in " << dir.string() << ":\n"
        << "  geometry.txt             the built-in bridge geometry\n"
        << "  reference_record.csv     frozen reference dataset (display only)\n"
        << "  consistent_record.csv    dataset generated by this geometry\n"
        << "  measurements_11.csv      all channels, unit normal noise\n"
        << "  measurements_1.csv       first channel only\n"
        << "  config_demo.json         all-data run for sample/posterior/converge\n"
        << "  config_demo_1.json       one-datum variant of the same pipeline\n"
        << "next: rsinfer sample --config " << (dir / "config_demo.json").string()
        << "\n";
}

// ---- external forward model -------------------------------------------------

ExternalModel::ExternalModel(std::string command, std::size_t in, std::size_t out,
                             bool reentrant)
    : cmd_(std::move(command)), in_(in), out_(out), reentrant_(reentrant) {
    std::signal(SIGPIPE, SIG_IGN);  // dead children surface as stream errors

    int to_child[2], from_child[2];
    if (pipe(to_child) != 0 || pipe(from_child) != 0)
        throw NumericalError("cannot create pipes for external model");

    const pid_t pid = fork();
    if (pid < 0) throw NumericalError("cannot fork external model process");
    if (pid == 0) {
        dup2(to_child[0], STDIN_FILENO);
        dup2(from_child[1], STDOUT_FILENO);
        close(to_child[0]);
        close(to_child[1]);
        close(from_child[0]);
        close(from_child[1]);
        execl("/bin/sh", "sh", "-c", cmd_.c_str(), static_cast<char*>(nullptr));
        _exit(127);
    }
    close(to_child[0]);
    close(from_child[1]);
    pid_ = pid;
    to_child_ = fdopen(to_child[1], "w");
    from_child_ = fdopen(from_child[0], "r");
    if (!to_child_ || !from_child_)
        throw NumericalError("cannot attach streams to external model");
}

ExternalModel::~ExternalModel() {
    if (to_child_) fclose(to_child_);    // EOF tells the child to exit
    if (from_child_) fclose(from_child_);
    if (pid_ > 0) {
        int status = 0;
        waitpid(static_cast<pid_t>(pid_), &status, 0);
    }
}

Vec ExternalModel::eval_impl(const Vec& x) const {
    if (x.size() != in_)
        throw ConfigError("external model expects " + std::to_string(in_) +
                          " inputs, got " + std::to_string(x.size()));
    std::lock_guard<std::mutex> guard(mu_);

    char buf[40];
    for (std::size_t i = 0; i < x.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", x[i]);
        if (i) std::fputc(' ', to_child_);
        std::fputs(buf, to_child_);
    }
    std::fputc('\n', to_child_);
    if (std::fflush(to_child_) != 0 || std::ferror(to_child_))
        throw NumericalError("external model '" + cmd_ + "' is not accepting input");

    std::string line;
    for (int c = std::fgetc(from_child_); c != EOF && c != '\n';
         c = std::fgetc(from_child_))
        line.push_back(static_cast<char>(c));
    if (line.empty() && std::feof(from_child_))
        throw NumericalError("external model '" + cmd_ + "' closed its output");

    Vec z;
    std::istringstream ss(line);
    double v = 0.0;
    while (ss >> v) z.push_back(v);
    if (z.size() != out_)
        throw NumericalError("external model '" + cmd_ + "' returned " +
                             std::to_string(z.size()) + " values, expected " +
                             std::to_string(out_));
    return z;
}

}  // namespace rsinfer
