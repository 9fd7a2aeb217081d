#include "rsinfer/cli/pipeline.hpp"

#include <CLI11.hpp>

#include <csignal>
#include <iostream>

using namespace rsinfer;

namespace {

struct CommonArgs {
    std::string config;
    std::string out;
    std::uint64_t seed = 0;
    bool seed_set = false;
    int threads = 0;
};

void add_common(CLI::App* sub, CommonArgs& a, bool config_required) {
    CLI::Option* c = sub->add_option("--config", a.config, "JSON config file");
    if (config_required) c->required();
    sub->add_option("--out", a.out, "output directory (overrides the config)");
    sub->add_option("--seed", a.seed, "master seed (overrides the config)")
        ->each([&a](const std::string&) { a.seed_set = true; });
    sub->add_option("--threads", a.threads, "worker threads (overrides the config)");
}

}  // namespace

int main(int argc, char** argv) {
    std::signal(SIGPIPE, SIG_IGN);

    CLI::App app{"random-set inference pipeline"};
    app.require_subcommand(1);
    CommonArgs a;

    CLI::App* cmd_sample = app.add_subcommand(
        "sample", "draw posterior-density atoms by random-walk MCMC");
    add_common(cmd_sample, a, true);
    CLI::App* cmd_posterior = app.add_subcommand(
        "posterior",
        "approximate the posterior random set from an atoms artifact");
    add_common(cmd_posterior, a, true);
    CLI::App* cmd_converge = app.add_subcommand(
        "converge", "support-function MSE and Hausdorff convergence tables");
    add_common(cmd_converge, a, true);
    CLI::App* cmd_dempster = app.add_subcommand(
        "dempster", "exact finite Dempster combination of two mass functions");
    add_common(cmd_dempster, a, true);
    CLI::App* cmd_demo = app.add_subcommand(
        "truss-demo", "write the bridge demo kit (geometry, data, config)");
    add_common(cmd_demo, a, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_demo->parsed()) {
            run_truss_demo(a.out.empty() ? "demo" : a.out,
                           a.seed_set ? a.seed : 20260816ull, std::cout);
            return 0;
        }

        RunConfig cfg = load_run_config(a.config);
        if (!a.out.empty()) cfg.output_dir = a.out;
        if (a.seed_set) cfg.seed = a.seed;
        if (a.threads > 0) {
            cfg.threads = a.threads;
            cfg.algo.threads = a.threads;
        }

        if (cmd_sample->parsed()) run_sample(cfg, std::cout);
        else if (cmd_posterior->parsed()) run_posterior(cfg, std::cout);
        else if (cmd_converge->parsed()) run_converge(cfg, std::cout);
        else if (cmd_dempster->parsed()) run_dempster(cfg, std::cout);
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const TotalConflictError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const NumericalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
