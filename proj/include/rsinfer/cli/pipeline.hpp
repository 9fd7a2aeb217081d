#pragma once

#include "rsinfer/inference/dempster.hpp"
#include "rsinfer/sampler/convergence.hpp"
#include "rsinfer/truss/truss_model.hpp"

#include <cstdio>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace rsinfer {

struct ForwardSelector {
    std::string kind = "truss";  // truss | identity | external
    std::string geometry_path;   // truss: custom geometry file, empty = built-in
    std::size_t identity_dim = 0;
    std::string command;         // external: shell command line
    std::size_t input_dim = 0, output_dim = 0;
    bool reentrant = false;
    std::vector<std::size_t> select;  // output subset; empty = all channels
};

struct QuerySection {
    std::vector<Vec> thresholds;  // explicit per-dimension grids; empty = auto
    std::size_t threshold_count = 101;
    std::size_t directions = 64;
    std::size_t prior_bundle = 2000;  // prior realizations behind the prior band
};

struct ConvergeSection {
    std::vector<std::size_t> kappas;
    std::size_t kappa_inf = 0;  // 0 = 10x the largest kappa
    std::size_t replications = 20;
    std::vector<std::size_t> hausdorff_kappas;  // empty = reuse kappas
    std::size_t n_prior = 0;  // candidate-budget overrides; 0 = algo section
    std::size_t n_eps = 0;
};

struct RunConfig {
    std::uint64_t seed = 0;
    int threads = 1;
    std::string output_dir = "out";
    std::optional<PriorSpec> prior;
    std::string measurements_path;
    ForwardSelector forward;
    McmcConfig mcmc;
    AlgoOneConfig algo;
    QuerySection queries;
    ConvergeSection converge;
    std::optional<MassFunction> dempster_m1, dempster_m2;
};

// Parse a JSON config file. Relative paths inside (measurements, geometry,
// output directory) resolve against the config file's own directory, so a
// config travels with its data files.
RunConfig load_run_config(const std::string& path);

std::shared_ptr<const ForwardModel> make_forward_model(const ForwardSelector& sel);
MeasurementModel load_measurement_model(const RunConfig& cfg);

// Pipeline commands. Each writes artifacts under cfg.output_dir and reports
// progress on `log`; failures surface as the library error types, which the
// command-line tool maps to exit codes.
void run_sample(const RunConfig& cfg, std::ostream& log);
void run_posterior(const RunConfig& cfg, std::ostream& log);
void run_converge(const RunConfig& cfg, std::ostream& log);
void run_dempster(const RunConfig& cfg, std::ostream& log);
void run_truss_demo(const std::string& out_dir, std::uint64_t seed,
                    std::ostream& log);

// Child-process forward model speaking a line protocol: one whitespace
// separated input vector per line on its stdin, one response vector per line
// on its stdout. Calls are serialized over the single pipe pair; the
// reentrant flag only advertises whether callers may overlap requests.
class ExternalModel : public ForwardModel {
public:
    ExternalModel(std::string command, std::size_t in, std::size_t out,
                  bool reentrant);
    ~ExternalModel() override;
    ExternalModel(const ExternalModel&) = delete;
    ExternalModel& operator=(const ExternalModel&) = delete;

    std::size_t input_dim() const override { return in_; }
    std::size_t output_dim() const override { return out_; }
    bool reentrant() const override { return reentrant_; }

private:
    Vec eval_impl(const Vec& x) const override;

    std::string cmd_;
    std::size_t in_, out_;
    bool reentrant_;
    mutable std::mutex mu_;
    long pid_ = -1;
    std::FILE* to_child_ = nullptr;
    std::FILE* from_child_ = nullptr;
};

}  // namespace rsinfer
