// Copyright 2026 The dpbandit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dpbandit/csv.hpp"
#include "dpbandit/svg.hpp"
#include "dpbandit/sweep.hpp"
#include "dpbandit/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitRuntime = 2;

struct CliFlags {
  std::string model;
  int d = 0;
  int K = 0;
  std::int64_t T = 0;
  std::vector<double> epsilons;
  double delta = 0.0;
  std::string seeds;
  std::string noise;
  double sigma = 0.0;
  std::string out;
  int jobs = 0;
};

void add_experiment_flags(CLI::App* cmd, CliFlags* flags) {
  cmd->add_option("--model", flags->model,
                  "central|local|shuffled|nonprivate|all");
  cmd->add_option("--d", flags->d, "action dimension");
  cmd->add_option("--K", flags->K, "number of actions");
  cmd->add_option("--T", flags->T, "horizon (>= 16)");
  cmd->add_option("--epsilon", flags->epsilons,
                  "privacy budget; repeat for a grid");
  cmd->add_option("--delta", flags->delta, "delta for the shuffled model");
  cmd->add_option("--seeds", flags->seeds, "comma list or a..b range");
  cmd->add_option("--noise", flags->noise,
                  "uniform-bounded|truncated-gaussian");
  cmd->add_option("--sigma", flags->sigma, "noise spread");
  cmd->add_option("--out", flags->out, "output directory");
  cmd->add_option("--jobs", flags->jobs, "worker threads (0 = hardware)");
}

void apply_flags(const CLI::App* cmd, const CliFlags& flags,
                 dpbandit::ExperimentConfig* config) {
  using dpbandit::apply_config_key;
  if (cmd->count("--model")) apply_config_key(*config, "model", flags.model);
  if (cmd->count("--d")) config->d = flags.d;
  if (cmd->count("--K")) config->K = flags.K;
  if (cmd->count("--T")) config->T = flags.T;
  if (cmd->count("--epsilon")) config->epsilon_grid = flags.epsilons;
  if (cmd->count("--delta")) config->delta = flags.delta;
  if (cmd->count("--seeds")) {
    config->seeds = dpbandit::parse_seed_list(flags.seeds);
  }
  if (cmd->count("--noise")) apply_config_key(*config, "noise", flags.noise);
  if (cmd->count("--sigma")) config->noise.sigma = flags.sigma;
  if (cmd->count("--out")) config->output_dir = flags.out;
}

int execute_sweep(const dpbandit::ExperimentConfig& config, int jobs) {
  dpbandit::validate_config(config);
  const dpbandit::SweepResult result = dpbandit::run_sweep(config, jobs);
  dpbandit::write_csv(result, config.output_dir);

  std::printf("%-11s %-10s %14s %14s %6s\n", "model", "epsilon", "mean_regret",
              "std_regret", "seeds");
  for (const dpbandit::SummaryRow& row : result.summary) {
    char eps_buf[32] = "-";
    if (!std::isnan(row.epsilon)) {
      std::snprintf(eps_buf, sizeof(eps_buf), "%g", row.epsilon);
    }
    const std::string eps = eps_buf;
    std::printf("%-11s %-10s %14.1f %14.1f %6d\n",
                std::string(dpbandit::model_name(row.model)).c_str(),
                eps.c_str(), row.mean_regret, row.std_regret, row.num_seeds);
  }
  std::printf("wrote %s/traces.csv and %s/summary.csv\n",
              config.output_dir.c_str(), config.output_dir.c_str());
  if (!result.failures.empty()) {
    for (const dpbandit::CellFailure& f : result.failures) {
      std::fprintf(stderr, "cell failed: model=%s epsilon=%g seed=%llu: %s\n",
                   std::string(dpbandit::model_name(f.model)).c_str(),
                   f.epsilon, static_cast<unsigned long long>(f.seed),
                   f.message.c_str());
    }
    return kExitRuntime;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differentially private stochastic linear bandit simulator"};
  app.require_subcommand(1);

  CliFlags run_flags;
  CLI::App* run_cmd = app.add_subcommand(
      "run", "run one experiment described entirely by flags");
  add_experiment_flags(run_cmd, &run_flags);

  CliFlags sweep_flags;
  std::string config_path;
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "run an experiment described by a config file");
  sweep_cmd->add_option("--config", config_path, "key=value config file")
      ->required();
  add_experiment_flags(sweep_cmd, &sweep_flags);

  std::string summary_path, plot_path;
  CLI::App* plot_cmd =
      app.add_subcommand("plot", "render summary.csv as an SVG figure");
  plot_cmd->add_option("--summary", summary_path, "summary.csv path")
      ->required();
  plot_cmd->add_option("--out", plot_path, "output SVG path")->required();

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run the library invariant checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (run_cmd->parsed()) {
      dpbandit::ExperimentConfig config = dpbandit::default_config();
      apply_flags(run_cmd, run_flags, &config);
      return execute_sweep(config, run_flags.jobs);
    }
    if (sweep_cmd->parsed()) {
      dpbandit::ExperimentConfig config =
          dpbandit::parse_config_file(config_path);
      apply_flags(sweep_cmd, sweep_flags, &config);
      return execute_sweep(config, sweep_flags.jobs);
    }
    if (plot_cmd->parsed()) {
      const auto summary = dpbandit::read_summary_csv(summary_path);
      dpbandit::emit_plot(summary, plot_path);
      std::printf("wrote %s\n", plot_path.c_str());
      return kExitOk;
    }
    if (verify_cmd->parsed()) {
      bool all_ok = true;
      for (const dpbandit::CheckResult& r : dpbandit::run_verification_suite()) {
        std::printf("[%s] %s: %s\n", r.passed ? "ok" : "FAIL", r.name.c_str(),
                    r.detail.c_str());
        all_ok = all_ok && r.passed;
      }
      return all_ok ? kExitOk : kExitRuntime;
    }
  } catch (const dpbandit::ConfigError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kExitConfig;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitRuntime;
  }
  return kExitOk;
}
