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

#include "dpbandit/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <optional>
#include <thread>

#include "dpbandit/bandit.hpp"

namespace dpbandit {

namespace {

struct Cell {
  Model model;
  double epsilon;  // NaN for non-private
  std::uint64_t seed;
};

struct CellOutcome {
  std::optional<RegretTrace> trace;
  double runtime_s = 0.0;
  std::string error;
};

}  // namespace

RegretTrace default_cell_runner(Model model, double epsilon,
                                std::uint64_t seed,
                                const ExperimentConfig& config) {
  const BanditInstance instance =
      generate_instance(config.d, config.K, seed, config.noise);
  switch (model) {
    case Model::kCentral:
      return run_central(instance, config.T, epsilon, seed);
    case Model::kLocal:
      return run_local(instance, config.T, epsilon, seed);
    case Model::kShuffled:
      return run_shuffled(instance, config.T, epsilon, config.delta, seed);
    case Model::kNonPrivate:
      return run_nonprivate(instance, config.T, seed);
  }
  throw Error("unknown model");
}

SweepResult run_sweep(const ExperimentConfig& config, int jobs,
                      CellRunner runner) {
  validate_config(config);
  if (!runner) runner = default_cell_runner;

  // Canonical cell order fixes output order regardless of scheduling.
  std::vector<Model> models = config.models;
  std::sort(models.begin(), models.end());
  models.erase(std::unique(models.begin(), models.end()), models.end());

  std::vector<Cell> cells;
  for (Model m : models) {
    std::vector<double> eps_column = config.epsilon_grid;
    if (m == Model::kNonPrivate) {
      eps_column = {std::numeric_limits<double>::quiet_NaN()};
    } else {
      std::sort(eps_column.begin(), eps_column.end());
    }
    for (double e : eps_column) {
      for (std::uint64_t s : config.seeds) cells.push_back({m, e, s});
    }
  }

  std::vector<CellOutcome> outcomes(cells.size());
  std::atomic<std::size_t> cursor{0};
  auto work = [&]() {
    while (true) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= cells.size()) return;
      const Cell& cell = cells[i];
      const auto start = std::chrono::steady_clock::now();
      try {
        outcomes[i].trace = runner(cell.model, cell.epsilon, cell.seed, config);
      } catch (const std::exception& e) {
        outcomes[i].error = e.what();
      }
      outcomes[i].runtime_s =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
              .count();
    }
  };

  int workers = jobs > 0 ? jobs
                         : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::max(1, std::min<int>(workers, static_cast<int>(cells.size())));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  SweepResult result;
  std::size_t i = 0;
  while (i < cells.size()) {
    // One (model, epsilon) column = one contiguous block of seeds.
    const std::size_t begin = i;
    const Model m = cells[i].model;
    const double eps = cells[i].epsilon;
    std::vector<double> finals;
    double runtime_total = 0.0;
    int runs = 0;
    while (i < cells.size() && cells[i].model == m &&
           ((std::isnan(cells[i].epsilon) && std::isnan(eps)) ||
            cells[i].epsilon == eps)) {
      CellOutcome& out = outcomes[i];
      if (out.trace) {
        finals.push_back(out.trace->final_regret);
        runtime_total += out.runtime_s;
        ++runs;
        result.traces.push_back(std::move(*out.trace));
      } else {
        result.failures.push_back({m, eps, cells[i].seed, out.error});
      }
      ++i;
    }
    (void)begin;
    SummaryRow row;
    row.model = m;
    row.epsilon = eps;
    row.num_seeds = static_cast<int>(config.seeds.size());
    if (!finals.empty()) {
      double mean = 0.0;
      for (double v : finals) mean += v;
      mean /= static_cast<double>(finals.size());
      double var = 0.0;
      for (double v : finals) var += (v - mean) * (v - mean);
      var /= static_cast<double>(finals.size());
      row.mean_regret = mean;
      row.std_regret = std::sqrt(var);
      row.mean_runtime_s = runtime_total / static_cast<double>(runs);
    }
    result.summary.push_back(row);
  }
  return result;
}

}  // namespace dpbandit
