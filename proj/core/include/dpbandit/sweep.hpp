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

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dpbandit/config.hpp"
#include "dpbandit/trace.hpp"

namespace dpbandit {

// Aggregate over seeds for one (model, epsilon) column.
struct SummaryRow {
  Model model = Model::kNonPrivate;
  double epsilon = 0.0;  // NaN for the non-private baseline
  double mean_regret = 0.0;
  double std_regret = 0.0;  // population standard deviation over seeds
  int num_seeds = 0;
  double mean_runtime_s = 0.0;
};

struct CellFailure {
  Model model = Model::kNonPrivate;
  double epsilon = 0.0;
  std::uint64_t seed = 0;
  std::string message;
};

struct SweepResult {
  std::vector<RegretTrace> traces;    // ordered by (model, epsilon, seed)
  std::vector<SummaryRow> summary;    // ordered by (model, epsilon)
  std::vector<CellFailure> failures;  // everything else still completes
};

// One sweep cell; injectable so failure handling is testable in isolation.
using CellRunner = std::function<RegretTrace(
    Model model, double epsilon, std::uint64_t seed,
    const ExperimentConfig& config)>;

RegretTrace default_cell_runner(Model model, double epsilon,
                                std::uint64_t seed,
                                const ExperimentConfig& config);

// Runs the cartesian product of models x epsilon_grid x seeds (the
// non-private baseline ignores the grid) on a small worker pool. Output
// ordering, and therefore all serialized artifacts, is independent of the
// worker count. jobs = 0 picks the hardware concurrency.
SweepResult run_sweep(const ExperimentConfig& config, int jobs = 0,
                      CellRunner runner = {});

}  // namespace dpbandit
