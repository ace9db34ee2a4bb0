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

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dpbandit/actions.hpp"
#include "dpbandit/geometry.hpp"
#include "dpbandit/privacy.hpp"
#include "dpbandit/protocol.hpp"

namespace dpbandit {

enum class Model { kCentral, kLocal, kShuffled, kNonPrivate };

std::string_view model_name(Model model);
Model model_from_name(std::string_view name);  // throws ConfigError("model")

struct TracePoint {
  std::int64_t t = 0;
  double cum_regret = 0.0;
};

// Everything one elimination batch produced. Raw (pre-noise) per-action sums
// are kept alongside the privatized ones so mechanism-level audits can replay
// runs and diff them.
struct BatchRecord {
  int batch_index = 0;
  ActionSet active_set;                       // candidates entering the batch
  DesignResult design;                        // core set and weights
  std::map<int, std::int64_t> counts;         // action id -> pulls scheduled
  std::map<int, double> pre_noise_sums;       // action id -> sum of raw rewards
  std::map<int, double> noisy_sums;           // action id -> privatized sum
  Eigen::VectorXd theta_hat;
  double gamma = 0.0;
  std::int64_t batch_len = 0;                 // pulls actually made
  std::int64_t planned_len = 0;               // sum of counts (n_i)
  double eps0_batch = 0.0;                    // per-report level (local/shuffled)
  std::int64_t laplace_draws = 0;
  double laplace_scale = 0.0;
  bool truncated = false;                     // ran out of budget mid-batch
  bool completed = false;                     // estimate + elimination done
  bool best_action_survived = false;
  std::vector<int> survivor_ids;              // candidates for the next batch
  std::vector<NoiseDraw> noise_ledger;        // only with RunOptions.record_noise
  std::vector<ProtocolMessage> protocol_log;  // only with capture_protocol
};

// One run's outcome: cumulative pseudo-regret sampled on a sparse time grid,
// plus metadata and per-batch diagnostics.
struct RegretTrace {
  Model model = Model::kNonPrivate;
  double epsilon = 0.0;  // epsilon (central/shuffled) or epsilon0 (local); NaN when non-private
  double delta = 0.0;    // shuffled: config delta; central/local: 0; non-private: NaN
  std::uint64_t seed = 0;
  int d = 0;
  int K = 0;
  std::int64_t T = 0;

  std::vector<TracePoint> grid;  // strictly increasing t, last entry at t = T
  std::vector<BatchRecord> batches;
  double final_regret = 0.0;
  std::int64_t total_pulls = 0;
  int exploit_action_id = -1;
};

// 50 geometrically spaced sample times in [1, T] plus T itself, deduplicated.
std::vector<std::int64_t> make_trace_grid(std::int64_t T);

}  // namespace dpbandit
