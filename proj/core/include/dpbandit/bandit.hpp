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

#include <cstdint>
#include <map>
#include <optional>

#include "dpbandit/environment.hpp"
#include "dpbandit/geometry.hpp"
#include "dpbandit/schedule.hpp"
#include "dpbandit/trace.hpp"

namespace dpbandit {

// Per-batch confidence radii. All logarithms are natural; the schedule's
// q in [e, e^2] forces that base everywhere. active_size is |A_i| and the
// shared term is L = ln(4 |A_i| T^2).

// Sampling-noise radius alone: sqrt(4 d / q^i * L).
double gamma_nonprivate(int batch_index, double q, int d,
                        std::size_t active_size, std::int64_t T);

// Adds the cost of one Laplace(1/epsilon) draw per core action:
// (2 |C_i| d + 2 d L) / (epsilon q^i).
double gamma_central(int batch_index, double q, int d, std::size_t active_size,
                     std::int64_t T, double epsilon, std::size_t core_size);

// Adds the cost of one Laplace(1/epsilon0) draw per reward:
// (2 d / (q^i epsilon0)) * sqrt(n_i L). Also used by the shuffled model with
// the batch's amplified epsilon0.
double gamma_local(int batch_index, double q, int d, std::size_t active_size,
                   std::int64_t T, double epsilon0, std::int64_t n_i);

// Weighted least squares from per-action pull counts and (noisy) reward sums:
// theta = V^+ sum_a sums[a] * a with V = sum_a counts[a] * a a^T, the
// pseudo-inverse restricted to the core's span. Components orthogonal to the
// span are zero. Throws SingularDesign when V loses rank against the span.
Eigen::VectorXd least_squares(const ActionSet& core,
                              const std::map<int, std::int64_t>& counts,
                              const std::map<int, double>& noisy_sums);

// Keeps the actions within 2 * gamma of the empirical maximizer over
// `active`; boundary ties survive, so the result is never empty.
ActionSet eliminate(const ActionSet& active, const Eigen::VectorXd& theta_hat,
                    double gamma);

// Test hook: replaces the realized reward of one batch-phase pull (0-based
// global index over drawn rewards) before it enters any sum. Lets audits
// replay a run with a single reward changed and diff what the server saw.
struct RewardTweak {
  std::int64_t pull_index = -1;
  double value = 0.0;
};

struct RunOptions {
  FwParams design;
  // Replace the optimal-design core with the uniform distribution over the
  // whole active set (every active action privatized each batch).
  bool uniform_design = false;
  bool capture_protocol = false;
  bool record_noise = false;
  std::optional<RewardTweak> tweak;
};

// Batched elimination with a trusted curator: per batch, each core action's
// reward sum is privatized with a single Laplace(1/epsilon) draw.
RegretTrace run_central(const BanditInstance& instance, std::int64_t T,
                        double epsilon, std::uint64_t seed,
                        const RunOptions& options = {});

// Untrusted curator: every individual reward is privatized client-side with
// Laplace(1/epsilon0) before aggregation.
RegretTrace run_local(const BanditInstance& instance, std::int64_t T,
                      double epsilon0, std::uint64_t seed,
                      const RunOptions& options = {});

// Untrusted curator plus trusted shuffler: assignments are randomly permuted
// across the batch's clients, each client reports with per-batch level
// eps0_i = invert_amplification(epsilon, n_i, delta), and the shuffler undoes
// the permutation before reporting action-reward pairs to the server.
RegretTrace run_shuffled(const BanditInstance& instance, std::int64_t T,
                         double epsilon, double delta, std::uint64_t seed,
                         const RunOptions& options = {});

// Same skeleton with no privacy noise and the sampling-only radius.
RegretTrace run_nonprivate(const BanditInstance& instance, std::int64_t T,
                           std::uint64_t seed, const RunOptions& options = {});

}  // namespace dpbandit
