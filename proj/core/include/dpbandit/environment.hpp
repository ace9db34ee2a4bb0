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

#include "dpbandit/actions.hpp"
#include "dpbandit/rng.hpp"

namespace dpbandit {

// Reward noise law. Supports are shrunk near the reward boundary so that
// every realized reward stays in [-1, 1] with the noise mean at zero
// (uniform-bounded exactly; truncated-gaussian approximately).
struct NoiseModel {
  enum class Kind { kUniformBounded, kTruncatedGaussian };
  Kind kind = Kind::kUniformBounded;
  double sigma = 0.1;  // nominal spread, >= 0
};

// Synthetic linear-reward environment: pulling action a yields
// <theta_star, a> plus bounded zero-mean noise.
struct BanditInstance {
  Eigen::VectorXd theta_star;
  ActionSet actions;
  NoiseModel noise;
};

// K actions and theta_star drawn independently and uniformly on the unit
// sphere in R^d (normalized standard-Gaussian vectors). Deterministic in the
// seed.
BanditInstance generate_instance(int d, int K, std::uint64_t seed,
                                 NoiseModel noise = {});

// One reward draw. The action must belong to the instance.
double pull(const BanditInstance& instance, const Action& action,
            RngStream& rng);

// Pseudo-regret bookkeeping against the best action of the instance. Uses
// true means only; realized noisy rewards never enter.
class RegretAccumulator {
 public:
  RegretAccumulator(const BanditInstance& instance, std::int64_t horizon);

  void record(const Action& action);
  void record_many(const Action& action, std::int64_t count);

  double optimal_value() const { return optimal_value_; }
  double cumulative() const { return cumulative_; }
  std::int64_t pulls() const { return pulls_; }
  std::int64_t horizon() const { return horizon_; }

  // Gap of an action under this instance; zero for the optimizer.
  double gap(const Action& action) const;

 private:
  Eigen::VectorXd theta_;
  double optimal_value_ = 0.0;
  double cumulative_ = 0.0;
  std::int64_t pulls_ = 0;
  std::int64_t horizon_ = 0;
};

}  // namespace dpbandit
