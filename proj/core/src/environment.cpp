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

#include "dpbandit/environment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dpbandit {

namespace {

constexpr std::uint64_t kTagInstance = 0xA1;

Eigen::VectorXd unit_vector(int d, RngStream& rng) {
  Eigen::VectorXd v(d);
  double norm = 0.0;
  do {
    for (int i = 0; i < d; ++i) v[i] = rng.gaussian();
    norm = v.norm();
  } while (norm < 1e-12);
  return v / norm;
}

}  // namespace

BanditInstance generate_instance(int d, int K, std::uint64_t seed,
                                 NoiseModel noise) {
  if (d < 1) throw Error("dimension must be >= 1");
  if (K < 2) throw Error("need at least two actions");
  if (!(noise.sigma >= 0.0)) throw Error("sigma must be >= 0");

  RngStream rng(derive_seed(seed, kTagInstance));
  std::vector<Eigen::VectorXd> actions;
  actions.reserve(static_cast<std::size_t>(K));
  for (int k = 0; k < K; ++k) actions.push_back(unit_vector(d, rng));
  Eigen::VectorXd theta = unit_vector(d, rng);
  return {std::move(theta), ActionSet::from_vectors(actions), noise};
}

double pull(const BanditInstance& instance, const Action& action,
            RngStream& rng) {
  const Action* found = instance.actions.find(action.id);
  if (found == nullptr || found->coords.size() != action.coords.size() ||
      found->coords != action.coords) {
    throw UnknownAction("action " + std::to_string(action.id) +
                        " does not belong to this instance");
  }

  const double mu = instance.theta_star.dot(action.coords);
  double eta = 0.0;
  switch (instance.noise.kind) {
    case NoiseModel::Kind::kUniformBounded: {
      const double s =
          std::max(0.0, std::min(instance.noise.sigma, 1.0 - std::abs(mu)));
      eta = s * (2.0 * rng.uniform01() - 1.0);
      break;
    }
    case NoiseModel::Kind::kTruncatedGaussian: {
      const double sigma = instance.noise.sigma;
      if (sigma > 0.0) {
        for (int attempt = 0; attempt < 100; ++attempt) {
          eta = sigma * rng.gaussian();
          if (std::abs(mu + eta) <= 1.0) break;
        }
        if (std::abs(mu + eta) > 1.0) {
          eta = std::clamp(eta, -1.0 - mu, 1.0 - mu);
        }
      }
      break;
    }
  }
  return std::clamp(mu + eta, -1.0, 1.0);
}

RegretAccumulator::RegretAccumulator(const BanditInstance& instance,
                                     std::int64_t horizon)
    : theta_(instance.theta_star), horizon_(horizon) {
  if (horizon_ < 1) throw Error("horizon must be >= 1");
  double best = -std::numeric_limits<double>::infinity();
  for (const Action& a : instance.actions) {
    best = std::max(best, theta_.dot(a.coords));
  }
  optimal_value_ = best;
}

void RegretAccumulator::record(const Action& action) {
  if (pulls_ >= horizon_) throw HorizonExceeded("horizon already consumed");
  cumulative_ += optimal_value_ - theta_.dot(action.coords);
  ++pulls_;
}

void RegretAccumulator::record_many(const Action& action, std::int64_t count) {
  if (count < 0) throw Error("count must be >= 0");
  if (pulls_ + count > horizon_) throw HorizonExceeded("horizon already consumed");
  cumulative_ += gap(action) * static_cast<double>(count);
  pulls_ += count;
}

double RegretAccumulator::gap(const Action& action) const {
  return optimal_value_ - theta_.dot(action.coords);
}

}  // namespace dpbandit
