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

#include "dpbandit/errors.hpp"
#include "dpbandit/rng.hpp"

namespace dpbandit {

// Differential-privacy target. epsilon > 0, delta in [0, 1).
struct PrivacyBudget {
  PrivacyBudget(double eps, double del);
  double epsilon;
  double delta;
};

// One Laplace perturbation, kept with its scale so mechanism-level audits can
// confirm the noise actually applied.
struct NoiseDraw {
  double value = 0.0;
  double scale = 0.0;
};

// Inverse-CDF map from u in (0,1) to a Laplace(0, scale) variate:
//   value = -scale * sign(u - 1/2) * ln(1 - 2|u - 1/2|).
double laplace_from_uniform(double scale, double u);

// Laplace(0, scale) draw consuming exactly one uniform from the stream.
double sample_laplace(double scale, RngStream& rng);
NoiseDraw sample_laplace_draw(double scale, RngStream& rng);

// Privacy of one shuffled batch of n reports, each epsilon0-locally private:
//   f(eps0) = ln(1 + (e^eps0 - 1)/(e^eps0 + 1)
//                  * (8 sqrt(e^eps0 ln(4/delta)) / sqrt(n) + 8 e^eps0 / n)).
// `within_validity` is false when eps0 exceeds the regime where the
// amplification theorem applies (see amplification_validity_bound); the value
// is still computed, but no privacy should be claimed from it there.
struct Amplification {
  double epsilon = 0.0;
  bool within_validity = false;
};

// Largest eps0 the amplification bound covers: ln(n / (16 ln(4/delta))).
double amplification_validity_bound(std::int64_t n, double delta);

Amplification amplify(double epsilon0, std::int64_t n, double delta);

// Largest per-report eps0 whose shuffled batch of size n still meets
// epsilon_target, found by bisection. Outside the validity regime (or when
// even the regime boundary cannot reach the target) this falls back to
// max(epsilon_target, boundary): reporting with eps0 = epsilon_target is
// already epsilon_target-private without any amplification claim. The result
// is never below epsilon_target.
double invert_amplification(double epsilon_target, std::int64_t n, double delta);

// Tail estimate for sum_{i=1..n} l_i z_i with z_i ~ Laplace(1/b), |l_i| <= c:
//   P[sum >= t] <= exp(-t^2 b^2 / (2 n c^2))   if t <= n c / b,
//                  exp(n/2 - (b/c) t)          otherwise.
// Used as a test oracle for confidence-radius calibration. Note that the
// expression is a genuine upper bound only in the moderate-deviation regime,
// up to roughly 1.6 standard deviations of the sum; deeper in the tail the
// true exceedance probability overtakes it (its Chernoff prefactor assumes a
// lighter moment generating function than the Laplace law has).
double laplace_sum_tail(std::int64_t n, double b, double c, double t);

}  // namespace dpbandit
