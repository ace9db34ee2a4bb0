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

#include "dpbandit/privacy.hpp"

#include <algorithm>
#include <cmath>

namespace dpbandit {

namespace {

// Above this the direct formula would overflow e^eps0; switch to log-space.
constexpr double kLogSpaceThreshold = 30.0;

constexpr double kBisectLo = 1e-9;
constexpr double kBisectTol = 1e-12;
constexpr double kBisectHiCap = 50.0;

void check_amplify_args(double epsilon0, std::int64_t n, double delta) {
  if (!(epsilon0 > 0.0)) throw Error("epsilon0 must be positive");
  if (n < 1) throw Error("batch size must be >= 1");
  if (!(delta > 0.0 && delta < 1.0)) throw Error("delta must lie in (0, 1)");
}

}  // namespace

PrivacyBudget::PrivacyBudget(double eps, double del) : epsilon(eps), delta(del) {
  if (!(epsilon > 0.0)) throw Error("epsilon must be positive");
  if (!(delta >= 0.0 && delta < 1.0)) throw Error("delta must lie in [0, 1)");
}

double laplace_from_uniform(double scale, double u) {
  if (!(scale > 0.0)) throw Error("laplace scale must be positive");
  if (!(u > 0.0 && u < 1.0)) throw Error("uniform input must lie in (0, 1)");
  const double v = u - 0.5;
  const double sign = v >= 0.0 ? 1.0 : -1.0;
  return -scale * sign * std::log1p(-2.0 * std::abs(v));
}

double sample_laplace(double scale, RngStream& rng) {
  return laplace_from_uniform(scale, rng.uniform01());
}

NoiseDraw sample_laplace_draw(double scale, RngStream& rng) {
  return {sample_laplace(scale, rng), scale};
}

double amplification_validity_bound(std::int64_t n, double delta) {
  if (n < 1) throw Error("batch size must be >= 1");
  if (!(delta > 0.0 && delta < 1.0)) throw Error("delta must lie in (0, 1)");
  return std::log(static_cast<double>(n)) - std::log(16.0 * std::log(4.0 / delta));
}

Amplification amplify(double epsilon0, std::int64_t n, double delta) {
  check_amplify_args(epsilon0, n, delta);
  const double nn = static_cast<double>(n);
  const double big_l = std::log(4.0 / delta);

  double value;
  if (epsilon0 <= kLogSpaceThreshold) {
    const double em1 = std::expm1(epsilon0);
    const double ratio = em1 / (em1 + 2.0);
    const double inner = 8.0 * std::sqrt(std::exp(epsilon0) * big_l / nn) +
                         8.0 * std::exp(epsilon0) / nn;
    value = std::log1p(ratio * inner);
  } else {
    // ln S for S = tanh(eps0/2) * (8 e^{eps0/2} sqrt(L/n) + 8 e^{eps0} / n),
    // assembled with log-sum-exp so e^{eps0} is never materialized.
    const double la = 0.5 * epsilon0 + std::log(8.0 * std::sqrt(big_l / nn));
    const double lb = epsilon0 + std::log(8.0 / nn);
    const double hi = std::max(la, lb);
    const double lsum = hi + std::log1p(std::exp(std::min(la, lb) - hi));
    const double ls = std::log(std::tanh(0.5 * epsilon0)) + lsum;
    value = ls < 700.0 ? std::log1p(std::exp(ls)) : ls;
  }

  const bool valid = epsilon0 <= amplification_validity_bound(n, delta);
  return {value, valid};
}

double invert_amplification(double epsilon_target, std::int64_t n, double delta) {
  if (!(epsilon_target > 0.0)) throw Error("epsilon target must be positive");
  if (n < 1) throw Error("batch size must be >= 1");
  if (!(delta > 0.0 && delta < 1.0)) throw Error("delta must lie in (0, 1)");

  const double boundary =
      std::min(amplification_validity_bound(n, delta), kBisectHiCap);
  if (!(boundary > kBisectLo)) return epsilon_target;
  if (amplify(boundary, n, delta).epsilon < epsilon_target) {
    // Even at the regime edge the amplified level stays below the target, so
    // plain local noise at the target level is already enough.
    return std::max(epsilon_target, boundary);
  }
  if (amplify(kBisectLo, n, delta).epsilon >= epsilon_target) {
    return epsilon_target;
  }

  double lo = kBisectLo;
  double hi = boundary;
  while (hi - lo > kBisectTol) {
    const double mid = 0.5 * (lo + hi);
    if (amplify(mid, n, delta).epsilon < epsilon_target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::max(0.5 * (lo + hi), epsilon_target);
}

double laplace_sum_tail(std::int64_t n, double b, double c, double t) {
  if (n < 1) throw Error("n must be >= 1");
  if (!(b > 0.0 && c > 0.0 && t > 0.0)) throw Error("b, c, t must be positive");
  const double nn = static_cast<double>(n);
  if (t <= nn * c / b) {
    return std::exp(-(t * t * b * b) / (2.0 * nn * c * c));
  }
  return std::exp(0.5 * nn - (b / c) * t);
}

}  // namespace dpbandit
