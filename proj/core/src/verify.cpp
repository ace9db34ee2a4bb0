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

#include "dpbandit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dpbandit/bandit.hpp"
#include "dpbandit/csv.hpp"
#include "dpbandit/environment.hpp"
#include "dpbandit/geometry.hpp"
#include "dpbandit/privacy.hpp"

namespace dpbandit {

namespace {

using Check = std::pair<bool, std::string>;

ActionSet sampled_sphere(int d, int k, std::uint64_t seed) {
  return generate_instance(d, k, seed).actions;
}

Check check_net_covering() {
  for (std::uint64_t seed : {11u, 12u, 13u}) {
    const int d = seed == 12 ? 3 : 2;
    const ActionSet set = sampled_sphere(d, 300, seed);
    const double zeta = 0.15;
    const ActionSet net = build_zeta_net(set, {zeta});
    for (const Action& a : set) {
      double best = 1e300;
      for (const Action& n : net) best = std::min(best, (a.coords - n.coords).norm());
      if (best > zeta) return {false, "uncovered action in seed " + std::to_string(seed)};
    }
    if (span_dimension(net) != span_dimension(set)) {
      return {false, "net dropped span in seed " + std::to_string(seed)};
    }
  }
  return {true, "3 sampled sets covered, spans preserved"};
}

Check check_design_feasibility() {
  int designs = 0;
  for (int d : {2, 3, 5}) {
    for (std::uint64_t seed : {21u, 22u}) {
      const ActionSet set = sampled_sphere(d, 40, seed);
      const DesignResult design = frank_wolfe_design(set);
      const double bound = 2.0 * design.span_dim * 1.05;
      const double recheck = max_design_norm(set, design);
      if (recheck > bound + 1e-9) return {false, "norm bound violated"};
      double total = 0.0;
      for (const auto& [id, w] : design.weights) {
        if (!(w > 0.0)) return {false, "non-positive weight"};
        total += w;
      }
      if (std::abs(total - 1.0) > 1e-9) return {false, "weights do not sum to 1"};
      const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(design.design_matrix);
      if (es.eigenvalues().minCoeff() < -1e-10) return {false, "design matrix not PSD"};
      ++designs;
    }
  }
  return {true, std::to_string(designs) + " designs feasible with verified norms"};
}

Check check_amplification() {
  const double delta = 1e-6;
  for (std::int64_t n : {2000, 20000, 200000}) {
    double prev = 0.0;
    for (double eps : {0.02, 0.05, 0.1, 0.2, 0.4}) {
      const double eps0 = invert_amplification(eps, n, delta);
      if (eps0 < eps) return {false, "inverse below target"};
      const double round = amplify(eps0, n, delta).epsilon;
      if (std::abs(round - eps) > 1e-9) return {false, "round trip off"};
      if (round <= prev) return {false, "not monotone"};
      prev = round;
    }
  }
  if (invert_amplification(0.5, 1, delta) != 0.5) {
    return {false, "tiny-batch fallback broken"};
  }
  return {true, "round trips within 1e-9, fallback engaged at n=1"};
}

Check check_sampler() {
  RngStream a(987), b(987);
  for (int i = 0; i < 1000; ++i) {
    if (sample_laplace(1.0, a) != sample_laplace(1.0, b)) {
      return {false, "sampler not reproducible"};
    }
  }
  RngStream rng(42);
  double sum = 0.0, sq = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double v = sample_laplace(1.0, rng);
    sum += v;
    sq += v * v;
  }
  const double var = sq / n - (sum / n) * (sum / n);
  if (std::abs(var - 2.0) > 0.2) return {false, "variance off: " + std::to_string(var)};
  return {true, "bit-reproducible; empirical variance " + std::to_string(var)};
}

Check check_schedule() {
  for (std::int64_t T : {16LL, 100LL, 1000LL, 1000000LL}) {
    const BatchSchedule s = make_schedule(T);
    if (s.q < std::exp(1.0) - 1e-12 || s.q > std::exp(2.0) + 1e-12) {
      return {false, "q outside [e, e^2] at T=" + std::to_string(T)};
    }
    double total = 0.0;
    for (int i = 1; i <= static_cast<int>(std::floor(std::log((double)T))) + 1; ++i) {
      total += s.batch_target(i);
    }
    if (total < static_cast<double>(T)) {
      return {false, "batch targets cannot reach the horizon"};
    }
  }
  return {true, "q in [e, e^2]; batch targets cover the horizon"};
}

Check check_runs() {
  const std::int64_t T = 20000;
  const double eps = 1.0;
  for (std::uint64_t seed : {1u, 2u}) {
    const BanditInstance inst = generate_instance(2, 10, seed);
    const RegretTrace traces[] = {
        run_central(inst, T, eps, seed),
        run_local(inst, T, eps, seed),
        run_shuffled(inst, T, eps, 1e-6, seed),
        run_nonprivate(inst, T, seed),
    };
    for (const RegretTrace& tr : traces) {
      if (tr.total_pulls != T) return {false, "pull budget mismatch"};
      if (tr.grid.empty() || tr.grid.back().t != T) return {false, "grid does not end at T"};
      double prev = -1.0;
      for (const TracePoint& p : tr.grid) {
        if (p.cum_regret + 1e-9 < prev) return {false, "regret not monotone"};
        prev = p.cum_regret;
      }
      const std::vector<int>* prev_ids = nullptr;
      for (const BatchRecord& rec : tr.batches) {
        if (!rec.completed) continue;
        if (prev_ids != nullptr) {
          for (int id : rec.active_set.ids()) {
            if (std::find(prev_ids->begin(), prev_ids->end(), id) == prev_ids->end()) {
              return {false, "candidate set grew"};
            }
          }
        }
        const std::int64_t expected =
            tr.model == Model::kCentral
                ? static_cast<std::int64_t>(rec.design.core.size())
                : (tr.model == Model::kNonPrivate ? 0 : rec.planned_len);
        if (rec.laplace_draws != expected) return {false, "noise draw count off"};
        if (tr.model == Model::kShuffled && rec.eps0_batch < eps - 1e-12) {
          return {false, "shuffled batch under-reports privacy"};
        }
        prev_ids = &rec.survivor_ids;
      }
    }
  }
  return {true, "budget, elimination, and noise accounting hold for all models"};
}

}  // namespace

std::vector<CheckResult> run_verification_suite() {
  std::vector<CheckResult> results;
  const std::vector<std::pair<std::string, Check (*)()>> checks = {
      {"net covering and span", &check_net_covering},
      {"design feasibility", &check_design_feasibility},
      {"amplification inversion", &check_amplification},
      {"laplace sampler", &check_sampler},
      {"batch schedule", &check_schedule},
      {"run accounting", &check_runs},
  };
  for (const auto& [name, fn] : checks) {
    CheckResult r;
    r.name = name;
    try {
      const auto [ok, detail] = fn();
      r.passed = ok;
      r.detail = detail;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace dpbandit
