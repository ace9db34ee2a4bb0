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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "dpbandit/bandit.hpp"
#include "dpbandit/privacy.hpp"
#include "test_util.hpp"

using namespace dpbandit;
using testutil::basis_vector;

namespace {

RegretTrace run_model(Model m, const BanditInstance& inst, std::int64_t T,
                      double eps, double delta, std::uint64_t seed,
                      const RunOptions& opt = {}) {
  switch (m) {
    case Model::kCentral:
      return run_central(inst, T, eps, seed, opt);
    case Model::kLocal:
      return run_local(inst, T, eps, seed, opt);
    case Model::kShuffled:
      return run_shuffled(inst, T, eps, delta, seed, opt);
    case Model::kNonPrivate:
      return run_nonprivate(inst, T, seed, opt);
  }
  throw Error("unknown model");
}

int empirical_argmax(const ActionSet& set, const Eigen::VectorXd& theta) {
  int best_id = set[0].id;
  double best = -1e300;
  for (const Action& a : set) {
    const double v = theta.dot(a.coords);
    if (v > best || (v == best && a.id < best_id)) {
      best = v;
      best_id = a.id;
    }
  }
  return best_id;
}

}  // namespace

TEST_CASE("schedule pins q to [e, e^2]") {
  const BatchSchedule s404 = make_schedule(404);
  // (2*404)^(1/ln 404), evaluated independently at 50-digit precision
  CHECK(s404.q == doctest::Approx(3.051085089293119059058).epsilon(1e-14));

  for (std::int64_t T : {16LL, 100LL, 10000LL, 1000000LL, 10000000LL}) {
    const BatchSchedule s = make_schedule(T);
    CHECK(s.q >= std::exp(1.0) - 1e-12);
    CHECK(s.q <= std::exp(2.0) + 1e-12);
  }
}

TEST_CASE("schedule batch counts") {
  CHECK(make_schedule(1000000).num_batches == 12);
  CHECK(make_schedule(100000).num_batches == 10);
  CHECK(make_schedule(10000).num_batches == 8);
  CHECK(make_schedule(16).num_batches == 1);
  CHECK_THROWS_AS(make_schedule(15), HorizonTooSmall);
}

TEST_CASE("batch targets cover the horizon") {
  // One extra step beyond floor(ln T) always clears 2T, since q^(ln T) = 2T.
  for (std::int64_t T : {16LL, 20LL, 54LL, 1000LL, 1000000LL}) {
    const BatchSchedule s = make_schedule(T);
    const int steps = static_cast<int>(std::floor(std::log((double)T))) + 1;
    double total = 0.0;
    for (int i = 1; i <= steps; ++i) total += s.batch_target(i);
    CHECK(total >= static_cast<double>(T));
  }
}

TEST_CASE("central radius matches a high-precision evaluation") {
  // i=1, q=e, d=2, |A|=10, T=1e6, eps=1, core=3; 50-digit reference
  const double q = std::exp(1.0);
  const double g = gamma_central(1, q, 2, 10, 1000000, 1.0, 3);
  CHECK(g == doctest::Approx(60.10315480312911676523).epsilon(1e-13));
}

TEST_CASE("central radius limits and monotonicity") {
  const double q = std::exp(1.0);
  const double np = gamma_nonprivate(1, q, 2, 10, 1000000);
  // the privacy term vanishes as epsilon grows
  CHECK(gamma_central(1, q, 2, 10, 1000000, 1e12, 3) ==
        doctest::Approx(np).epsilon(1e-9));
  double prev = 1e300;
  for (int i = 1; i <= 8; ++i) {
    const double g = gamma_central(i, q, 2, 10, 1000000, 1.0, 3);
    CHECK(g < prev);
    prev = g;
  }
}

TEST_CASE("local radius matches a high-precision evaluation") {
  // i=2, q=e, d=2, |A|=10, T=1e6, eps0=0.5, n_i=round(2 e^2)=15
  const double q = std::exp(1.0);
  const double g = gamma_local(2, q, 2, 10, 1000000, 0.5, 15);
  CHECK(g == doctest::Approx(29.29014686826888469334).epsilon(1e-13));
}

TEST_CASE("local radius scaling in the batch length") {
  const double q = std::exp(1.0);
  const double np = gamma_nonprivate(2, q, 2, 10, 1000000);
  CHECK(gamma_local(2, q, 2, 10, 1000000, 1e12, 100) ==
        doctest::Approx(np).epsilon(1e-9));
  // doubling n multiplies the privacy term by sqrt(2)
  const double one = gamma_local(2, q, 2, 10, 1000000, 0.5, 100) - np;
  const double two = gamma_local(2, q, 2, 10, 1000000, 0.5, 200) - np;
  CHECK(two == doctest::Approx(std::sqrt(2.0) * one).epsilon(1e-12));
}

TEST_CASE("least squares projects onto a one-dimensional core") {
  const ActionSet core({{0, basis_vector(2, 0)}}, 2);
  const Eigen::VectorXd theta =
      least_squares(core, {{0, 100}}, {{0, 100.0 * 0.7}});
  CHECK(theta[0] == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(theta[1] == 0.0);
}

TEST_CASE("least squares interpolates noiseless basis sums exactly") {
  std::vector<Eigen::VectorXd> v;
  for (int i = 0; i < 3; ++i) v.push_back(basis_vector(3, i));
  const ActionSet core = ActionSet::from_vectors(v);
  Eigen::VectorXd star(3);
  star << 0.3, -0.5, 0.8;
  std::map<int, std::int64_t> counts;
  std::map<int, double> sums;
  for (const Action& a : core) {
    counts[a.id] = 40 + a.id;
    sums[a.id] = counts[a.id] * star.dot(a.coords);
  }
  const Eigen::VectorXd theta = least_squares(core, counts, sums);
  CHECK((theta - star).norm() <= 1e-10);
}

TEST_CASE("least squares agrees with an independent dense solver") {
  const BanditInstance inst = generate_instance(3, 8, 21);
  const ActionSet& core = inst.actions;
  RngStream rng(99);
  std::map<int, std::int64_t> counts;
  std::map<int, double> sums;
  for (const Action& a : core) {
    counts[a.id] = 50 + static_cast<std::int64_t>(rng.below(100));
    const double mean = inst.theta_star.dot(a.coords);
    sums[a.id] = counts[a.id] * mean + sample_laplace(2.0, rng);
  }
  const Eigen::VectorXd theta = least_squares(core, counts, sums);

  // independent route: weighted least squares via SVD on sqrt(n_a) a^T
  Eigen::MatrixXd x(core.size(), 3);
  Eigen::VectorXd y(core.size());
  for (std::size_t i = 0; i < core.size(); ++i) {
    const Action& a = core[i];
    const double w = std::sqrt(static_cast<double>(counts[a.id]));
    x.row(i) = w * a.coords.transpose();
    y[i] = sums[a.id] / w;
  }
  const Eigen::VectorXd oracle =
      x.jacobiSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(y);
  CHECK((theta - oracle).norm() <= 1e-9);
}

TEST_CASE("least squares detects a rank-deficient design matrix") {
  // Nearly parallel pair: the action matrix keeps rank 2 at the default
  // tolerance but the squared system collapses to rank 1.
  Eigen::VectorXd a(2), b(2);
  a << 1.0, 0.0;
  b << 1.0, 1e-7;
  b.normalize();
  const ActionSet core = ActionSet::from_vectors({a, b});
  REQUIRE(span_dimension(core) == 2);
  CHECK_THROWS_AS(least_squares(core, {{0, 10}, {1, 10}}, {{0, 1.0}, {1, 1.0}}),
                  SingularDesign);
}

TEST_CASE("least squares requires counts and sums for the whole core") {
  const ActionSet core = ActionSet::from_vectors(
      {basis_vector(2, 0), basis_vector(2, 1)});
  CHECK_THROWS_AS(least_squares(core, {{0, 10}}, {{0, 1.0}, {1, 1.0}}), Error);
  CHECK_THROWS_AS(least_squares(core, {{0, 10}, {1, 0}}, {{0, 1.0}, {1, 1.0}}),
                  Error);
}

TEST_CASE("elimination keeps exactly the near-maximal actions") {
  Eigen::VectorXd theta(2);
  theta << 1.0, 0.0;
  Eigen::VectorXd top(2), low(2);
  top << 1.0, 0.0;
  low << 0.2, 0.4;
  const ActionSet active = ActionSet::from_vectors({top, low});

  SUBCASE("huge gamma keeps everything") {
    CHECK(eliminate(active, theta, 100.0).size() == 2);
  }
  SUBCASE("a clear laggard is dropped") {
    const ActionSet next = eliminate(active, theta, 0.1);
    CHECK(next.size() == 1);
    CHECK(next.contains(0));
  }
  SUBCASE("a boundary tie survives") {
    // value 0.5 == 1.0 - 2 * 0.25 exactly in binary floating point
    Eigen::VectorXd tie(2);
    tie << 0.5, 0.5;
    const ActionSet with_tie = ActionSet::from_vectors({top, tie});
    const ActionSet next = eliminate(with_tie, theta, 0.25);
    CHECK(next.size() == 2);
  }
  SUBCASE("the empirical argmax always survives") {
    CHECK(eliminate(active, theta, 0.0).contains(0));
  }
}

TEST_CASE("noiseless high-budget run locks onto the best action") {
  const BanditInstance inst =
      generate_instance(2, 10, 4, {NoiseModel::Kind::kUniformBounded, 0.0});
  const RegretTrace tr = run_central(inst, 100000, 1e9, 4);
  const int best = empirical_argmax(inst.actions, inst.theta_star);
  for (const BatchRecord& rec : tr.batches) {
    CHECK(rec.best_action_survived);
  }
  CHECK(tr.exploit_action_id == best);
  CHECK(tr.total_pulls == 100000);
  // exploitation contributes zero regret: flat trace past the batch phase
  std::int64_t batch_pulls = 0;
  for (const BatchRecord& rec : tr.batches) batch_pulls += rec.batch_len;
  for (const TracePoint& p : tr.grid) {
    if (p.t >= batch_pulls) CHECK(p.cum_regret == tr.final_regret);
  }
}

TEST_CASE("total pulls always equal the horizon") {
  for (std::int64_t T : {16LL, 17LL, 101LL, 10000LL}) {
    const BanditInstance inst = generate_instance(2, 10, 2);
    for (Model m : {Model::kCentral, Model::kLocal, Model::kShuffled,
                    Model::kNonPrivate}) {
      const RegretTrace tr = run_model(m, inst, T, 1.0, 1e-6, 2);
      CHECK(tr.total_pulls == T);
      REQUIRE(!tr.grid.empty());
      CHECK(tr.grid.back().t == T);
    }
  }
}

TEST_CASE("run-level invariants hold for every model") {
  const std::int64_t T = 10000;
  for (Model m : {Model::kCentral, Model::kLocal, Model::kShuffled,
                  Model::kNonPrivate}) {
    for (std::uint64_t seed : {0u, 1u, 2u, 3u, 4u}) {
      const BanditInstance inst = generate_instance(2, 10, seed);
      const RegretTrace tr = run_model(m, inst, T, 1.0, 1e-6, seed);

      // grid sanity
      std::int64_t prev_t = 0;
      double prev_r = -1e-9;
      for (const TracePoint& p : tr.grid) {
        CHECK(p.t > prev_t);
        CHECK(p.cum_regret >= prev_r - 1e-9);
        prev_t = p.t;
        prev_r = p.cum_regret;
      }
      CHECK(prev_t == T);

      const std::vector<int>* expected_active = nullptr;
      for (const BatchRecord& rec : tr.batches) {
        if (expected_active != nullptr) {
          CHECK(rec.active_set.ids() == *expected_active);
        }
        if (!rec.completed) continue;

        // counts cover the core with positive schedules
        std::int64_t n_i = 0;
        for (const auto& [id, c] : rec.counts) {
          CHECK(c >= 1);
          CHECK(rec.design.core.contains(id));
          n_i += c;
        }
        CHECK(n_i == rec.planned_len);
        CHECK(rec.batch_len == rec.planned_len);
        CHECK(rec.gamma > 0.0);

        // survivors form a subset containing the empirical argmax
        const int argmax = empirical_argmax(rec.active_set, rec.theta_hat);
        CHECK(std::find(rec.survivor_ids.begin(), rec.survivor_ids.end(),
                        argmax) != rec.survivor_ids.end());
        for (int id : rec.survivor_ids) CHECK(rec.active_set.contains(id));

        // noise accounting per model
        switch (m) {
          case Model::kCentral:
            CHECK(rec.laplace_draws ==
                  static_cast<std::int64_t>(rec.design.core.size()));
            CHECK(rec.laplace_scale == 1.0);
            break;
          case Model::kLocal:
            CHECK(rec.laplace_draws == rec.planned_len);
            CHECK(rec.laplace_scale == 1.0);
            CHECK(rec.eps0_batch == 1.0);
            break;
          case Model::kShuffled:
            CHECK(rec.laplace_draws == rec.planned_len);
            CHECK(rec.eps0_batch >= 1.0 - 1e-12);
            CHECK(rec.laplace_scale ==
                  doctest::Approx(1.0 / rec.eps0_batch).epsilon(1e-15));
            break;
          case Model::kNonPrivate:
            CHECK(rec.laplace_draws == 0);
            break;
        }
        expected_active = &rec.survivor_ids;
      }
    }
  }
}

TEST_CASE("trace metadata reflects the run parameters") {
  const BanditInstance inst = generate_instance(3, 12, 41);
  const RegretTrace c = run_central(inst, 20000, 0.7, 41);
  CHECK(c.model == Model::kCentral);
  CHECK(c.epsilon == 0.7);
  CHECK(c.delta == 0.0);  // pure-epsilon mechanism
  CHECK(c.seed == 41);
  CHECK(c.d == 3);
  CHECK(c.K == 12);
  CHECK(c.T == 20000);

  const RegretTrace s = run_shuffled(inst, 20000, 0.7, 1e-5, 41);
  CHECK(s.delta == 1e-5);

  const RegretTrace n = run_nonprivate(inst, 20000, 41);
  CHECK(std::isnan(n.epsilon));
  CHECK(std::isnan(n.delta));
}

TEST_CASE("negligible noise makes central and local runs coincide") {
  const BanditInstance inst = generate_instance(2, 10, 6);
  const RegretTrace c = run_central(inst, 100000, 1e9, 6);
  const RegretTrace l = run_local(inst, 100000, 1e9, 6);
  CHECK(std::abs(c.final_regret - l.final_regret) <=
        1e-6 * std::max(1.0, c.final_regret));
  // identical sampling grid across models
  REQUIRE(c.grid.size() == l.grid.size());
  for (std::size_t i = 0; i < c.grid.size(); ++i) {
    CHECK(c.grid[i].t == l.grid[i].t);
  }
}

TEST_CASE("shuffle protocol messages reconstruct the assignment multiset") {
  RunOptions opt;
  opt.capture_protocol = true;
  const BanditInstance inst = generate_instance(2, 10, 12);
  const RegretTrace tr = run_shuffled(inst, 10000, 0.5, 1e-6, 12, opt);

  for (const BatchRecord& rec : tr.batches) {
    if (!rec.completed) continue;
    std::multiset<int> assigned, reported;
    std::set<std::int64_t> clients, slots;
    const BatchReport* report = nullptr;
    for (const ProtocolMessage& msg : rec.protocol_log) {
      if (const auto* a = std::get_if<ActionAssignment>(&msg)) {
        assigned.insert(a->action_id);
        clients.insert(a->client);
        CHECK(a->batch_size == rec.planned_len);
      } else if (const auto* r = std::get_if<PrivatizedReward>(&msg)) {
        slots.insert(r->slot);
      } else if (const auto* b = std::get_if<BatchReport>(&msg)) {
        report = b;
      }
    }
    REQUIRE(report != nullptr);
    for (const auto& [id, value] : report->rewards) {
      (void)value;
      reported.insert(id);
    }
    CHECK(assigned == reported);

    // client ids and reply slots are each a permutation of 1..n_i
    CHECK(clients.size() == static_cast<std::size_t>(rec.planned_len));
    CHECK(slots.size() == static_cast<std::size_t>(rec.planned_len));
    CHECK(*clients.begin() == 1);
    CHECK(*clients.rbegin() == rec.planned_len);
    CHECK(*slots.begin() == 1);
    CHECK(*slots.rbegin() == rec.planned_len);

    // the multiset agrees with the scheduled counts
    for (const auto& [id, c] : rec.counts) {
      CHECK(static_cast<std::int64_t>(assigned.count(id)) == c);
    }

    // per-action sums recomputed from the report match what the server used
    std::map<int, double> resummed;
    for (const auto& [id, value] : report->rewards) resummed[id] += value;
    for (const auto& [id, sum] : rec.noisy_sums) {
      CHECK(resummed[id] == sum);  // same additions in the same order
    }
  }
}

TEST_CASE("permutation round trip is the identity") {
  RngStream rng(5);
  const auto p = random_permutation(257, rng);
  const auto inv = invert_permutation(p);
  for (std::int64_t j = 0; j < 257; ++j) {
    CHECK(inv[static_cast<std::size_t>(p[static_cast<std::size_t>(j)])] == j);
  }
  CHECK_THROWS_AS(invert_permutation({0, 0}), Error);
}

TEST_CASE("changing one reward changes exactly one pre-noise sum") {
  const std::int64_t T = 100000;
  const std::uint64_t seed = 5;
  const BanditInstance inst = generate_instance(2, 10, seed);
  const RegretTrace base = run_central(inst, T, 1.0, seed);

  // Target a pull in the middle of the batch phase.
  REQUIRE(base.batches.size() >= 4);
  std::int64_t offset = 0;
  for (std::size_t b = 0; b + 1 < 4; ++b) offset += base.batches[b].batch_len;
  const std::int64_t target_pull = offset + base.batches[3].batch_len / 2;

  RunOptions opt;
  opt.tweak = RewardTweak{target_pull, 0.33};
  const RegretTrace tweaked = run_central(inst, T, 1.0, seed, opt);

  REQUIRE(tweaked.batches.size() == base.batches.size());
  int sums_changed = 0;
  for (std::size_t b = 0; b < base.batches.size(); ++b) {
    const BatchRecord& rb = base.batches[b];
    const BatchRecord& rt = tweaked.batches[b];
    // identical structure: same candidates, same schedule
    REQUIRE(rb.active_set.ids() == rt.active_set.ids());
    REQUIRE(rb.counts == rt.counts);
    for (const auto& [id, sum] : rb.pre_noise_sums) {
      const double other = rt.pre_noise_sums.at(id);
      if (sum != other) {
        ++sums_changed;
        CHECK(std::abs(sum - other) <= 2.0 + 1e-12);
        CHECK(b == 3);  // only the batch containing the tweak
        // the privatized sum moves by the same amount (same noise draw)
        CHECK(rt.noisy_sums.at(id) - rb.noisy_sums.at(id) ==
              doctest::Approx(other - sum).epsilon(1e-12));
      }
    }
  }
  CHECK(sums_changed == 1);
}

TEST_CASE("the non-private baseline dominates a private run on average") {
  double np = 0.0, central = 0.0;
  const std::int64_t T = 100000;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const BanditInstance inst = generate_instance(2, 10, seed);
    np += run_nonprivate(inst, T, seed).final_regret;
    central += run_central(inst, T, 0.1, seed).final_regret;
  }
  CHECK(np <= central);
}

TEST_CASE("a batch overshooting the budget truncates cleanly") {
  RunOptions opt;
  opt.uniform_design = true;  // forces n_i >= |A_i| = 100 per batch
  const BanditInstance inst = generate_instance(2, 100, 8);
  const RegretTrace tr = run_central(inst, 120, 1.0, 8, opt);
  CHECK(tr.total_pulls == 120);
  REQUIRE(!tr.batches.empty());
  const BatchRecord& last = tr.batches.back();
  CHECK(last.truncated);
  CHECK_FALSE(last.completed);
  CHECK(last.batch_len < last.planned_len);
  CHECK(tr.batches.front().completed);
  // the cut batch absorbs the whole remaining budget, so no exploitation runs
  CHECK(tr.exploit_action_id == -1);
  CHECK(tr.grid.back().t == 120);
}
