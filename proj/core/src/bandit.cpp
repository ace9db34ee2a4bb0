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

#include "dpbandit/bandit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dpbandit/privacy.hpp"
#include "dpbandit/protocol.hpp"

namespace dpbandit {

namespace {

// Substream roles. Reward streams depend only on (seed, batch), so matched
// seeds expose every model to the same environment noise per batch.
constexpr std::uint64_t kTagReward = 0xB1;
constexpr std::uint64_t kTagPrivacy = 0xB2;
constexpr std::uint64_t kTagShuffle = 0xB3;

double shared_log_term(std::size_t active_size, std::int64_t T) {
  return std::log(4.0 * static_cast<double>(active_size) *
                  static_cast<double>(T) * static_cast<double>(T));
}

// Records cumulative regret whenever the pull count crosses a grid target.
class GridWriter {
 public:
  GridWriter(const std::vector<std::int64_t>& targets,
             std::vector<TracePoint>& out)
      : targets_(targets), out_(out) {}

  void advance(std::int64_t pulls, double cum) {
    while (next_ < targets_.size() && targets_[next_] <= pulls) {
      out_.push_back({targets_[next_], cum});
      ++next_;
    }
  }

  // Fill targets in (start_pulls, end_pulls] assuming every pull adds `gap`.
  void advance_linear(std::int64_t start_pulls, double start_cum, double gap,
                      std::int64_t end_pulls) {
    while (next_ < targets_.size() && targets_[next_] <= end_pulls) {
      const double cum =
          start_cum + gap * static_cast<double>(targets_[next_] - start_pulls);
      out_.push_back({targets_[next_], cum});
      ++next_;
    }
  }

 private:
  const std::vector<std::int64_t>& targets_;
  std::vector<TracePoint>& out_;
  std::size_t next_ = 0;
};

int argmax_id(const ActionSet& set, const Eigen::VectorXd& direction) {
  int best_id = 0;
  double best = -std::numeric_limits<double>::infinity();
  bool first = true;
  for (const Action& a : set) {
    const double v = direction.dot(a.coords);
    if (first || v > best || (v == best && a.id < best_id)) {
      best = v;
      best_id = a.id;
      first = false;
    }
  }
  return best_id;
}

// Uniform distribution over the whole active set, in place of the core-set
// design. Deliberately ignores the 2m norm target.
DesignResult uniform_design(const ActionSet& active) {
  DesignResult out;
  const double w = 1.0 / static_cast<double>(active.size());
  std::vector<double> weights(active.size(), w);
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(active.dim(), active.dim());
  for (const Action& a : active) {
    out.weights[a.id] = w;
    v.noalias() += w * a.coords * a.coords.transpose();
  }
  out.core = active;
  out.design_matrix = std::move(v);
  out.span_dim = span_dimension(active);
  const SymmetricPinv p = symmetric_pinv(out.design_matrix);
  double g = 0.0;
  for (const Action& a : active) {
    g = std::max(g, a.coords.dot(p.pinv * a.coords));
  }
  out.max_norm = g;
  return out;
}

struct ModelParams {
  Model model = Model::kNonPrivate;
  double epsilon = 0.0;  // epsilon (central/shuffled) or epsilon0 (local)
  double delta = 0.0;    // shuffled only
};

RegretTrace run_batched(const BanditInstance& instance, std::int64_t T,
                        const ModelParams& mp, std::uint64_t seed,
                        const RunOptions& opt) {
  const BatchSchedule sched = make_schedule(T);
  const int d = instance.actions.dim();

  ActionSet active =
      build_zeta_net(instance.actions, {1.0 / static_cast<double>(T)});

  RegretTrace trace;
  trace.model = mp.model;
  trace.epsilon = mp.model == Model::kNonPrivate
                      ? std::numeric_limits<double>::quiet_NaN()
                      : mp.epsilon;
  if (mp.model == Model::kShuffled) {
    trace.delta = mp.delta;
  } else if (mp.model == Model::kNonPrivate) {
    trace.delta = std::numeric_limits<double>::quiet_NaN();
  } else {
    trace.delta = 0.0;  // central and local are pure-epsilon mechanisms
  }
  trace.seed = seed;
  trace.d = d;
  trace.K = static_cast<int>(instance.actions.size());
  trace.T = T;

  RegretAccumulator acc(instance, T);
  const std::vector<std::int64_t> targets = make_trace_grid(T);
  GridWriter grid(targets, trace.grid);

  // Best action within the discretized candidate set, for diagnostics.
  const int best_id = argmax_id(active, instance.theta_star);

  bool have_estimate = false;
  Eigen::VectorXd theta_last;
  ActionSet exploit_set = active;

  std::int64_t pull_index = 0;
  auto draw_reward = [&](const Action& a, RngStream& env_rng) {
    double r = pull(instance, a, env_rng);
    if (opt.tweak && opt.tweak->pull_index == pull_index) r = opt.tweak->value;
    ++pull_index;
    return r;
  };

  for (int i = 1; i <= sched.num_batches && acc.pulls() < T; ++i) {
    BatchRecord rec;
    rec.batch_index = i;
    rec.active_set = active;
    rec.design = opt.uniform_design ? uniform_design(active)
                                    : frank_wolfe_design(active, opt.design);

    const double target = sched.batch_target(i);
    std::int64_t n_i = 0;
    for (const auto& [id, w] : rec.design.weights) {
      const auto c = static_cast<std::int64_t>(std::ceil(w * target));
      rec.counts[id] = c;
      n_i += c;
    }
    rec.planned_len = n_i;
    const std::int64_t remaining = T - acc.pulls();
    rec.truncated = n_i > remaining;

    RngStream env_rng(derive_seed(seed, kTagReward, static_cast<std::uint64_t>(i)));
    RngStream priv_rng(derive_seed(seed, kTagPrivacy, static_cast<std::uint64_t>(i)));

    switch (mp.model) {
      case Model::kCentral:
      case Model::kLocal:
      case Model::kNonPrivate: {
        const double scale =
            mp.model == Model::kNonPrivate ? 0.0 : 1.0 / mp.epsilon;
        rec.eps0_batch = mp.model == Model::kLocal ? mp.epsilon : 0.0;
        rec.laplace_scale = mp.model == Model::kNonPrivate ? 0.0 : scale;
        for (const auto& [id, count] : rec.counts) {
          const Action& a = *active.find(id);
          for (std::int64_t k = 0; k < count && acc.pulls() < T; ++k) {
            const double r = draw_reward(a, env_rng);
            acc.record(a);
            ++rec.batch_len;
            rec.pre_noise_sums[id] += r;
            if (mp.model == Model::kLocal) {
              const double z = sample_laplace(scale, priv_rng);
              rec.noisy_sums[id] += r + z;
              ++rec.laplace_draws;
              if (opt.record_noise) rec.noise_ledger.push_back({z, scale});
            } else {
              rec.noisy_sums[id] += r;
            }
            grid.advance(acc.pulls(), acc.cumulative());
          }
        }
        // The curator perturbs each completed per-action sum once.
        if (mp.model == Model::kCentral && !rec.truncated) {
          for (const auto& [id, count] : rec.counts) {
            (void)count;
            const double z = sample_laplace(scale, priv_rng);
            rec.noisy_sums[id] += z;
            ++rec.laplace_draws;
            if (opt.record_noise) rec.noise_ledger.push_back({z, scale});
          }
        }
        break;
      }
      case Model::kShuffled: {
        rec.eps0_batch = invert_amplification(mp.epsilon, n_i, mp.delta);
        const double scale = 1.0 / rec.eps0_batch;
        rec.laplace_scale = scale;

        // Shuffler: enumerate the batch multiset in ascending id order and
        // permute the assignment of slots to clients.
        std::vector<const Action*> enumeration;
        enumeration.reserve(static_cast<std::size_t>(n_i));
        for (const auto& [id, count] : rec.counts) {
          const Action* a = active.find(id);
          for (std::int64_t k = 0; k < count; ++k) enumeration.push_back(a);
        }
        RngStream shuffle_rng(
            derive_seed(seed, kTagShuffle, static_cast<std::uint64_t>(i)));
        const std::vector<std::int64_t> perm =
            random_permutation(n_i, shuffle_rng);

        if (opt.capture_protocol) {
          for (std::int64_t j = 0; j < n_i; ++j) {
            rec.protocol_log.push_back(ActionAssignment{
                j + 1, enumeration[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])]->id,
                n_i});
          }
        }

        // Clients play in client order; each privatizes its own reward.
        const std::int64_t to_play = std::min(n_i, remaining);
        std::vector<double> replies(static_cast<std::size_t>(n_i), 0.0);
        for (std::int64_t j = 0; j < to_play; ++j) {
          const Action& a =
              *enumeration[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
          const double r = draw_reward(a, env_rng);
          acc.record(a);
          ++rec.batch_len;
          rec.pre_noise_sums[a.id] += r;
          const double z = sample_laplace(scale, priv_rng);
          replies[static_cast<std::size_t>(j)] = r + z;
          ++rec.laplace_draws;
          if (opt.record_noise) rec.noise_ledger.push_back({z, scale});
          if (opt.capture_protocol) {
            rec.protocol_log.push_back(
                PrivatizedReward{j + 1, replies[static_cast<std::size_t>(j)]});
          }
          grid.advance(acc.pulls(), acc.cumulative());
        }

        // Shuffler: undo the permutation and report action-reward pairs.
        if (!rec.truncated) {
          BatchReport report;
          report.rewards.resize(static_cast<std::size_t>(n_i));
          for (std::int64_t j = 0; j < n_i; ++j) {
            const auto slot = static_cast<std::size_t>(perm[static_cast<std::size_t>(j)]);
            report.rewards[slot] = {enumeration[slot]->id,
                                    replies[static_cast<std::size_t>(j)]};
          }
          for (const auto& [id, value] : report.rewards) {
            rec.noisy_sums[id] += value;
          }
          if (opt.capture_protocol) rec.protocol_log.push_back(std::move(report));
        }
        break;
      }
    }

    if (rec.truncated) {
      trace.batches.push_back(std::move(rec));
      break;
    }

    rec.theta_hat = least_squares(rec.design.core, rec.counts, rec.noisy_sums);
    switch (mp.model) {
      case Model::kCentral:
        rec.gamma = gamma_central(i, sched.q, d, active.size(), T, mp.epsilon,
                                  rec.design.core.size());
        break;
      case Model::kLocal:
        rec.gamma =
            gamma_local(i, sched.q, d, active.size(), T, mp.epsilon, n_i);
        break;
      case Model::kShuffled:
        rec.gamma =
            gamma_local(i, sched.q, d, active.size(), T, rec.eps0_batch, n_i);
        break;
      case Model::kNonPrivate:
        rec.gamma = gamma_nonprivate(i, sched.q, d, active.size(), T);
        break;
    }

    ActionSet next = eliminate(active, rec.theta_hat, rec.gamma);
    rec.completed = true;
    rec.survivor_ids = next.ids();
    rec.best_action_survived = next.contains(best_id);
    theta_last = rec.theta_hat;
    have_estimate = true;
    exploit_set = next;
    trace.batches.push_back(std::move(rec));
    active = std::move(next);
  }

  // Exploitation: commit to the empirical best for the remaining budget. The
  // drawn rewards would never be read, so none are sampled.
  const std::int64_t remaining = T - acc.pulls();
  if (remaining > 0) {
    const Action* star = nullptr;
    if (have_estimate) {
      star = exploit_set.find(argmax_id(exploit_set, theta_last));
    } else {
      // No completed batch: fall back to the lowest-id candidate.
      int lowest = active[0].id;
      for (const Action& a : active) lowest = std::min(lowest, a.id);
      star = active.find(lowest);
    }
    const std::int64_t start_pulls = acc.pulls();
    const double start_cum = acc.cumulative();
    const double gap = acc.gap(*star);
    acc.record_many(*star, remaining);
    grid.advance_linear(start_pulls, start_cum, gap, T);
    trace.exploit_action_id = star->id;
  }

  trace.final_regret = acc.cumulative();
  trace.total_pulls = acc.pulls();
  return trace;
}

}  // namespace

double gamma_nonprivate(int batch_index, double q, int d,
                        std::size_t active_size, std::int64_t T) {
  const double qi = std::pow(q, batch_index);
  const double l = shared_log_term(active_size, T);
  return std::sqrt(4.0 * d / qi * l);
}

double gamma_central(int batch_index, double q, int d, std::size_t active_size,
                     std::int64_t T, double epsilon, std::size_t core_size) {
  const double qi = std::pow(q, batch_index);
  const double l = shared_log_term(active_size, T);
  return gamma_nonprivate(batch_index, q, d, active_size, T) +
         (2.0 * static_cast<double>(core_size) * d + 2.0 * d * l) /
             (epsilon * qi);
}

double gamma_local(int batch_index, double q, int d, std::size_t active_size,
                   std::int64_t T, double epsilon0, std::int64_t n_i) {
  const double qi = std::pow(q, batch_index);
  const double l = shared_log_term(active_size, T);
  return gamma_nonprivate(batch_index, q, d, active_size, T) +
         2.0 * d / (qi * epsilon0) * std::sqrt(static_cast<double>(n_i) * l);
}

Eigen::VectorXd least_squares(const ActionSet& core,
                              const std::map<int, std::int64_t>& counts,
                              const std::map<int, double>& noisy_sums) {
  const int d = core.dim();
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(d, d);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(d);
  for (const Action& a : core) {
    const auto cit = counts.find(a.id);
    if (cit == counts.end() || cit->second < 1) {
      throw Error("core action " + std::to_string(a.id) +
                  " is missing a positive pull count");
    }
    const auto sit = noisy_sums.find(a.id);
    if (sit == noisy_sums.end()) {
      throw Error("core action " + std::to_string(a.id) +
                  " is missing a reward sum");
    }
    v.noalias() += static_cast<double>(cit->second) * a.coords *
                   a.coords.transpose();
    rhs.noalias() += sit->second * a.coords;
  }
  const int m = span_dimension(core);
  const SymmetricPinv p = symmetric_pinv(v);
  if (p.rank < m) {
    throw SingularDesign("design matrix rank " + std::to_string(p.rank) +
                         " below core span " + std::to_string(m));
  }
  return p.pinv * rhs;
}

ActionSet eliminate(const ActionSet& active, const Eigen::VectorXd& theta_hat,
                    double gamma) {
  double best = -std::numeric_limits<double>::infinity();
  for (const Action& a : active) {
    best = std::max(best, theta_hat.dot(a.coords));
  }
  const double threshold = best - 2.0 * gamma;
  std::vector<int> keep;
  for (const Action& a : active) {
    if (theta_hat.dot(a.coords) >= threshold) keep.push_back(a.id);
  }
  return active.subset(keep);
}

RegretTrace run_central(const BanditInstance& instance, std::int64_t T,
                        double epsilon, std::uint64_t seed,
                        const RunOptions& options) {
  if (!(epsilon > 0.0)) throw Error("epsilon must be positive");
  return run_batched(instance, T, {Model::kCentral, epsilon, 0.0}, seed,
                     options);
}

RegretTrace run_local(const BanditInstance& instance, std::int64_t T,
                      double epsilon0, std::uint64_t seed,
                      const RunOptions& options) {
  if (!(epsilon0 > 0.0)) throw Error("epsilon0 must be positive");
  return run_batched(instance, T, {Model::kLocal, epsilon0, 0.0}, seed,
                     options);
}

RegretTrace run_shuffled(const BanditInstance& instance, std::int64_t T,
                         double epsilon, double delta, std::uint64_t seed,
                         const RunOptions& options) {
  if (!(epsilon > 0.0)) throw Error("epsilon must be positive");
  if (!(delta > 0.0 && delta < 1.0)) throw Error("delta must lie in (0, 1)");
  return run_batched(instance, T, {Model::kShuffled, epsilon, delta}, seed,
                     options);
}

RegretTrace run_nonprivate(const BanditInstance& instance, std::int64_t T,
                           std::uint64_t seed, const RunOptions& options) {
  return run_batched(instance, T, {Model::kNonPrivate, 0.0, 0.0}, seed,
                     options);
}

}  // namespace dpbandit
