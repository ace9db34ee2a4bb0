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

#include "dpbandit/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace dpbandit {

namespace {

int matrix_rank(const Eigen::MatrixXd& m, double rel_tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv[0] <= 0.0) return 0;
  const double cutoff = rel_tol * sv[0];
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv[i] > cutoff) ++r;
  }
  return r;
}

// Indices of `set` sorted by ascending action id.
std::vector<std::size_t> order_by_id(const ActionSet& set) {
  std::vector<std::size_t> idx(set.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return set[a].id < set[b].id; });
  return idx;
}

Eigen::MatrixXd design_matrix_from(const ActionSet& set,
                                   const std::vector<double>& weights) {
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(set.dim(), set.dim());
  for (std::size_t j = 0; j < set.size(); ++j) {
    if (weights[j] > 0.0) {
      v.noalias() += weights[j] * set[j].coords * set[j].coords.transpose();
    }
  }
  return v;
}

// Greedy pivoted selection of a spanning subset: repeatedly pick the action
// with the largest residual after projecting out the directions chosen so
// far. Ties keep the earliest action in set order.
std::vector<std::size_t> pivoted_spanning_subset(const ActionSet& set, int m) {
  std::vector<Eigen::VectorXd> residuals;
  residuals.reserve(set.size());
  for (const Action& a : set) residuals.push_back(a.coords);

  std::vector<std::size_t> picked;
  for (int step = 0; step < m; ++step) {
    std::size_t best = set.size();
    double best_norm = 0.0;
    for (std::size_t j = 0; j < set.size(); ++j) {
      const double n = residuals[j].norm();
      if (n > best_norm) {
        best = j;
        best_norm = n;
      }
    }
    if (best == set.size() || best_norm <= 0.0) break;
    picked.push_back(best);
    const Eigen::VectorXd dir = residuals[best] / best_norm;
    for (std::size_t j = 0; j < set.size(); ++j) {
      residuals[j] -= dir.dot(residuals[j]) * dir;
    }
  }
  return picked;
}

}  // namespace

int default_max_iters(int dim, std::size_t num_actions) {
  const double inner = std::log(std::log(static_cast<double>(num_actions)) + 2.0) + 1.0;
  return 50 * dim * static_cast<int>(std::ceil(inner));
}

SymmetricPinv symmetric_pinv(const Eigen::MatrixXd& m, double rel_tol) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  if (es.info() != Eigen::Success) throw Error("eigendecomposition failed");
  const Eigen::VectorXd& ev = es.eigenvalues();
  const Eigen::MatrixXd& q = es.eigenvectors();
  const double lmax = ev.size() ? ev.cwiseAbs().maxCoeff() : 0.0;
  const double cutoff = rel_tol * lmax;

  SymmetricPinv out;
  out.pinv = Eigen::MatrixXd::Zero(m.rows(), m.cols());
  out.projector = Eigen::MatrixXd::Zero(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev[i] > cutoff) {
      out.pinv.noalias() += (1.0 / ev[i]) * q.col(i) * q.col(i).transpose();
      out.projector.noalias() += q.col(i) * q.col(i).transpose();
      ++out.rank;
    }
  }
  return out;
}

int span_dimension(const ActionSet& set) {
  return matrix_rank(set.matrix(), kRankRelTol);
}

ActionSet build_zeta_net(const ActionSet& set, const NetParams& params) {
  if (!(params.zeta > 0.0)) throw Error("zeta must be positive");

  const auto order = order_by_id(set);
  std::vector<std::size_t> net;
  for (std::size_t j : order) {
    bool covered = false;
    for (std::size_t k : net) {
      if ((set[j].coords - set[k].coords).norm() <= params.zeta) {
        covered = true;
        break;
      }
    }
    if (!covered) net.push_back(j);
  }

  auto net_matrix = [&]() {
    Eigen::MatrixXd m(set.dim(), static_cast<Eigen::Index>(net.size()));
    for (std::size_t i = 0; i < net.size(); ++i) {
      m.col(static_cast<Eigen::Index>(i)) = set[net[i]].coords;
    }
    return m;
  };

  // Covering can drop directions; put them back.
  const int target_rank = span_dimension(set);
  int rank = matrix_rank(net_matrix(), kRankRelTol);
  if (rank < target_rank) {
    for (std::size_t j : order) {
      if (rank == target_rank) break;
      if (std::find(net.begin(), net.end(), j) != net.end()) continue;
      net.push_back(j);
      const int r = matrix_rank(net_matrix(), kRankRelTol);
      if (r > rank) {
        rank = r;
      } else {
        net.pop_back();
      }
    }
  }

  std::vector<Action> kept;
  kept.reserve(net.size());
  for (std::size_t j : net) kept.push_back(set[j]);
  return ActionSet(std::move(kept), set.dim());
}

DesignResult frank_wolfe_design(const ActionSet& set, const FwParams& params) {
  const std::size_t n = set.size();
  const int max_iters = params.max_iters > 0
                            ? params.max_iters
                            : default_max_iters(set.dim(), n);
  if (max_iters < 1) throw Error("max_iters must be >= 1");

  const int m = span_dimension(set);
  if (m < 1) throw Error("action set spans no direction");
  const double bound = 2.0 * m * (1.0 + params.target_norm_slack);

  std::vector<double> pi(n, 0.0);
  for (std::size_t j : pivoted_spanning_subset(set, m)) pi[j] = 1.0 / m;

  // One Frank-Wolfe pass; on return pi satisfies the bound.
  double achieved = 0.0;
  bool converged = false;
  for (int it = 0; it <= max_iters; ++it) {
    const Eigen::MatrixXd v = design_matrix_from(set, pi);
    const SymmetricPinv p = symmetric_pinv(v);
    std::size_t arg = 0;
    double g = -1.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double val = set[j].coords.dot(p.pinv * set[j].coords);
      if (val > g) {
        g = val;
        arg = j;
      }
    }
    achieved = g;
    if (g <= bound) {
      converged = true;
      break;
    }
    if (it == max_iters || g <= static_cast<double>(m)) break;
    const double nu = (g / m - 1.0) / (g - 1.0);
    for (double& w : pi) w *= (1.0 - nu);
    pi[arg] += nu;
  }
  if (!converged) throw DesignInfeasible(achieved, bound);

  // Prune dust weights, re-verify, and back off if the bound breaks.
  auto evaluate = [&](const std::vector<double>& w)
      -> std::pair<double, int> {  // (max norm, rank)
    const Eigen::MatrixXd v = design_matrix_from(set, w);
    const SymmetricPinv p = symmetric_pinv(v);
    double g = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      g = std::max(g, set[j].coords.dot(p.pinv * set[j].coords));
    }
    return {g, p.rank};
  };

  std::vector<double> final_pi = pi;
  double threshold = params.prune_threshold;
  for (int attempt = 0; attempt <= 10; ++attempt) {
    std::vector<double> cand = pi;
    if (attempt < 10) {
      for (double& w : cand) {
        if (w < threshold) w = 0.0;
      }
    }
    const double total = std::accumulate(cand.begin(), cand.end(), 0.0);
    if (total > 0.0) {
      for (double& w : cand) w /= total;
      const auto [g, rank] = evaluate(cand);
      if (rank == m && g <= bound) {
        final_pi = cand;
        break;
      }
    }
    threshold *= 0.5;
  }

  DesignResult out;
  std::vector<int> core_ids;
  for (std::size_t j = 0; j < n; ++j) {
    if (final_pi[j] > 0.0) {
      core_ids.push_back(set[j].id);
      out.weights[set[j].id] = final_pi[j];
    }
  }
  out.core = set.subset(core_ids);
  out.design_matrix = design_matrix_from(set, final_pi);
  out.span_dim = m;
  out.max_norm = evaluate(final_pi).first;
  return out;
}

double max_design_norm(const ActionSet& set, const DesignResult& design) {
  const SymmetricPinv p = symmetric_pinv(design.design_matrix);
  double g = 0.0;
  for (const Action& a : set) {
    const double outside = (a.coords - p.projector * a.coords).norm();
    if (outside > kSpanTol) {
      throw SpanMismatch("action " + std::to_string(a.id) + " has magnitude " +
                         std::to_string(outside) + " outside the design span");
    }
    g = std::max(g, a.coords.dot(p.pinv * a.coords));
  }
  return g;
}

}  // namespace dpbandit
