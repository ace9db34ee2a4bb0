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
#include <map>

#include "dpbandit/actions.hpp"

namespace dpbandit {

// Singular values below kRankRelTol times the largest one count as zero.
inline constexpr double kRankRelTol = 1e-10;

// Components larger than this outside a design span trigger SpanMismatch.
inline constexpr double kSpanTol = 1e-8;

struct NetParams {
  double zeta = 0.0;  // covering radius, must be positive
};

struct FwParams {
  // Accept designs with max norm up to 2 * span_dim * (1 + target_norm_slack).
  double target_norm_slack = 0.05;
  // 0 selects default_max_iters(dim, set size).
  int max_iters = 0;
  // Weights below this are dropped after convergence (with re-verification).
  double prune_threshold = 1e-6;
};

int default_max_iters(int dim, std::size_t num_actions);

// Output of the design computation: a small core of actions, a sampling
// distribution on it, and the induced second-moment matrix.
struct DesignResult {
  ActionSet core;                  // actions carrying positive weight
  std::map<int, double> weights;   // action id -> probability, sums to 1
  Eigen::MatrixXd design_matrix;   // sum_a weights[a] * a a^T
  int span_dim = 0;                // rank of the span of the input set
  double max_norm = 0.0;           // max_a a^T V(pi)^+ a over the input set
};

// Pseudo-inverse of a symmetric PSD matrix via eigendecomposition, together
// with the orthogonal projector onto its numerical range.
struct SymmetricPinv {
  Eigen::MatrixXd pinv;
  Eigen::MatrixXd projector;
  int rank = 0;
};
SymmetricPinv symmetric_pinv(const Eigen::MatrixXd& m,
                             double rel_tol = kRankRelTol);

// Numerical rank of the matrix whose columns are the set's actions.
int span_dimension(const ActionSet& set);

// Greedy covering net: scans actions in ascending id order and keeps those
// not within params.zeta of an already kept action, then appends actions as
// needed so the net spans the same subspace as the input. Callers with a
// continuous action space are expected to sample it to a finite set first.
ActionSet build_zeta_net(const ActionSet& set, const NetParams& params);

// Frank-Wolfe search for a near-optimal exploration design: starts from the
// uniform distribution on a pivoted spanning subset, repeatedly moves mass
// toward the action with the largest design norm using the exact line-search
// step, and stops once max_a a^T V(pi)^+ a <= 2 * span_dim * (1 + slack).
// Weights below prune_threshold are then dropped and renormalized; if pruning
// breaks the norm bound the threshold is halved and pruning retried (at most
// ten times, falling back to the unpruned weights).
//
// Throws DesignInfeasible when the bound is not met within max_iters.
DesignResult frank_wolfe_design(const ActionSet& set, const FwParams& params = {});

// Max of a^T V(pi)^+ a over `set`, with the pseudo-inverse restricted to the
// design span. Throws SpanMismatch if an action has a component of magnitude
// above kSpanTol outside that span.
double max_design_norm(const ActionSet& set, const DesignResult& design);

}  // namespace dpbandit
