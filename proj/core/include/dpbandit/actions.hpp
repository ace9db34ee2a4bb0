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
#include <vector>

#include "dpbandit/errors.hpp"

namespace dpbandit {

// Actions live in the unit ball; the tolerance absorbs normalization dust.
inline constexpr double kActionNormSlack = 1e-12;

// A decision vector tagged with a stable id. Ids survive subset operations,
// so per-action weights and pull counts stay keyed consistently while the
// candidate set shrinks over elimination rounds.
struct Action {
  int id = 0;
  Eigen::VectorXd coords;
};

// Ordered, duplicate-free collection of same-dimension actions.
class ActionSet {
 public:
  // Empty placeholder; any populated set goes through the validating
  // constructor below.
  ActionSet() = default;

  // Validates: non-empty, consistent dimension, unit-ball norms, unique ids,
  // no two actions with identical coordinates.
  ActionSet(std::vector<Action> actions, int dim);

  // Assigns ids 0..n-1 in input order. Throws on exact duplicates.
  static ActionSet from_vectors(const std::vector<Eigen::VectorXd>& vectors);

  // Same, but silently drops exact duplicates (first occurrence wins).
  static ActionSet from_vectors_dedup(const std::vector<Eigen::VectorXd>& vectors);

  int dim() const { return dim_; }
  std::size_t size() const { return actions_.size(); }
  const Action& operator[](std::size_t i) const { return actions_[i]; }
  auto begin() const { return actions_.begin(); }
  auto end() const { return actions_.end(); }

  // nullptr when the id is absent.
  const Action* find(int id) const;
  bool contains(int id) const { return find(id) != nullptr; }

  std::vector<int> ids() const;

  // Subset preserving this set's order; every requested id must exist.
  ActionSet subset(const std::vector<int>& keep_ids) const;

  // Columns are action coordinate vectors, in set order.
  Eigen::MatrixXd matrix() const;

 private:
  std::vector<Action> actions_;
  int dim_ = 0;
};

}  // namespace dpbandit
