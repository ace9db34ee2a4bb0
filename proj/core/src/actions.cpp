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

#include "dpbandit/actions.hpp"

#include <algorithm>
#include <unordered_set>

namespace dpbandit {

namespace {

bool same_coords(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

}  // namespace

ActionSet::ActionSet(std::vector<Action> actions, int dim)
    : actions_(std::move(actions)), dim_(dim) {
  if (actions_.empty()) throw Error("action set must be non-empty");
  if (dim_ < 1) throw Error("action set dimension must be >= 1");
  std::unordered_set<int> seen;
  for (const Action& a : actions_) {
    if (a.coords.size() != dim_)
      throw Error("action " + std::to_string(a.id) + " has dimension " +
                  std::to_string(a.coords.size()) + ", expected " +
                  std::to_string(dim_));
    if (a.coords.norm() > 1.0 + kActionNormSlack)
      throw Error("action " + std::to_string(a.id) +
                  " lies outside the unit ball");
    if (!seen.insert(a.id).second)
      throw Error("duplicate action id " + std::to_string(a.id));
  }
  for (std::size_t i = 0; i < actions_.size(); ++i) {
    for (std::size_t j = i + 1; j < actions_.size(); ++j) {
      if (same_coords(actions_[i].coords, actions_[j].coords))
        throw Error("actions " + std::to_string(actions_[i].id) + " and " +
                    std::to_string(actions_[j].id) +
                    " have identical coordinates");
    }
  }
}

ActionSet ActionSet::from_vectors(const std::vector<Eigen::VectorXd>& vectors) {
  if (vectors.empty()) throw Error("action set must be non-empty");
  std::vector<Action> acts;
  acts.reserve(vectors.size());
  int id = 0;
  for (const auto& v : vectors) acts.push_back({id++, v});
  return ActionSet(std::move(acts), static_cast<int>(vectors.front().size()));
}

ActionSet ActionSet::from_vectors_dedup(
    const std::vector<Eigen::VectorXd>& vectors) {
  std::vector<Eigen::VectorXd> kept;
  for (const auto& v : vectors) {
    bool dup = false;
    for (const auto& k : kept) {
      if (same_coords(v, k)) {
        dup = true;
        break;
      }
    }
    if (!dup) kept.push_back(v);
  }
  return from_vectors(kept);
}

const Action* ActionSet::find(int id) const {
  for (const Action& a : actions_) {
    if (a.id == id) return &a;
  }
  return nullptr;
}

std::vector<int> ActionSet::ids() const {
  std::vector<int> out;
  out.reserve(actions_.size());
  for (const Action& a : actions_) out.push_back(a.id);
  return out;
}

ActionSet ActionSet::subset(const std::vector<int>& keep_ids) const {
  std::unordered_set<int> keep(keep_ids.begin(), keep_ids.end());
  for (int id : keep_ids) {
    if (!contains(id))
      throw Error("subset requests unknown action id " + std::to_string(id));
  }
  std::vector<Action> out;
  out.reserve(keep.size());
  for (const Action& a : actions_) {
    if (keep.count(a.id)) out.push_back(a);
  }
  return ActionSet(std::move(out), dim_);
}

Eigen::MatrixXd ActionSet::matrix() const {
  Eigen::MatrixXd m(dim_, static_cast<Eigen::Index>(actions_.size()));
  for (std::size_t i = 0; i < actions_.size(); ++i) {
    m.col(static_cast<Eigen::Index>(i)) = actions_[i].coords;
  }
  return m;
}

}  // namespace dpbandit
