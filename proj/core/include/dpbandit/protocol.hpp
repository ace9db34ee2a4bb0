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
#include <utility>
#include <variant>
#include <vector>

#include "dpbandit/rng.hpp"

namespace dpbandit {

// Messages exchanged between shuffler, clients and server when a batch is
// routed through the shuffle protocol. Slots and clients are 1-based and
// within a batch form a permutation of 1..n_i.

// Shuffler -> client j: play this action; the batch holds batch_size reports.
struct ActionAssignment {
  std::int64_t client = 0;
  int action_id = 0;
  std::int64_t batch_size = 0;
};

// Client -> shuffler: locally privatized reward for its slot.
struct PrivatizedReward {
  std::int64_t slot = 0;
  double value = 0.0;
};

// Shuffler -> server: rewards re-associated with actions after undoing the
// permutation, in batch enumeration order.
struct BatchReport {
  std::vector<std::pair<int, double>> rewards;  // (action id, noisy reward)
};

using ProtocolMessage =
    std::variant<ActionAssignment, PrivatizedReward, BatchReport>;

// Uniform random permutation of 0..n-1 (Fisher-Yates on the given stream).
std::vector<std::int64_t> random_permutation(std::int64_t n, RngStream& rng);

// inverse[p[j]] = j.
std::vector<std::int64_t> invert_permutation(const std::vector<std::int64_t>& p);

}  // namespace dpbandit
