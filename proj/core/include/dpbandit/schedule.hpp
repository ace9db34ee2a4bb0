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

#include <cmath>
#include <cstdint>

namespace dpbandit {

// Geometric batch schedule. Batch i targets q^i pulls with
// q = (2T)^(1/ln T), which pins q to [e, e^2] for any T >= 2; elimination
// runs for floor(ln T) - 1 batches and the remaining budget is spent
// exploiting the final estimate.
struct BatchSchedule {
  double q = 0.0;
  int num_batches = 0;
  std::int64_t horizon = 0;

  double batch_target(int i) const { return std::pow(q, i); }
};

// Throws HorizonTooSmall for T < 16.
BatchSchedule make_schedule(std::int64_t T);

}  // namespace dpbandit
