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

#include "dpbandit/schedule.hpp"

#include <algorithm>

#include "dpbandit/errors.hpp"

namespace dpbandit {

BatchSchedule make_schedule(std::int64_t T) {
  if (T < 16) {
    throw HorizonTooSmall("horizon " + std::to_string(T) +
                          " is below the minimum of 16");
  }
  const double t = static_cast<double>(T);
  BatchSchedule s;
  s.q = std::exp(std::log(2.0 * t) / std::log(t));
  s.num_batches = std::max(1, static_cast<int>(std::floor(std::log(t))) - 1);
  s.horizon = T;
  return s;
}

}  // namespace dpbandit
