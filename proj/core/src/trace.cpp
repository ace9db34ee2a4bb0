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

#include "dpbandit/trace.hpp"

#include <algorithm>
#include <cmath>

#include "dpbandit/errors.hpp"

namespace dpbandit {

std::string_view model_name(Model model) {
  switch (model) {
    case Model::kCentral:
      return "central";
    case Model::kLocal:
      return "local";
    case Model::kShuffled:
      return "shuffled";
    case Model::kNonPrivate:
      return "nonprivate";
  }
  throw Error("unknown model");
}

Model model_from_name(std::string_view name) {
  if (name == "central") return Model::kCentral;
  if (name == "local") return Model::kLocal;
  if (name == "shuffled") return Model::kShuffled;
  if (name == "nonprivate") return Model::kNonPrivate;
  throw ConfigError("model", "unknown model '" + std::string(name) + "'");
}

std::vector<std::int64_t> make_trace_grid(std::int64_t T) {
  if (T < 1) throw Error("horizon must be >= 1");
  std::vector<std::int64_t> grid;
  grid.reserve(51);
  for (int k = 1; k <= 50; ++k) {
    const double x = std::pow(static_cast<double>(T), k / 50.0);
    const auto t = static_cast<std::int64_t>(std::llround(x));
    grid.push_back(std::clamp<std::int64_t>(t, 1, T));
  }
  grid.push_back(T);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

}  // namespace dpbandit
