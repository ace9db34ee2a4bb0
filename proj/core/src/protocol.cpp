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

#include "dpbandit/protocol.hpp"

#include <numeric>

#include "dpbandit/errors.hpp"

namespace dpbandit {

std::vector<std::int64_t> random_permutation(std::int64_t n, RngStream& rng) {
  if (n < 0) throw Error("permutation length must be >= 0");
  std::vector<std::int64_t> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), std::int64_t{0});
  for (std::int64_t i = n - 1; i > 0; --i) {
    const auto j = static_cast<std::int64_t>(
        rng.below(static_cast<std::uint64_t>(i + 1)));
    std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
  }
  return p;
}

std::vector<std::int64_t> invert_permutation(
    const std::vector<std::int64_t>& p) {
  std::vector<std::int64_t> inv(p.size(), -1);
  for (std::size_t j = 0; j < p.size(); ++j) {
    const std::int64_t target = p[j];
    if (target < 0 || static_cast<std::size_t>(target) >= p.size() ||
        inv[static_cast<std::size_t>(target)] != -1) {
      throw Error("input is not a permutation");
    }
    inv[static_cast<std::size_t>(target)] = static_cast<std::int64_t>(j);
  }
  return inv;
}

}  // namespace dpbandit
