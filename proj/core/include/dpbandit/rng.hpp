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
#include <random>

namespace dpbandit {

// Mixes a root seed with up to three path components into an engine seed.
// Distinct paths yield statistically independent streams, which lets a run
// derive one substream per (seed, role, batch) without coupling them.
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t a,
                          std::uint64_t b = 0, std::uint64_t c = 0);

// Deterministic random stream. Every transform is built on raw engine output
// (never on std:: distributions, whose sequences are implementation-defined),
// so a seed pins the byte-exact sequence of draws.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on the open interval (0, 1); never returns an endpoint.
  double uniform01() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Unbiased integer in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  // Standard normal draw (Box-Muller, two uniforms per call).
  double gaussian();

 private:
  std::mt19937_64 engine_;
};

}  // namespace dpbandit
