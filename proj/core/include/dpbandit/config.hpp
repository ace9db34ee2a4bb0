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
#include <string>
#include <vector>

#include "dpbandit/environment.hpp"
#include "dpbandit/trace.hpp"

namespace dpbandit {

// Experiment description. Defaults reproduce the standard setup: a 2-d
// instance with 10 actions over a million rounds, twenty seeds, and an
// epsilon grid spanning the high- and low-privacy regimes.
struct ExperimentConfig {
  std::vector<Model> models = {Model::kCentral, Model::kLocal,
                               Model::kShuffled, Model::kNonPrivate};
  int d = 2;
  int K = 10;
  std::int64_t T = 1000000;
  std::vector<double> epsilon_grid = {0.01, 0.05, 0.1, 0.5, 1.0, 5.0, 10.0};
  double delta = 1e-6;
  std::vector<std::uint64_t> seeds;  // default 0..19, set by default_config()
  NoiseModel noise = {NoiseModel::Kind::kUniformBounded, 0.1};
  std::string output_dir = "out";
};

ExperimentConfig default_config();

// Applies one key=value pair; keys match the config field names
// (model, d, K, T, epsilon_grid, delta, seeds, noise, sigma, output_dir).
// `model` accepts central|local|shuffled|nonprivate|all; `seeds` accepts a
// comma list or an inclusive a..b range. Throws ConfigError on bad input.
void apply_config_key(ExperimentConfig& config, const std::string& key,
                      const std::string& value);

// Flat key=value file ('#' starts a comment, blank lines ignored) applied on
// top of the defaults. An empty file therefore yields default_config().
ExperimentConfig parse_config_file(const std::string& path);

// Field-by-field validation; throws ConfigError naming the offending field.
void validate_config(const ExperimentConfig& config);

std::vector<std::uint64_t> parse_seed_list(const std::string& text);
std::vector<double> parse_double_list(const std::string& text);

}  // namespace dpbandit
