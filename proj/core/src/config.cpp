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

#include "dpbandit/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace dpbandit {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(trim(item));
  return parts;
}

std::int64_t parse_int(const std::string& field, const std::string& text) {
  try {
    std::size_t consumed = 0;
    const std::int64_t v = std::stoll(text, &consumed);
    if (consumed != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(field, "expected an integer, got '" + text + "'");
  }
}

double parse_real(const std::string& field, const std::string& text) {
  try {
    std::size_t consumed = 0;
    const double v = std::stod(text, &consumed);
    if (consumed != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(field, "expected a number, got '" + text + "'");
  }
}

}  // namespace

ExperimentConfig default_config() {
  ExperimentConfig config;
  config.seeds.reserve(20);
  for (std::uint64_t s = 0; s < 20; ++s) config.seeds.push_back(s);
  return config;
}

std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
  const auto range = text.find("..");
  if (range != std::string::npos) {
    const std::int64_t lo = parse_int("seeds", trim(text.substr(0, range)));
    const std::int64_t hi = parse_int("seeds", trim(text.substr(range + 2)));
    if (lo < 0 || hi < lo) throw ConfigError("seeds", "bad range '" + text + "'");
    std::vector<std::uint64_t> seeds;
    for (std::int64_t s = lo; s <= hi; ++s) {
      seeds.push_back(static_cast<std::uint64_t>(s));
    }
    return seeds;
  }
  std::vector<std::uint64_t> seeds;
  for (const std::string& part : split_commas(text)) {
    if (part.empty()) continue;
    const std::int64_t v = parse_int("seeds", part);
    if (v < 0) throw ConfigError("seeds", "seeds must be non-negative");
    seeds.push_back(static_cast<std::uint64_t>(v));
  }
  return seeds;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> values;
  for (const std::string& part : split_commas(text)) {
    if (part.empty()) continue;
    values.push_back(parse_real("epsilon_grid", part));
  }
  return values;
}

void apply_config_key(ExperimentConfig& config, const std::string& key,
                      const std::string& value) {
  if (key == "model") {
    if (value == "all") {
      config.models = {Model::kCentral, Model::kLocal, Model::kShuffled,
                       Model::kNonPrivate};
    } else {
      config.models = {model_from_name(value)};
    }
  } else if (key == "d") {
    config.d = static_cast<int>(parse_int(key, value));
  } else if (key == "K") {
    config.K = static_cast<int>(parse_int(key, value));
  } else if (key == "T") {
    config.T = parse_int(key, value);
  } else if (key == "epsilon_grid") {
    config.epsilon_grid = parse_double_list(value);
  } else if (key == "delta") {
    config.delta = parse_real(key, value);
  } else if (key == "seeds") {
    config.seeds = parse_seed_list(value);
  } else if (key == "noise") {
    if (value == "uniform-bounded") {
      config.noise.kind = NoiseModel::Kind::kUniformBounded;
    } else if (value == "truncated-gaussian") {
      config.noise.kind = NoiseModel::Kind::kTruncatedGaussian;
    } else {
      throw ConfigError("noise", "expected uniform-bounded or truncated-gaussian");
    }
  } else if (key == "sigma") {
    config.noise.sigma = parse_real(key, value);
  } else if (key == "output_dir") {
    config.output_dir = value;
  } else {
    throw ConfigError(key, "unknown configuration key");
  }
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open file '" + path + "'");
  ExperimentConfig config = default_config();
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto comment = line.find('#');
    if (comment != std::string::npos) line = line.substr(0, comment);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("file", "line " + std::to_string(line_no) +
                                    " is not key=value: '" + line + "'");
    }
    apply_config_key(config, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  validate_config(config);
  return config;
}

void validate_config(const ExperimentConfig& config) {
  if (config.models.empty()) throw ConfigError("model", "no models selected");
  if (config.d < 1) throw ConfigError("d", "dimension must be >= 1");
  if (config.K < 2) throw ConfigError("K", "need at least two actions");
  if (config.T < 16) throw ConfigError("T", "horizon must be >= 16");
  const bool has_private =
      std::any_of(config.models.begin(), config.models.end(),
                  [](Model m) { return m != Model::kNonPrivate; });
  if (has_private) {
    if (config.epsilon_grid.empty()) {
      throw ConfigError("epsilon_grid", "private models need at least one epsilon");
    }
    for (double e : config.epsilon_grid) {
      if (!(e > 0.0)) throw ConfigError("epsilon_grid", "epsilons must be positive");
    }
  }
  const bool has_shuffled =
      std::any_of(config.models.begin(), config.models.end(),
                  [](Model m) { return m == Model::kShuffled; });
  if (has_shuffled && !(config.delta > 0.0 && config.delta < 1.0)) {
    throw ConfigError("delta", "shuffled model needs delta in (0, 1)");
  }
  if (!(config.delta >= 0.0 && config.delta < 1.0)) {
    throw ConfigError("delta", "delta must lie in [0, 1)");
  }
  if (config.seeds.empty()) throw ConfigError("seeds", "need at least one seed");
  if (!(config.noise.sigma >= 0.0)) throw ConfigError("sigma", "sigma must be >= 0");
  if (config.output_dir.empty()) throw ConfigError("output_dir", "empty path");
}

}  // namespace dpbandit
