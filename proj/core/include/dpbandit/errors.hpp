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

#include <stdexcept>
#include <string>

namespace dpbandit {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The optimal-design search stopped before meeting the norm target.
struct DesignInfeasible : Error {
  DesignInfeasible(double achieved, double target)
      : Error("design infeasible: achieved max design norm " +
              std::to_string(achieved) + " > target " + std::to_string(target)),
        achieved_norm(achieved),
        target_norm(target) {}
  double achieved_norm;
  double target_norm;
};

// An action has a component outside the span of a design matrix.
struct SpanMismatch : Error {
  using Error::Error;
};

// An action was played against an instance that does not contain it.
struct UnknownAction : Error {
  using Error::Error;
};

// More pulls were recorded than the horizon allows.
struct HorizonExceeded : Error {
  using Error::Error;
};

// The horizon is too short for the batch schedule.
struct HorizonTooSmall : Error {
  using Error::Error;
};

// The per-batch design matrix lost rank relative to the core set span.
struct SingularDesign : Error {
  using Error::Error;
};

struct ConfigError : Error {
  ConfigError(std::string field_name, const std::string& message)
      : Error("config error [" + field_name + "]: " + message),
        field(std::move(field_name)) {}
  std::string field;
};

struct IoError : Error {
  IoError(std::string file_path, const std::string& message)
      : Error("io error [" + file_path + "]: " + message),
        path(std::move(file_path)) {}
  std::string path;
};

}  // namespace dpbandit
