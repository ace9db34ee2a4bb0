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

#include <string>
#include <vector>

#include "dpbandit/sweep.hpp"

namespace dpbandit {

// 17 significant digits, locale-independent; round-trips any double.
std::string format_csv_float(double value);

// Serializes the sweep into output_dir/traces.csv and output_dir/summary.csv:
//   traces.csv:  model,epsilon,delta,seed,d,K,T,t,cum_regret
//   summary.csv: model,epsilon,mean_regret,std_regret,num_seeds,mean_runtime_s
// One traces row per grid point per run; epsilon and delta are empty for the
// non-private baseline. LF newlines, UTF-8, comma delimiter. Identical sweeps
// overwrite byte-identically (runtime is reported in whole seconds for that
// reason). Throws IoError on filesystem problems.
void write_csv(const SweepResult& result, const std::string& output_dir);

// Parses a summary.csv written by write_csv (used by the plot command).
std::vector<SummaryRow> read_summary_csv(const std::string& path);

}  // namespace dpbandit
