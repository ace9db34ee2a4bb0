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

#include "dpbandit/csv.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace dpbandit {

namespace {

// Empty field for NaN (non-private rows carry no privacy parameters).
std::string optional_float(double value) {
  return std::isnan(value) ? std::string() : format_csv_float(value);
}

// Wall time is jittery; whole seconds keep re-runs of the same experiment
// byte-identical while still flagging pathologically slow columns.
double quantize_runtime(double seconds) { return std::floor(seconds); }

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path, "cannot open for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError(path, "write failed");
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, ',')) fields.push_back(item);
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

}  // namespace

std::string format_csv_float(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void write_csv(const SweepResult& result, const std::string& output_dir) {
  std::error_code ec;
  std::filesystem::create_directories(output_dir, ec);
  if (ec) throw IoError(output_dir, "cannot create directory: " + ec.message());

  std::string traces = "model,epsilon,delta,seed,d,K,T,t,cum_regret\n";
  for (const RegretTrace& trace : result.traces) {
    const std::string prefix =
        std::string(model_name(trace.model)) + "," +
        optional_float(trace.epsilon) + "," + optional_float(trace.delta) +
        "," + std::to_string(trace.seed) + "," + std::to_string(trace.d) +
        "," + std::to_string(trace.K) + "," + std::to_string(trace.T) + ",";
    for (const TracePoint& point : trace.grid) {
      traces += prefix;
      traces += std::to_string(point.t);
      traces += ",";
      traces += format_csv_float(point.cum_regret);
      traces += "\n";
    }
  }
  write_file(output_dir + "/traces.csv", traces);

  std::string summary =
      "model,epsilon,mean_regret,std_regret,num_seeds,mean_runtime_s\n";
  for (const SummaryRow& row : result.summary) {
    summary += std::string(model_name(row.model)) + "," +
               optional_float(row.epsilon) + "," +
               format_csv_float(row.mean_regret) + "," +
               format_csv_float(row.std_regret) + "," +
               std::to_string(row.num_seeds) + "," +
               format_csv_float(quantize_runtime(row.mean_runtime_s)) + "\n";
  }
  write_file(output_dir + "/summary.csv", summary);
}

std::vector<SummaryRow> read_summary_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path, "cannot open summary file");
  std::string line;
  if (!std::getline(in, line)) throw IoError(path, "empty summary file");
  if (line != "model,epsilon,mean_regret,std_regret,num_seeds,mean_runtime_s") {
    throw IoError(path, "unexpected summary header: " + line);
  }
  std::vector<SummaryRow> rows;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split_line(line);
    if (fields.size() != 6) {
      throw IoError(path, "line " + std::to_string(line_no) +
                              " has " + std::to_string(fields.size()) +
                              " fields, expected 6");
    }
    SummaryRow row;
    row.model = model_from_name(fields[0]);
    row.epsilon = fields[1].empty() ? std::nan("") : std::stod(fields[1]);
    row.mean_regret = std::stod(fields[2]);
    row.std_regret = std::stod(fields[3]);
    row.num_seeds = std::stoi(fields[4]);
    row.mean_runtime_s = fields[5].empty() ? 0.0 : std::stod(fields[5]);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace dpbandit
