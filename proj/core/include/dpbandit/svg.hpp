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

// Renders the regret-versus-privacy-budget figure as a self-contained SVG:
// log-scaled axes, one polyline with markers and +-1 std whiskers per private
// model, and a dashed horizontal reference line at the non-private mean when
// that baseline is present. Pure text output; no renderer dependency.
std::string render_plot(const std::vector<SummaryRow>& summary);

// render_plot + write to disk. Throws IoError on filesystem problems.
void emit_plot(const std::vector<SummaryRow>& summary, const std::string& path);

}  // namespace dpbandit
