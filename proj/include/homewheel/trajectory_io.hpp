// Copyright 2026 The homewheel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "homewheel/executor.hpp"

namespace homewheel {

inline constexpr int kTrajectoryFormatVersion = 1;

// Trajectory file: a JSON object
//   {
//     "format_version": 1,
//     "wheel_radius_m": 0.1, "gantry_offset_m": 0.1,
//     "upper_link_length_m": 0.2, "lower_link_length_m": 0.15,
//     "servo_ranges_deg": [[0, 360], [-90, 90], [-90, 90]],
//     "max_rates_deg_per_s": [360, 360, 360],
//     "waypoints": [{"t": 0.0, "s1": 0.0, "s2": 0.0, "s3": 0.0}, ...]
//   }
// Numbers are written in shortest round-trip decimal form, so reading a written file gives
// back the same doubles. format_version and waypoints are required; the header fields fall
// back to `defaults` when absent. Unknown keys are rejected.
std::string write_trajectory_json(const Trajectory& trajectory);
Trajectory parse_trajectory_json(std::string_view text, const Trajectory& defaults = {});

// Config file: a JSON object with any of the header keys above (no waypoints), applied on top
// of `base`.
Trajectory apply_config_json(std::string_view text, const Trajectory& base);

inline constexpr std::string_view kTraceHeader = "t,s1,s2,s3,theta_wheel_deg,x_m,engaged,event_flags";

// One row per sample, numbers printed with 9 significant digits.
std::string write_trace_csv(const SimTrace& trace);

// Reads the t, s1, s2, s3 columns of a trace back as a dense trajectory. Geometry and limits
// come from `defaults`.
Trajectory parse_trace_csv(std::string_view text, const Trajectory& defaults = {});

// Dispatches on content: a leading '{' means JSON, anything else a trace.
Trajectory parse_trajectory_text(std::string_view text, const Trajectory& defaults = {});

// File helpers. Throw Error when the file cannot be opened or written.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace homewheel
