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

#include <cstddef>

#include "homewheel/executor.hpp"
#include "homewheel/mechanism.hpp"

namespace homewheel {

// The two driving configurations as (s2, s3).
inline constexpr double kForwardGantry = 90.0;   // s2 = +90, s3 = -90: rising s1 rolls forward
inline constexpr double kBackwardGantry = -90.0;  // s2 = -90, s3 = +90: rising s1 rolls backward

// Greedy full-sweep plan that turns the wheel by target_deg (signed) from `start`.
//
// Each round engages whichever configuration offers more Servo 1 travel in the needed
// direction (ties keep the current configuration, else the forward one), sweeps
// min(|remaining|, travel), and repeats. Reconfiguration moves s3 first, then s2, with s1
// held still. The plan ends by returning s3 and then s2 to 0; s1 stays where the last sweep
// left it, since moving it while disengaged is not allowed.
//
// Segments last segment_duration unless a servo's rate limit needs longer.
// Throws InvalidParameter for a non-finite target, an out-of-range start, a non-positive
// duration, or limits that exclude the driving configurations.
Trajectory plan_rotation(double target_deg, const ServoState& start = {}, const ServoLimits& limits = {},
                         double segment_duration = kDefaultSegmentDuration,
                         const MechanismGeometry& geometry = {});

// plan_rotation for the wheel angle that rolls `distance_m` (signed) at the geometry's radius.
Trajectory plan_distance(double distance_m, const MechanismGeometry& geometry, const ServoState& start = {},
                         const ServoLimits& limits = {}, double segment_duration = kDefaultSegmentDuration);

// Shortest gait period the rate limits allow: two full Servo 1 sweeps plus two 180 degree
// moves each of Servo 2 and Servo 3.
double gait_min_period(const ServoLimits& limits);

// Periodic rectification gait starting at (s1 min, +90, -90). Each half period sweeps s1
// across its full range in one driving configuration, then swaps s3 and s2 (in that order)
// to the other configuration while s1 dwells at the end of its range. All servo signals return
// to their initial values every period and the wheel gains two full range widths (720 degrees
// with default limits). Segment durations are the rate-limited minimums scaled up uniformly
// to fill the period. Throws RateInfeasible when period < gait_min_period(limits) and
// InvalidParameter for cycles < 1 or a non-finite period.
Trajectory generate_gait(double period, int cycles, const ServoLimits& limits = {},
                         const MechanismGeometry& geometry = {});

// Number of times the trajectory moves into a driving configuration it was not already in.
std::size_t count_reconfigurations(const Trajectory& trajectory);

// Number of segments that turn the wheel.
std::size_t count_engaged_sweeps(const Trajectory& trajectory);

}  // namespace homewheel
