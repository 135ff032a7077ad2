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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homewheel/mechanism.hpp"
#include "homewheel/tegument.hpp"

namespace homewheel {

struct Waypoint {
    double t;  // s
    ServoState state;

    friend bool operator==(const Waypoint&, const Waypoint&) = default;
};

// Timed servo waypoints, linearly interpolated in every servo angle between neighbours.
struct Trajectory {
    MechanismGeometry geometry;
    ServoLimits limits;
    std::vector<Waypoint> waypoints;

    std::size_t segment_count() const { return waypoints.empty() ? 0 : waypoints.size() - 1; }

    friend bool operator==(const Trajectory&, const Trajectory&) = default;
};

inline constexpr double kDefaultSegmentDuration = 1.0;  // s
inline constexpr double kDefaultSampleRate = 50.0;      // Hz

// The continuous rotation routine: from rest, engage (s3 -> -90, s2 -> +90), then n times
// { s1 -> 360; s3 -> +90; s2 -> -90; s1 -> 0; s3 -> -90; s2 -> +90 }, then s3 -> 0, s2 -> 0.
// Every move is one segment of segment_duration. Throws InvalidParameter for n < 1 or a
// non-positive duration.
Trajectory build_rotate_wheel_2n(int n, double segment_duration = kDefaultSegmentDuration,
                                 const MechanismGeometry& geometry = {},
                                 const ServoLimits& limits = {});

// Drive sign of a whole segment: non-zero only when both endpoints sit in the same driving
// configuration, so s2 and s3 are constant along it.
int segment_drive_sign(const ServoState& from, const ServoState& to);

enum class ViolationKind {
    EmptyTrajectory,
    TimeOrder,
    Range,
    Rate,
    Wraparound,  // the s1 sweep of a segment leaves its range
    DisengagedShaftMotion,
};

std::string to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::size_t index;  // waypoint index for Range, otherwise the segment's first waypoint
    double t;
    std::optional<std::size_t> servo;
    double value;  // offending angle, rate, or time
    std::string detail;
};

std::string describe(const Violation& v);

struct ValidationPolicy {
    bool reject_disengaged_shaft_motion = true;

    static ValidationPolicy strict() { return {true}; }
    static ValidationPolicy lenient() { return {false}; }
};

// Reports every violation with its location; never throws.
// Rate limits carry a 1e-9 relative slack so timestamps written as decimal text still pass at
// exactly the maximum rate; ranges are compared exactly.
std::vector<Violation> validate_trajectory(const Trajectory& trajectory,
                                           const ValidationPolicy& policy = {});

enum class EventKind : std::uint8_t {
    GimbalLockRisk = 1,
    DisengagedShaftMotion = 2,
    // Reserved for the trace format. simulate() rejects out-of-range input up front, so it
    // never records one.
    RangeViolation = 4,
};

std::string to_string(EventKind kind);

struct SimEvent {
    double t;
    EventKind kind;
    std::string detail;
};

struct TraceSample {
    double t;
    ServoState state;
    double theta_wheel;  // deg, unwrapped
    double x;            // m, rolling distance
    bool engaged;
    std::uint8_t event_flags;  // OR of EventKind bits raised at this sample
};

struct SimTrace {
    MechanismGeometry geometry;
    ServoLimits limits;
    std::vector<TraceSample> samples;
    std::vector<SimEvent> events;

    double final_theta() const { return samples.empty() ? 0.0 : samples.back().theta_wheel; }
    double final_x() const { return samples.empty() ? 0.0 : samples.back().x; }
};

// Wheel increments are applied analytically per segment, theta += drive_sign * (change in s1),
// so whole-degree trajectories give exact results. The wheel is held while disengaged.
// Each segment is split into max(ceil(duration * sample_rate), ceil(largest servo step / 90), 1)
// equal steps, so consecutive samples never differ by 180 degrees or more.
// Throws ValidationFailure when time order, ranges, or rates are violated (disengaged shaft
// motion is recorded as an event instead) and InvalidParameter for a bad sample rate.
SimTrace simulate(const Trajectory& trajectory, double sample_rate = kDefaultSampleRate);

// Replays the twist ledger over every trace sample, starting from the ledger of the first
// sample's state.
std::vector<LedgerSample> twist_history(const SimTrace& trace);

}  // namespace homewheel
