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

#include <array>
#include <string>
#include <vector>

#include "homewheel/rotations.hpp"

namespace homewheel {

// Joint angles in degrees.
//   s1: Servo 1, center-shaft twist, [0, 360] with no wraparound
//   s2: Servo 2, gantry swing about body x, [-90, 90]
//   s3: Servo 3, wheel pivot about the wrist axis, [-90, 90]
struct ServoState {
    double s1 = 0.0;
    double s2 = 0.0;
    double s3 = 0.0;

    double operator[](std::size_t servo) const { return servo == 0 ? s1 : servo == 1 ? s2 : s3; }
    double& operator[](std::size_t servo) { return servo == 0 ? s1 : servo == 1 ? s2 : s3; }

    friend bool operator==(const ServoState&, const ServoState&) = default;
};

inline constexpr std::size_t kServoCount = 3;

struct AngleRange {
    double min;
    double max;

    bool contains(double v) const { return min <= v && v <= max; }  // false for NaN
    friend bool operator==(const AngleRange&, const AngleRange&) = default;
};

struct ServoLimits {
    std::array<AngleRange, kServoCount> range{{{0.0, 360.0}, {-90.0, 90.0}, {-90.0, 90.0}}};
    std::array<double, kServoCount> max_rate{{360.0, 360.0, 360.0}};  // deg/s

    // Throws InvalidParameter unless every min < max and every rate is positive and finite.
    void check() const;

    friend bool operator==(const ServoLimits&, const ServoLimits&) = default;
};

// Link lengths only shape FramePoses; wheel angle and twist never depend on them.
struct MechanismGeometry {
    double wheel_radius = 0.10;  // m
    double gantry_offset = 0.10;
    double upper_link_length = 0.20;
    double lower_link_length = 0.15;

    void check() const;  // throws InvalidParameter

    friend bool operator==(const MechanismGeometry&, const MechanismGeometry&) = default;
};

struct RangeViolation {
    std::size_t servo;  // 0-based; servo1 is index 0
    double value;
    AngleRange range;
};

// Empty iff every angle lies in its closed range. Comparisons are exact.
std::vector<RangeViolation> validate_state(const ServoState& state, const ServoLimits& limits);

inline constexpr double kEngageTolerance = 1e-9;
inline constexpr double kGimbalTolerance = 1e-6;

// True in the two driving configurations (s2, s3) = (+90, -90) and (-90, +90).
bool engaged(const ServoState& state, double tol = kEngageTolerance);

// sign(s2) when engaged, else 0. Wheel increment is drive_sign * (change in s1).
int drive_sign(const ServoState& state, double tol = kEngageTolerance);

// s2 and s3 both at zero while Servo 1 is moving: the shaft no longer drives the wheel.
bool gimbal_lock_risk(const ServoState& state, double s1_rate, double tol = kGimbalTolerance);

struct Pose {
    UnitQuaternion rotation;
    Vec3 translation;  // m, body frame
};

struct FramePoses {
    Pose body;
    Pose gantry;
    Pose shaft_tip;
    Pose elbow;
    Pose wrist;
    Pose wheel_hub;
};

// Frame conventions (body frame: x travel, y lateral, z up):
//   gantry     = rot_x(s2), pivoting at the body origin
//   shaft tip  = gantry * rot_about(shaft_axis, s1), placed gantry_offset along the shaft axis
//   elbow      = shaft tip orientation, upper_link_length further along the shaft axis
//   wrist      = elbow orientation, lower_link_length along the bent lower link
//   wheel hub  = wrist * rot_x(s3), at the wrist
// The shaft axis is -z in the gantry frame, so it points along +y or -y when |s2| = 90.
// The hub axle is +y in the hub frame; in both driving configurations it is collinear with
// the shaft axis, parallel when s2 = +90 and antiparallel when s2 = -90.
inline constexpr Vec3 kShaftAxis{0.0, 0.0, -1.0};
inline constexpr Vec3 kLowerLinkDirection{1.0, 0.0, 0.0};  // fixed 90 degree elbow bend
inline constexpr Vec3 kHubAxle{0.0, 1.0, 0.0};

// Throws RangeError when validate_state fails.
FramePoses forward_kinematics(const MechanismGeometry& geometry, const ServoState& state,
                              const ServoLimits& limits = {});

std::string servo_name(std::size_t servo);

}  // namespace homewheel
