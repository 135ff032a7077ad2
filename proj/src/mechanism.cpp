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

#include "homewheel/mechanism.hpp"

#include <cmath>
#include <string>

#include <fmt/format.h>

#include "homewheel/errors.hpp"

namespace homewheel {

void ServoLimits::check() const {
    for (std::size_t i = 0; i < kServoCount; ++i) {
        if (!(range[i].min < range[i].max) || !std::isfinite(range[i].min) ||
            !std::isfinite(range[i].max)) {
            throw InvalidParameter(fmt::format("{} range must satisfy min < max", servo_name(i)));
        }
        if (!(max_rate[i] > 0.0) || !std::isfinite(max_rate[i])) {
            throw InvalidParameter(fmt::format("{} max rate must be positive", servo_name(i)));
        }
    }
}

void MechanismGeometry::check() const {
    if (!(wheel_radius > 0.0) || !std::isfinite(wheel_radius)) {
        throw InvalidParameter("wheel radius must be positive");
    }
    for (double len : {gantry_offset, upper_link_length, lower_link_length}) {
        if (!(len >= 0.0) || !std::isfinite(len)) {
            throw InvalidParameter("link lengths must be non-negative");
        }
    }
}

std::vector<RangeViolation> validate_state(const ServoState& state, const ServoLimits& limits) {
    std::vector<RangeViolation> out;
    for (std::size_t i = 0; i < kServoCount; ++i) {
        if (!limits.range[i].contains(state[i])) out.push_back({i, state[i], limits.range[i]});
    }
    return out;
}

bool engaged(const ServoState& state, double tol) {
    const bool left = std::abs(state.s2 - 90.0) <= tol && std::abs(state.s3 + 90.0) <= tol;
    const bool right = std::abs(state.s2 + 90.0) <= tol && std::abs(state.s3 - 90.0) <= tol;
    return left || right;
}

int drive_sign(const ServoState& state, double tol) {
    if (!engaged(state, tol)) return 0;
    return state.s2 > 0.0 ? 1 : -1;
}

bool gimbal_lock_risk(const ServoState& state, double s1_rate, double tol) {
    return std::abs(state.s2) <= tol && std::abs(state.s3) <= tol && std::abs(s1_rate) > 0.0;
}

FramePoses forward_kinematics(const MechanismGeometry& geometry, const ServoState& state,
                              const ServoLimits& limits) {
    if (const auto bad = validate_state(state, limits); !bad.empty()) {
        throw RangeError(fmt::format("{} = {} outside [{}, {}]", servo_name(bad.front().servo),
                                     bad.front().value, bad.front().range.min,
                                     bad.front().range.max));
    }

    FramePoses f;
    f.gantry.rotation = quat_from_axis_angle(kAxisX, state.s2);

    f.shaft_tip.rotation = quat_compose(f.gantry.rotation, quat_from_axis_angle(kShaftAxis, state.s1));
    f.shaft_tip.translation = geometry.gantry_offset * rotate(f.gantry.rotation, kShaftAxis);

    f.elbow.rotation = f.shaft_tip.rotation;
    f.elbow.translation =
        f.shaft_tip.translation + geometry.upper_link_length * rotate(f.shaft_tip.rotation, kShaftAxis);

    f.wrist.rotation = f.elbow.rotation;
    f.wrist.translation =
        f.elbow.translation + geometry.lower_link_length * rotate(f.elbow.rotation, kLowerLinkDirection);

    f.wheel_hub.rotation = quat_compose(f.wrist.rotation, quat_from_axis_angle(kAxisX, state.s3));
    f.wheel_hub.translation = f.wrist.translation;
    return f;
}

std::string servo_name(std::size_t servo) { return fmt::format("servo{}", servo + 1); }

}  // namespace homewheel
