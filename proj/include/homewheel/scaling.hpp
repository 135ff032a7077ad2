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

#include "homewheel/executor.hpp"

namespace homewheel {

// Reference point for geometric scaling: mass grows like L^3, muscle or actuator force like
// its cross section L^2, so the attainable acceleration F/m falls like 1/L.
struct ScalingModel {
    double length_ref = 0.1;  // m
    double mass_ref = 1.0;    // kg
    double force_ref = 10.0;  // N

    void check() const;  // throws InvalidParameter unless all are positive and finite
};

struct ScaledQuantities {
    double mass;   // kg
    double force;  // N
    double accel;  // m/s^2
};

// Throws InvalidParameter for length <= 0.
ScaledQuantities scale(const ScalingModel& model, double length);

inline constexpr double kStandardGravity = 9.81;

// Quasi-static cost of transport E / (m g |dx|), with E the sum over consecutive samples and
// servos of |torque_i * dtheta_i| in joules (constant torques, no regeneration). Depends on
// the angle history only, never on timing. Throws ZeroDistance when the trace does not move
// and InvalidParameter for a non-positive mass or gravity.
double cost_of_transport(const SimTrace& trace, const std::array<double, 3>& torque_nm, double mass_kg,
                         double gravity = kStandardGravity);

}  // namespace homewheel
