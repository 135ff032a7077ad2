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

#include "homewheel/scaling.hpp"

#include <cmath>
#include <numbers>

#include "homewheel/errors.hpp"

namespace homewheel {

void ScalingModel::check() const {
    for (double v : {length_ref, mass_ref, force_ref}) {
        if (!(v > 0.0) || !std::isfinite(v)) throw InvalidParameter("scaling reference values must be positive");
    }
}

ScaledQuantities scale(const ScalingModel& model, double length) {
    model.check();
    if (!(length > 0.0) || !std::isfinite(length)) throw InvalidParameter("length must be positive");
    const double ratio = length / model.length_ref;
    return {model.mass_ref * ratio * ratio * ratio, model.force_ref * ratio * ratio,
            (model.force_ref / model.mass_ref) * (model.length_ref / length)};
}

double cost_of_transport(const SimTrace& trace, const std::array<double, 3>& torque_nm, double mass_kg,
                         double gravity) {
    if (!(mass_kg > 0.0) || !(gravity > 0.0)) throw InvalidParameter("mass and gravity must be positive");
    const double distance = trace.samples.empty() ? 0.0 : trace.samples.back().x - trace.samples.front().x;
    if (distance == 0.0) throw ZeroDistance("trace covers zero distance");

    double energy = 0.0;
    for (std::size_t k = 1; k < trace.samples.size(); ++k) {
        const auto& a = trace.samples[k - 1].state;
        const auto& b = trace.samples[k].state;
        for (std::size_t i = 0; i < kServoCount; ++i) {
            energy += std::abs(torque_nm[i] * (b[i] - a[i]) * (std::numbers::pi / 180.0));
        }
    }
    return energy / (mass_kg * gravity * std::abs(distance));
}

}  // namespace homewheel
