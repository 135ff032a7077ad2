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

#include "homewheel/planner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "homewheel/errors.hpp"

namespace homewheel {
namespace {

// Remaining rotation below this is considered done.
constexpr double kPlanTolerance = 1e-10;

void require_driving_configurations(const ServoLimits& limits) {
    for (std::size_t i : {1u, 2u}) {
        if (!limits.range[i].contains(90.0) || !limits.range[i].contains(-90.0)) {
            throw InvalidParameter(servo_name(i) + " range must include +/-90 to engage the wheel");
        }
    }
}

class TrajectoryWriter {
public:
    TrajectoryWriter(const MechanismGeometry& geometry, const ServoLimits& limits, const ServoState& start,
                     double segment_duration)
        : traj_{geometry, limits, {{0.0, start}}}, segment_duration_(segment_duration) {}

    const ServoState& state() const { return traj_.waypoints.back().state; }

    void move_to(const ServoState& next) {
        const auto& current = traj_.waypoints.back();
        if (next == current.state) return;
        double duration = segment_duration_;
        for (std::size_t i = 0; i < kServoCount; ++i) {
            duration = std::max(duration, std::abs(next[i] - current.state[i]) / traj_.limits.max_rate[i]);
        }
        traj_.waypoints.push_back({current.t + duration, next});
    }

    // Moves s3, then s2, leaving s1 where it is.
    void reconfigure(double s2, double s3) {
        ServoState next = state();
        next.s3 = s3;
        move_to(next);
        next.s2 = s2;
        move_to(next);
    }

    Trajectory take() && { return std::move(traj_); }

private:
    Trajectory traj_;
    double segment_duration_;
};

}  // namespace

Trajectory plan_rotation(double target_deg, const ServoState& start, const ServoLimits& limits,
                         double segment_duration, const MechanismGeometry& geometry) {
    if (!std::isfinite(target_deg)) throw InvalidParameter("target rotation must be finite");
    if (!(segment_duration > 0.0) || !std::isfinite(segment_duration)) {
        throw InvalidParameter("segment duration must be positive");
    }
    limits.check();
    if (!validate_state(start, limits).empty()) throw InvalidParameter("start state is out of range");
    require_driving_configurations(limits);

    const double lo = limits.range[0].min;
    const double hi = limits.range[0].max;
    TrajectoryWriter writer(geometry, limits, start, segment_duration);

    double achieved = 0.0;
    while (std::abs(target_deg - achieved) > kPlanTolerance) {
        const double remaining = target_deg - achieved;
        const double s1 = writer.state().s1;
        const bool forward = remaining > 0.0;
        // Forward config rolls forward with rising s1; backward config with falling s1.
        const double travel_fwd_config = forward ? hi - s1 : s1 - lo;
        const double travel_bwd_config = forward ? s1 - lo : hi - s1;

        int config = travel_fwd_config >= travel_bwd_config ? 1 : -1;
        if (travel_fwd_config == travel_bwd_config && drive_sign(writer.state()) != 0) {
            config = drive_sign(writer.state());
        }
        const double travel = config > 0 ? travel_fwd_config : travel_bwd_config;
        if (config > 0) {
            writer.reconfigure(kForwardGantry, -kForwardGantry);
        } else {
            writer.reconfigure(kBackwardGantry, -kBackwardGantry);
        }

        // Direction of s1 motion: wheel change = config * ds1 must carry the sign of remaining.
        const double s1_direction = forward == (config > 0) ? 1.0 : -1.0;
        const double amount = std::abs(remaining);
        double next_s1;
        if (amount >= travel) {
            next_s1 = s1_direction > 0 ? hi : lo;
        } else {
            next_s1 = std::clamp(s1 + s1_direction * amount, lo, hi);
        }
        if (next_s1 == s1) break;  // below the resolution of s1

        ServoState next = writer.state();
        next.s1 = next_s1;
        writer.move_to(next);
        achieved += config * (next_s1 - s1);
    }

    if (limits.range[1].contains(0.0) && limits.range[2].contains(0.0)) writer.reconfigure(0.0, 0.0);
    return std::move(writer).take();
}

Trajectory plan_distance(double distance_m, const MechanismGeometry& geometry, const ServoState& start,
                         const ServoLimits& limits, double segment_duration) {
    geometry.check();
    if (!std::isfinite(distance_m)) throw InvalidParameter("distance must be finite");
    const double target = distance_m / geometry.wheel_radius * (180.0 / std::numbers::pi);
    return plan_rotation(target, start, limits, segment_duration, geometry);
}

double gait_min_period(const ServoLimits& limits) {
    const double width = limits.range[0].max - limits.range[0].min;
    return 2.0 * (width / limits.max_rate[0] + 180.0 / limits.max_rate[1] + 180.0 / limits.max_rate[2]);
}

Trajectory generate_gait(double period, int cycles, const ServoLimits& limits, const MechanismGeometry& geometry) {
    if (cycles < 1) throw InvalidParameter("cycles must be at least 1");
    if (!std::isfinite(period) || !(period > 0.0)) throw InvalidParameter("period must be positive");
    limits.check();
    require_driving_configurations(limits);

    const double min_period = gait_min_period(limits);
    if (period < min_period) {
        throw RateInfeasible("gait period " + std::to_string(period) + " s is below the rate-limited minimum " +
                             std::to_string(min_period) + " s");
    }

    const double lo = limits.range[0].min;
    const double hi = limits.range[0].max;
    const double scale = period / min_period;
    const double half = period / 2.0;
    const double sweep = (hi - lo) / limits.max_rate[0] * scale;
    const double wrist_swap = 180.0 / limits.max_rate[2] * scale;

    Trajectory traj{geometry, limits, {}};
    traj.waypoints.push_back({0.0, {lo, 90.0, -90.0}});
    for (int c = 0; c < cycles; ++c) {
        const double base = c * period;
        traj.waypoints.push_back({base + sweep, {hi, 90.0, -90.0}});
        traj.waypoints.push_back({base + sweep + wrist_swap, {hi, 90.0, 90.0}});
        traj.waypoints.push_back({base + half, {hi, -90.0, 90.0}});
        traj.waypoints.push_back({base + half + sweep, {lo, -90.0, 90.0}});
        traj.waypoints.push_back({base + half + sweep + wrist_swap, {lo, -90.0, -90.0}});
        traj.waypoints.push_back({(c + 1) * period, {lo, 90.0, -90.0}});
    }
    return traj;
}

std::size_t count_reconfigurations(const Trajectory& trajectory) {
    std::size_t count = 0;
    const auto& wps = trajectory.waypoints;
    for (std::size_t k = 1; k < wps.size(); ++k) {
        const int now = drive_sign(wps[k].state);
        if (now != 0 && now != drive_sign(wps[k - 1].state)) ++count;
    }
    return count;
}

std::size_t count_engaged_sweeps(const Trajectory& trajectory) {
    std::size_t count = 0;
    const auto& wps = trajectory.waypoints;
    for (std::size_t k = 0; k + 1 < wps.size(); ++k) {
        if (wps[k + 1].state.s1 != wps[k].state.s1 && segment_drive_sign(wps[k].state, wps[k + 1].state) != 0) {
            ++count;
        }
    }
    return count;
}

}  // namespace homewheel
