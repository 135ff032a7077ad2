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

#include "homewheel/executor.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "homewheel/errors.hpp"

namespace homewheel {
namespace {

constexpr double kRateSlack = 1e-9;
constexpr double kMaxSamples = 5e7;
constexpr double kDegToRad = std::numbers::pi / 180.0;

ServoState lerp(const ServoState& a, const ServoState& b, double alpha) {
    return {a.s1 + (b.s1 - a.s1) * alpha, a.s2 + (b.s2 - a.s2) * alpha, a.s3 + (b.s3 - a.s3) * alpha};
}

double largest_step(const ServoState& a, const ServoState& b) {
    double step = 0.0;
    for (std::size_t i = 0; i < kServoCount; ++i) step = std::max(step, std::abs(b[i] - a[i]));
    return step;
}

}  // namespace

Trajectory build_rotate_wheel_2n(int n, double segment_duration, const MechanismGeometry& geometry,
                                 const ServoLimits& limits) {
    if (n < 1) throw InvalidParameter("n must be at least 1");
    if (!(segment_duration > 0.0) || !std::isfinite(segment_duration)) {
        throw InvalidParameter("segment duration must be positive");
    }

    Trajectory traj{geometry, limits, {}};
    ServoState state{};
    double t = 0.0;
    traj.waypoints.push_back({t, state});
    auto rotate = [&](double ServoState::*servo, double target) {
        state.*servo = target;
        t += segment_duration;
        traj.waypoints.push_back({t, state});
    };

    rotate(&ServoState::s3, -90.0);
    rotate(&ServoState::s2, 90.0);
    for (int i = 0; i < n; ++i) {
        rotate(&ServoState::s1, 360.0);
        rotate(&ServoState::s3, 90.0);
        rotate(&ServoState::s2, -90.0);
        rotate(&ServoState::s1, 0.0);
        rotate(&ServoState::s3, -90.0);
        rotate(&ServoState::s2, 90.0);
    }
    rotate(&ServoState::s3, 0.0);
    rotate(&ServoState::s2, 0.0);
    return traj;
}

int segment_drive_sign(const ServoState& from, const ServoState& to) {
    const int a = drive_sign(from);
    return a != 0 && a == drive_sign(to) ? a : 0;
}

std::string to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::EmptyTrajectory: return "EmptyTrajectory";
        case ViolationKind::TimeOrder: return "TimeOrderViolation";
        case ViolationKind::Range: return "RangeViolation";
        case ViolationKind::Rate: return "RateViolation";
        case ViolationKind::Wraparound: return "WraparoundViolation";
        case ViolationKind::DisengagedShaftMotion: return "DisengagedShaftMotion";
    }
    return "Unknown";
}

std::string to_string(EventKind kind) {
    switch (kind) {
        case EventKind::GimbalLockRisk: return "GimbalLockRisk";
        case EventKind::DisengagedShaftMotion: return "DisengagedShaftMotion";
        case EventKind::RangeViolation: return "RangeViolation";
    }
    return "Unknown";
}

std::string describe(const Violation& v) {
    std::string out = to_string(v.kind);
    if (v.servo) out += " " + servo_name(*v.servo);
    out += fmt::format(" at index {} t={:.9f}", v.index, v.t);
    if (!v.detail.empty()) out += ": " + v.detail;
    return out;
}

std::vector<Violation> validate_trajectory(const Trajectory& trajectory, const ValidationPolicy& policy) {
    std::vector<Violation> out;
    const auto& wps = trajectory.waypoints;
    const auto& limits = trajectory.limits;
    if (wps.empty()) {
        out.push_back({ViolationKind::EmptyTrajectory, 0, 0.0, std::nullopt, 0.0, "no waypoints"});
        return out;
    }

    for (std::size_t k = 0; k < wps.size(); ++k) {
        if (!std::isfinite(wps[k].t)) {
            out.push_back({ViolationKind::TimeOrder, k, wps[k].t, std::nullopt, wps[k].t, "time is not finite"});
        }
        for (const auto& bad : validate_state(wps[k].state, limits)) {
            out.push_back({ViolationKind::Range, k, wps[k].t, bad.servo, bad.value,
                           fmt::format("{} outside [{}, {}]", bad.value, bad.range.min, bad.range.max)});
        }
    }

    for (std::size_t k = 0; k + 1 < wps.size(); ++k) {
        const auto& a = wps[k];
        const auto& b = wps[k + 1];
        const double dt = b.t - a.t;
        if (!(dt > 0.0)) {
            out.push_back({ViolationKind::TimeOrder, k, a.t, std::nullopt, b.t,
                           fmt::format("t={} does not follow t={}", b.t, a.t)});
        } else {
            for (std::size_t i = 0; i < kServoCount; ++i) {
                const double delta = std::abs(b.state[i] - a.state[i]);
                if (delta > limits.max_rate[i] * dt * (1.0 + kRateSlack)) {
                    out.push_back({ViolationKind::Rate, k, a.t, i, delta / dt,
                                   fmt::format("{} deg/s exceeds {} deg/s", delta / dt, limits.max_rate[i])});
                }
            }
        }

        const double lo = std::min(a.state.s1, b.state.s1);
        const double hi = std::max(a.state.s1, b.state.s1);
        if (std::isfinite(lo) && std::isfinite(hi) && !(limits.range[0].contains(lo) && limits.range[0].contains(hi))) {
            out.push_back({ViolationKind::Wraparound, k, a.t, 0, b.state.s1 - a.state.s1,
                           fmt::format("s1 sweep [{}, {}] leaves [{}, {}]", lo, hi, limits.range[0].min,
                                       limits.range[0].max)});
        }

        if (policy.reject_disengaged_shaft_motion && b.state.s1 != a.state.s1 &&
            segment_drive_sign(a.state, b.state) == 0) {
            out.push_back({ViolationKind::DisengagedShaftMotion, k, a.t, 0, b.state.s1 - a.state.s1,
                           "servo1 moves while the wheel is not engaged"});
        }
    }
    return out;
}

SimTrace simulate(const Trajectory& trajectory, double sample_rate) {
    if (!(sample_rate > 0.0) || !std::isfinite(sample_rate)) {
        throw InvalidParameter("sample rate must be positive");
    }
    trajectory.geometry.check();
    trajectory.limits.check();
    if (const auto bad = validate_trajectory(trajectory, ValidationPolicy::lenient()); !bad.empty()) {
        throw ValidationFailure(fmt::format("trajectory rejected ({} violations): {}", bad.size(),
                                            describe(bad.front())));
    }

    const auto& wps = trajectory.waypoints;
    const double radius = trajectory.geometry.wheel_radius;
    SimTrace trace{trajectory.geometry, trajectory.limits, {}, {}};

    auto push = [&](double t, const ServoState& s, double theta, std::uint8_t flags) {
        trace.samples.push_back({t, s, theta, radius * (theta * kDegToRad), engaged(s), flags});
    };

    double theta = 0.0;
    double planned = 1.0;
    for (std::size_t k = 0; k + 1 < wps.size(); ++k) {
        const auto& a = wps[k];
        const auto& b = wps[k + 1];
        const double dt = b.t - a.t;
        planned += std::max({std::ceil(dt * sample_rate), std::ceil(largest_step(a.state, b.state) / 90.0), 1.0});
    }
    if (planned > kMaxSamples) throw InvalidParameter("sample rate too high for trajectory length");
    trace.samples.reserve(static_cast<std::size_t>(planned));

    for (std::size_t k = 0; k + 1 < wps.size(); ++k) {
        const auto& a = wps[k];
        const auto& b = wps[k + 1];
        const double dt = b.t - a.t;
        const double ds1 = b.state.s1 - a.state.s1;
        const double s1_rate = ds1 / dt;
        const int sign = segment_drive_sign(a.state, b.state);
        const auto steps = static_cast<std::size_t>(
            std::max({std::ceil(dt * sample_rate), std::ceil(largest_step(a.state, b.state) / 90.0), 1.0}));

        std::uint8_t segment_flags = 0;
        if (ds1 != 0.0 && sign == 0) {
            segment_flags |= static_cast<std::uint8_t>(EventKind::DisengagedShaftMotion);
            trace.events.push_back({a.t, EventKind::DisengagedShaftMotion,
                                    fmt::format("segment {}: s1 {} -> {} while disengaged", k, a.state.s1,
                                                b.state.s1)});
        }

        bool gimbal_reported = false;
        for (std::size_t j = 0; j < steps; ++j) {
            const double alpha = static_cast<double>(j) / static_cast<double>(steps);
            const ServoState s = j == 0 ? a.state : lerp(a.state, b.state, alpha);
            const double t = j == 0 ? a.t : a.t + dt * alpha;
            std::uint8_t flags = segment_flags;
            if (gimbal_lock_risk(s, s1_rate)) {
                flags |= static_cast<std::uint8_t>(EventKind::GimbalLockRisk);
                if (!gimbal_reported) {
                    trace.events.push_back({t, EventKind::GimbalLockRisk,
                                            fmt::format("segment {}: s2 = s3 = 0 with s1 moving at {} deg/s", k,
                                                        s1_rate)});
                    gimbal_reported = true;
                }
            }
            push(t, s, theta + sign * (s.s1 - a.state.s1), flags);
        }
        theta += sign * ds1;
    }
    if (!wps.empty()) push(wps.back().t, wps.back().state, theta, 0);
    return trace;
}

std::vector<LedgerSample> twist_history(const SimTrace& trace) {
    std::vector<LedgerSample> history;
    history.reserve(trace.samples.size());
    if (trace.samples.empty()) return history;
    TwistLedger ledger = ledger_at(trace.samples.front().state);
    for (const auto& s : trace.samples) {
        ledger = update_ledger(ledger, s.state);
        history.push_back({s.t, ledger});
    }
    return history;
}

}  // namespace homewheel
