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

#include <random>
#include <string>

#include <gtest/gtest.h>

#include "homewheel/errors.hpp"
#include "homewheel/executor.hpp"
#include "homewheel/trajectory_io.hpp"
#include "test_util.hpp"

namespace homewheel {
namespace {

ParseError parse_failure(const std::string& text) {
    try {
        parse_trajectory_text(text);
    } catch (const ParseError& e) {
        return e;
    }
    ADD_FAILURE() << "expected ParseError for: " << text;
    return ParseError("none", 0, 0);
}

TEST(TrajectoryJson, RoundTripIsExact) {
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> any(-1e3, 1e3);
    for (int trial = 0; trial < 50; ++trial) {
        Trajectory traj;
        traj.geometry.wheel_radius = std::abs(any(rng)) + 1e-3;
        traj.geometry.upper_link_length = 1.0 / 3.0;
        traj.limits.max_rate = {std::abs(any(rng)) + 1.0, 123.456, 1e-3};
        traj.limits.range[0] = {-1.5, 361.25};
        double t = 0.0;
        for (int k = 0; k < 20; ++k) {
            t += std::abs(any(rng)) * 1e-3 + 1e-9;
            traj.waypoints.push_back({t, random_valid_state(rng)});
        }
        const std::string text = write_trajectory_json(traj);
        EXPECT_EQ(parse_trajectory_json(text), traj);
        EXPECT_EQ(write_trajectory_json(parse_trajectory_json(text)), text);
    }
}

TEST(TrajectoryJson, LayoutAndDefaults) {
    const std::string text = write_trajectory_json(build_rotate_wheel_2n(1));
    EXPECT_EQ(text.rfind("{\n  \"format_version\": 1,\n  \"wheel_radius_m\": 0.1,", 0), 0u);
    EXPECT_NE(text.find("\"servo_ranges_deg\""), std::string::npos);
    EXPECT_NE(text.find("\"max_rates_deg_per_s\""), std::string::npos);

    const Trajectory minimal =
        parse_trajectory_json(R"({"format_version": 1, "waypoints": [{"t": 0, "s1": 10, "s2": 0, "s3": 0}]})");
    EXPECT_EQ(minimal.geometry, MechanismGeometry{});
    EXPECT_EQ(minimal.limits, ServoLimits{});
    ASSERT_EQ(minimal.waypoints.size(), 1u);
    EXPECT_EQ(minimal.waypoints[0].state.s1, 10.0);
}

TEST(TrajectoryJson, SyntaxErrorsCarryLineAndColumn) {
    const std::string bad = "{\"format_version\": 1,\n  \"waypoints\": [x]}";
    const ParseError e = parse_failure(bad);
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 17u);

    std::string text = write_trajectory_json(build_rotate_wheel_2n(1));
    text.resize(text.size() / 2);
    const ParseError truncated = parse_failure(text);
    EXPECT_GT(truncated.line(), 1u);
    EXPECT_GT(truncated.column(), 0u);
}

TEST(TrajectoryJson, SchemaErrors) {
    for (const char* text : {
             R"({"waypoints": []})",
             R"({"format_version": 2, "waypoints": []})",
             R"({"format_version": 1})",
             R"({"format_version": 1, "waypoints": [], "colour": "red"})",
             R"({"format_version": 1, "waypoints": [{"t": 0, "s1": 0, "s2": 0}]})",
             R"({"format_version": 1, "waypoints": [{"t": 0, "s1": "0", "s2": 0, "s3": 0}]})",
             R"({"format_version": 1, "waypoints": [{"t": 0, "s1": 0, "s2": 0, "s3": 0, "s4": 0}]})",
             R"({"format_version": 1, "waypoints": {}})",
             R"({"format_version": 1, "wheel_radius_m": -1, "waypoints": []})",
             R"({"format_version": 1, "servo_ranges_deg": [[0, 360], [90, -90], [-90, 90]], "waypoints": []})",
             R"({"format_version": 1, "max_rates_deg_per_s": [1, 2], "waypoints": []})",
             R"([1, 2, 3])",
         }) {
        EXPECT_THROW(parse_trajectory_json(text), ParseError) << text;
    }
}

TEST(ConfigJson, OverridesHeaderFields) {
    const Trajectory out =
        apply_config_json(R"({"wheel_radius_m": 0.5, "max_rates_deg_per_s": [90, 45, 45]})", Trajectory{});
    EXPECT_EQ(out.geometry.wheel_radius, 0.5);
    EXPECT_EQ(out.limits.max_rate[1], 45.0);
    EXPECT_EQ(out.limits.range, ServoLimits{}.range);
    EXPECT_THROW(apply_config_json(R"({"waypoints": []})", Trajectory{}), ParseError);
}

TEST(TraceCsv, HeaderAndFormatting) {
    MechanismGeometry g;
    g.wheel_radius = 0.5;
    const std::string csv = write_trace_csv(simulate(build_rotate_wheel_2n(1, 1.0, g), 4.0));
    EXPECT_EQ(csv.rfind("t,s1,s2,s3,theta_wheel_deg,x_m,engaged,event_flags\n0,0,0,0,0,0,0,0\n", 0), 0u);
    EXPECT_NE(csv.find("\n2.25,90,90,-90,90,0.785398163,1,0\n"), std::string::npos);
    EXPECT_NE(csv.find("\n10,0,0,0,720,6.28318531,0,0\n"), std::string::npos);
}

TEST(TraceCsv, ParsesBackAsDenseTrajectory) {
    const SimTrace trace = simulate(build_rotate_wheel_2n(2), 10.0);
    const Trajectory dense = parse_trajectory_text(write_trace_csv(trace));
    ASSERT_EQ(dense.waypoints.size(), trace.samples.size());
    EXPECT_TRUE(validate_trajectory(dense).empty());
    EXPECT_NEAR(simulate(dense).final_theta(), 1440.0, 1e-6);
}

TEST(TraceCsv, Errors) {
    EXPECT_EQ(parse_failure("").line(), 1u);
    EXPECT_EQ(parse_failure("t,s1\n").line(), 1u);
    const std::string header(kTraceHeader);
    const ParseError bad_number = parse_failure(header + "\n0,0,0,0,0,0,0,0\n1,abc,0,0,0,0,0,0\n");
    EXPECT_EQ(bad_number.line(), 3u);
    EXPECT_EQ(bad_number.column(), 3u);
    EXPECT_EQ(parse_failure(header + "\n0,0,0,0,0,0\n").line(), 2u);
    EXPECT_EQ(parse_failure(header + "\n0,0,0,0,0,0,0,0,9\n").line(), 2u);
    EXPECT_EQ(parse_failure(header + "\n0,0,,0,0,0,0,0\n").column(), 5u);
}

}  // namespace
}  // namespace homewheel
