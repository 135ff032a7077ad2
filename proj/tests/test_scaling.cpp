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

#include <cmath>

#include <gtest/gtest.h>

#include "homewheel/errors.hpp"
#include "homewheel/planner.hpp"
#include "homewheel/scaling.hpp"

namespace homewheel {
namespace {

TEST(Scale, IdentityAtReference) {
    const ScalingModel m{0.2, 3.0, 12.0};
    const ScaledQuantities q = scale(m, 0.2);
    EXPECT_EQ(q.mass, 3.0);
    EXPECT_EQ(q.force, 12.0);
    EXPECT_EQ(q.accel, 4.0);
}

TEST(Scale, TenfoldSmallerAcceleratesTenfold) {
    const ScalingModel m;
    const double ratio = scale(m, m.length_ref / 10.0).accel / scale(m, m.length_ref).accel;
    EXPECT_NEAR(ratio, 10.0, 10.0 * 1e-12);
}

TEST(Scale, DoubleSize) {
    const ScalingModel m;
    const ScaledQuantities ref = scale(m, m.length_ref);
    const ScaledQuantities big = scale(m, 2.0 * m.length_ref);
    EXPECT_DOUBLE_EQ(big.mass / ref.mass, 8.0);
    EXPECT_DOUBLE_EQ(big.force / ref.force, 4.0);
    EXPECT_DOUBLE_EQ(big.accel / ref.accel, 0.5);
    EXPECT_NEAR(big.accel, big.force / big.mass, 1e-12);
}

TEST(Scale, AccelTimesLengthIsConstant) {
    const ScalingModel m;
    const double base = scale(m, 0.01).accel * 0.01;
    for (double length : {0.1, 1.0, 10.0}) {
        EXPECT_NEAR(scale(m, length).accel * length, base, 1e-12 * base);
    }
}

TEST(Scale, RejectsNonPositiveLength) {
    EXPECT_THROW(scale({}, 0.0), InvalidParameter);
    EXPECT_THROW(scale({}, -1.0), InvalidParameter);
    EXPECT_THROW(scale({0.0, 1.0, 1.0}, 1.0), InvalidParameter);
}

SimTrace routine_trace(double radius, double segment = 1.0, double rate = 50.0) {
    MechanismGeometry g;
    g.wheel_radius = radius;
    return simulate(build_rotate_wheel_2n(1, segment, g), rate);
}

TEST(CostOfTransport, ZeroTorqueIsFree) {
    EXPECT_EQ(cost_of_transport(routine_trace(0.5), {0, 0, 0}, 1.0), 0.0);
}

TEST(CostOfTransport, RoutineWithShaftTorqueOnly) {
    // s1 travels 0 -> 360 -> 0, i.e. 4 pi rad at 1 N m; the wheel rolls 2 * 2 pi * 0.5 = 2 pi m.
    const double expected = 4.0 * M_PI / (1.0 * 9.81 * 2.0 * M_PI);
    const double cot = cost_of_transport(routine_trace(0.5), {1.0, 0.0, 0.0}, 1.0, 9.81);
    EXPECT_NEAR(cot, expected, 1e-12);
    EXPECT_NEAR(cot, 0.2039, 5e-5);
}

TEST(CostOfTransport, LinearInTorque) {
    const SimTrace trace = routine_trace(0.5);
    const double once = cost_of_transport(trace, {1.0, 0.5, 0.25}, 2.0);
    EXPECT_NEAR(cost_of_transport(trace, {2.0, 1.0, 0.5}, 2.0), 2.0 * once, 1e-12);
}

TEST(CostOfTransport, IndependentOfTiming) {
    const double fast = cost_of_transport(routine_trace(0.5, 1.0, 50.0), {1.0, 2.0, 3.0}, 1.0);
    const double slow = cost_of_transport(routine_trace(0.5, 2.5, 7.0), {1.0, 2.0, 3.0}, 1.0);
    EXPECT_NEAR(fast, slow, 1e-12);
}

TEST(CostOfTransport, ZeroDistanceThrows) {
    const SimTrace still = simulate(Trajectory{{}, {}, {{0.0, {0, 0, 0}}, {1.0, {0, 90, 0}}}});
    EXPECT_THROW(cost_of_transport(still, {1, 1, 1}, 1.0), ZeroDistance);
}

}  // namespace
}  // namespace homewheel
