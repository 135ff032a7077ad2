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
#include <random>

#include <Eigen/Geometry>
#include <gtest/gtest.h>

#include "homewheel/errors.hpp"
#include "homewheel/rotations.hpp"
#include "test_util.hpp"

namespace homewheel {
namespace {

Eigen::Matrix3d to_eigen(const RotationMatrix& r) {
    Eigen::Matrix3d m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = r(i, j);
    return m;
}

TEST(QuatFromAxisAngle, IdentityAtZero) {
    const auto q = quat_from_axis_angle(kAxisZ, 0.0);
    EXPECT_EQ(q, UnitQuaternion(1, 0, 0, 0));
}

TEST(QuatFromAxisAngle, FullTurnIsNegatedIdentity) {
    const auto q = quat_from_axis_angle(kAxisZ, 360.0);
    EXPECT_EQ(q.w(), -1.0);
    EXPECT_EQ(q.x(), 0.0);
    EXPECT_EQ(q.y(), 0.0);
    EXPECT_EQ(q.z(), 0.0);
    EXPECT_LT(frobenius_distance(quat_to_matrix(q), RotationMatrix::identity()), 1e-15);
}

TEST(QuatFromAxisAngle, HalfTurnAboutX) {
    const auto q = quat_from_axis_angle(kAxisX, 180.0);
    EXPECT_EQ(q, UnitQuaternion(0, 1, 0, 0));
}

TEST(QuatFromAxisAngle, RejectsNonUnitAxis) {
    EXPECT_THROW(quat_from_axis_angle({1.0, 1.0, 0.0}, 10.0), InvalidAxis);
    EXPECT_THROW(quat_from_axis_angle({0.0, 0.0, 0.0}, 10.0), InvalidAxis);
    EXPECT_THROW(quat_from_axis_angle({1.0 + 1e-8, 0.0, 0.0}, 10.0), InvalidAxis);
    EXPECT_NO_THROW(quat_from_axis_angle({1.0 + 1e-10, 0.0, 0.0}, 10.0));
}

TEST(QuatCompose, IdentityAndInverse) {
    const auto q = quat_from_axis_angle(unit({1.0, -2.0, 0.5}), 37.0);
    EXPECT_EQ(quat_compose(UnitQuaternion::identity(), q), q);
    const auto r = quat_compose(q, q.conjugate());
    EXPECT_NEAR(r.w(), 1.0, 1e-12);
    EXPECT_NEAR(r.x(), 0.0, 1e-12);
    EXPECT_NEAR(r.y(), 0.0, 1e-12);
    EXPECT_NEAR(r.z(), 0.0, 1e-12);
}

TEST(QuatCompose, TwoHalfTurnsAboutX) {
    // (0,1,0,0) * (0,1,0,0): w = 0*0 - 1*1 = -1, vector part 0.
    const auto half = quat_from_axis_angle(kAxisX, 180.0);
    const auto q = quat_compose(half, half);
    EXPECT_EQ(q, UnitQuaternion(-1, 0, 0, 0));
    EXPECT_EQ(quat_to_matrix(q), RotationMatrix::identity());
}

TEST(QuatToMatrix, KnownMatrices) {
    EXPECT_EQ(quat_to_matrix(UnitQuaternion(1, 0, 0, 0)), RotationMatrix::identity());
    const RotationMatrix half_z({{{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}});
    EXPECT_EQ(quat_to_matrix(UnitQuaternion(0, 0, 0, 1)), half_z);
}

TEST(QuatToMatrix, DoubleCoverSymmetryIsBitwise) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 1000; ++i) {
        const auto q = random_quaternion(rng);
        EXPECT_EQ(quat_to_matrix(q), quat_to_matrix(-q));
    }
}

TEST(QuatToMatrix, AgreesWithEigen) {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 1000; ++i) {
        const auto q = random_quaternion(rng);
        const Eigen::Matrix3d expected = Eigen::Quaterniond(q.w(), q.x(), q.y(), q.z()).toRotationMatrix();
        EXPECT_LT((to_eigen(quat_to_matrix(q)) - expected).norm(), 1e-12);
    }
}

TEST(QuatToMatrix, AxisAngleAgreesWithEigen) {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> angle(-720.0, 720.0);
    for (int i = 0; i < 1000; ++i) {
        const Vec3 axis = random_axis(rng);
        const double deg = angle(rng);
        const Eigen::Matrix3d expected =
            Eigen::AngleAxisd(deg * M_PI / 180.0, Eigen::Vector3d(axis.x, axis.y, axis.z)).toRotationMatrix();
        EXPECT_LT((to_eigen(quat_to_matrix(quat_from_axis_angle(axis, deg))) - expected).norm(), 1e-12);
    }
}

TEST(RotationProperties, NormPreservedOverManyCompositions) {
    std::mt19937_64 rng(14);
    UnitQuaternion q;
    double worst = 0.0;
    for (int i = 0; i < 1'000'000; ++i) {
        q = quat_compose(q, random_quaternion(rng));
        worst = std::max(worst, std::abs(q.norm() - 1.0));
    }
    EXPECT_LT(worst, 1e-9);
    EXPECT_LT(quat_to_matrix(q).orthonormality_error(), 1e-10);
    EXPECT_NEAR(quat_to_matrix(q).determinant(), 1.0, 1e-10);
}

TEST(RotationProperties, DoubleCoverOnRandomAxes) {
    std::mt19937_64 rng(15);
    for (int i = 0; i < 1000; ++i) {
        const Vec3 axis = random_axis(rng);
        const auto full = quat_from_axis_angle(axis, 360.0);
        EXPECT_LT(std::abs(full.w() + 1.0), 1e-12);
        EXPECT_LT(frobenius_distance(quat_to_matrix(full), RotationMatrix::identity()), 1e-10);
        const auto twice = quat_from_axis_angle(axis, 720.0);
        EXPECT_LT(std::abs(twice.w() - 1.0), 1e-10);
        EXPECT_LT(std::hypot(twice.x(), twice.y(), twice.z()), 1e-10);
    }
}

TEST(RotationProperties, ComposedMatrixEqualsMatrixProduct) {
    std::mt19937_64 rng(16);
    for (int i = 0; i < 10000; ++i) {
        const auto a = random_quaternion(rng);
        const auto b = random_quaternion(rng);
        const auto lhs = quat_to_matrix(quat_compose(a, b));
        const auto rhs = quat_to_matrix(a) * quat_to_matrix(b);
        EXPECT_LT(frobenius_distance(lhs, rhs), 1e-9);
    }
}

TEST(UnwrapAngle, NearestLift) {
    EXPECT_EQ(unwrap_angle({350.0}, -5.0).degrees, 355.0);
    EXPECT_EQ(unwrap_angle({0.0}, 0.0).degrees, 0.0);
    EXPECT_EQ(unwrap_angle({719.0}, 0.0).degrees, 720.0);
    EXPECT_EQ(unwrap_angle({-350.0}, 5.0).degrees, -355.0);
}

TEST(UnwrapAngle, RecoversDenseRandomWalk) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> step(-179.0, 179.0);
    double truth = 0.0;
    UnwrappedAngle lifted{0.0};
    for (int i = 0; i < 100000; ++i) {
        truth += step(rng);
        lifted = unwrap_angle(lifted, wrap_deg(truth));
        ASSERT_NEAR(lifted.degrees, truth, 1e-6);
    }
}

TEST(WrapDeg, HalfOpenRange) {
    EXPECT_EQ(wrap_deg(180.0), -180.0);
    EXPECT_EQ(wrap_deg(-180.0), -180.0);
    EXPECT_EQ(wrap_deg(360.0), 0.0);
    EXPECT_EQ(wrap_deg(270.0), -90.0);
    EXPECT_EQ(wrap_deg(359.7) + 360.0, 359.7);
}

TEST(SinCosDeg, ExactQuadrants) {
    EXPECT_EQ(sin_cos_deg(90.0).cos, 0.0);
    EXPECT_EQ(sin_cos_deg(-90.0).sin, -1.0);
    EXPECT_EQ(sin_cos_deg(180.0).cos, -1.0);
    EXPECT_EQ(sin_cos_deg(450.0).sin, 1.0);
    EXPECT_NEAR(sin_cos_deg(30.0).sin, 0.5, 1e-15);
}

}  // namespace
}  // namespace homewheel
