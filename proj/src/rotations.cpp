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

#include "homewheel/rotations.hpp"

#include <cmath>
#include <numbers>

#include "homewheel/errors.hpp"

namespace homewheel {

Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

SinCos sin_cos_deg(double degrees) {
    const double r = std::remainder(degrees, 360.0);  // exact, in [-180, 180]
    if (r == 0.0) return {0.0, 1.0};
    if (r == 90.0) return {1.0, 0.0};
    if (r == -90.0) return {-1.0, 0.0};
    if (r == 180.0 || r == -180.0) return {0.0, -1.0};
    const double rad = r * (std::numbers::pi / 180.0);
    return {std::sin(rad), std::cos(rad)};
}

double wrap_deg(double degrees) {
    const double r = std::remainder(degrees, 360.0);
    return r == 180.0 ? -180.0 : r;
}

RotationMatrix::RotationMatrix() : m_{{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}} {}

RotationMatrix RotationMatrix::transposed() const {
    Rows t{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t[i][j] = m_[j][i];
    return RotationMatrix(t);
}

double RotationMatrix::determinant() const {
    return m_[0][0] * (m_[1][1] * m_[2][2] - m_[1][2] * m_[2][1]) -
           m_[0][1] * (m_[1][0] * m_[2][2] - m_[1][2] * m_[2][0]) +
           m_[0][2] * (m_[1][0] * m_[2][1] - m_[1][1] * m_[2][0]);
}

double RotationMatrix::orthonormality_error() const {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            double d = 0.0;
            for (int k = 0; k < 3; ++k) d += m_[k][i] * m_[k][j];
            worst = std::max(worst, std::abs(d - (i == j ? 1.0 : 0.0)));
        }
    }
    return worst;
}

RotationMatrix operator*(const RotationMatrix& a, const RotationMatrix& b) {
    RotationMatrix::Rows out{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            out[i][j] = a.m_[i][0] * b.m_[0][j] + a.m_[i][1] * b.m_[1][j] + a.m_[i][2] * b.m_[2][j];
        }
    }
    return RotationMatrix(out);
}

Vec3 operator*(const RotationMatrix& r, const Vec3& v) {
    const auto& m = r.m_;
    return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
            m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
            m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
}

double frobenius_distance(const RotationMatrix& a, const RotationMatrix& b) {
    double sum = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const double d = a(i, j) - b(i, j);
            sum += d * d;
        }
    }
    return std::sqrt(sum);
}

UnitQuaternion::UnitQuaternion(double w, double x, double y, double z) {
    const double n = std::sqrt(w * w + x * x + y * y + z * z);
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw InvalidParameter("quaternion must be finite and non-zero");
    }
    w_ = w / n;
    x_ = x / n;
    y_ = y / n;
    z_ = z / n;
}

double UnitQuaternion::norm() const { return std::sqrt(w_ * w_ + x_ * x_ + y_ * y_ + z_ * z_); }

UnitQuaternion UnitQuaternion::conjugate() const { return {Raw{}, w_, -x_, -y_, -z_}; }

UnitQuaternion UnitQuaternion::operator-() const { return {Raw{}, -w_, -x_, -y_, -z_}; }

UnitQuaternion quat_from_axis_angle(const Vec3& axis, double angle_deg) {
    const double n = norm(axis);
    if (!(std::abs(n - 1.0) <= 1e-9)) {
        throw InvalidAxis("rotation axis must be unit length within 1e-9");
    }
    const auto [s, c] = sin_cos_deg(angle_deg / 2.0);
    const UnitQuaternion q(UnitQuaternion::Raw{}, c, s * axis.x, s * axis.y, s * axis.z);
    if (std::abs(q.norm() - 1.0) > 1e-12) return UnitQuaternion(q.w(), q.x(), q.y(), q.z());
    return q;
}

UnitQuaternion quat_compose(const UnitQuaternion& a, const UnitQuaternion& b) {
    const double w = a.w_ * b.w_ - a.x_ * b.x_ - a.y_ * b.y_ - a.z_ * b.z_;
    const double x = a.w_ * b.x_ + a.x_ * b.w_ + a.y_ * b.z_ - a.z_ * b.y_;
    const double y = a.w_ * b.y_ - a.x_ * b.z_ + a.y_ * b.w_ + a.z_ * b.x_;
    const double z = a.w_ * b.z_ + a.x_ * b.y_ - a.y_ * b.x_ + a.z_ * b.w_;
    return UnitQuaternion(w, x, y, z);
}

RotationMatrix quat_to_matrix(const UnitQuaternion& q) {
    const double w = q.w(), x = q.x(), y = q.y(), z = q.z();
    const double xx = x * x, yy = y * y, zz = z * z;
    const double xy = x * y, xz = x * z, yz = y * z;
    const double wx = w * x, wy = w * y, wz = w * z;
    return RotationMatrix({{{1.0 - 2.0 * (yy + zz), 2.0 * (xy - wz), 2.0 * (xz + wy)},
                            {2.0 * (xy + wz), 1.0 - 2.0 * (xx + zz), 2.0 * (yz - wx)},
                            {2.0 * (xz - wy), 2.0 * (yz + wx), 1.0 - 2.0 * (xx + yy)}}});
}

Vec3 rotate(const UnitQuaternion& q, const Vec3& v) { return quat_to_matrix(q) * v; }

UnwrappedAngle unwrap_angle(UnwrappedAngle previous, double new_wrapped) {
    const double turns = std::round((previous.degrees - new_wrapped) / 360.0);
    return {new_wrapped + 360.0 * turns};
}

}  // namespace homewheel
