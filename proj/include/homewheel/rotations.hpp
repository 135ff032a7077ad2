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

namespace homewheel {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend bool operator==(const Vec3&, const Vec3&) = default;
};

Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator*(double s, const Vec3& v);
double dot(const Vec3& a, const Vec3& b);
double norm(const Vec3& v);

inline constexpr Vec3 kAxisX{1.0, 0.0, 0.0};
inline constexpr Vec3 kAxisY{0.0, 1.0, 0.0};
inline constexpr Vec3 kAxisZ{0.0, 0.0, 1.0};

// Sine and cosine of an angle in degrees. Multiples of 90 degrees return exact values.
struct SinCos {
    double sin;
    double cos;
};
SinCos sin_cos_deg(double degrees);

// Wraps an angle into [-180, 180). Exact: uses the IEEE remainder.
double wrap_deg(double degrees);

// Row-major 3x3 rotation. Orthonormal with determinant +1 when produced by this library.
class RotationMatrix {
public:
    using Rows = std::array<std::array<double, 3>, 3>;

    RotationMatrix();  // identity
    explicit RotationMatrix(const Rows& rows) : m_(rows) {}

    static RotationMatrix identity() { return {}; }

    double operator()(int row, int col) const { return m_[row][col]; }
    const Rows& rows() const { return m_; }

    RotationMatrix transposed() const;
    double determinant() const;

    // Largest deviation of columns from an orthonormal set (|c_i . c_j - delta_ij|).
    double orthonormality_error() const;

    friend RotationMatrix operator*(const RotationMatrix& a, const RotationMatrix& b);
    friend Vec3 operator*(const RotationMatrix& r, const Vec3& v);
    friend bool operator==(const RotationMatrix&, const RotationMatrix&) = default;

private:
    Rows m_;
};

// Frobenius norm of a - b.
double frobenius_distance(const RotationMatrix& a, const RotationMatrix& b);

// Unit quaternion (w, x, y, z). The sign is never canonicalized: q and -q are distinct values
// that map to the same rotation, and the belt-trick checks depend on telling them apart.
class UnitQuaternion {
public:
    UnitQuaternion() = default;  // identity

    // Normalizes the input. Throws InvalidParameter for a zero or non-finite quadruple.
    UnitQuaternion(double w, double x, double y, double z);

    static UnitQuaternion identity() { return {}; }

    double w() const { return w_; }
    double x() const { return x_; }
    double y() const { return y_; }
    double z() const { return z_; }
    double norm() const;

    UnitQuaternion conjugate() const;
    UnitQuaternion operator-() const;

    friend bool operator==(const UnitQuaternion&, const UnitQuaternion&) = default;

private:
    struct Raw {};
    UnitQuaternion(Raw, double w, double x, double y, double z) : w_(w), x_(x), y_(y), z_(z) {}

    friend UnitQuaternion quat_compose(const UnitQuaternion& a, const UnitQuaternion& b);
    friend UnitQuaternion quat_from_axis_angle(const Vec3& axis, double angle_deg);

    double w_ = 1.0;
    double x_ = 0.0;
    double y_ = 0.0;
    double z_ = 0.0;
};

// (cos(angle/2), sin(angle/2) * axis). Throws InvalidAxis unless |axis| = 1 within 1e-9.
UnitQuaternion quat_from_axis_angle(const Vec3& axis, double angle_deg);

// Hamilton product a * b, renormalized. Applying the result equals applying b, then a.
UnitQuaternion quat_compose(const UnitQuaternion& a, const UnitQuaternion& b);

// Standard conversion. Every entry is a sum of pairwise products, so q and -q give
// bitwise-identical matrices.
RotationMatrix quat_to_matrix(const UnitQuaternion& q);

Vec3 rotate(const UnitQuaternion& q, const Vec3& v);

// Continuous (lifted) angle in degrees with no modular jumps.
struct UnwrappedAngle {
    double degrees = 0.0;

    friend bool operator==(const UnwrappedAngle&, const UnwrappedAngle&) = default;
};

// Returns the lift of new_wrapped (degrees in [-180, 180)) closest to previous.
// Contract: the true rotation since `previous` is smaller than 180 degrees in magnitude;
// a larger step is silently aliased and is the caller's responsibility.
UnwrappedAngle unwrap_angle(UnwrappedAngle previous, double new_wrapped);

}  // namespace homewheel
