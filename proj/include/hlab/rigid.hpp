#pragma once

#include "hlab/error.hpp"

#include <Eigen/Dense>

namespace hlab {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Proper rigid motion x -> R x + t.
struct RigidMotion {
    Mat3 R = Mat3::Identity();
    Vec3 t = Vec3::Zero();

    Vec3 apply(const Vec3& x) const { return R * x + t; }
    Vec3 apply_dir(const Vec3& v) const { return R * v; }

    RigidMotion then(const RigidMotion& outer) const {
        return {outer.R * R, outer.R * t + outer.t};
    }

    /// R must be a rotation: orthogonal with determinant +1.
    void validate(double tol = 1e-9) const {
        if ((R.transpose() * R - Mat3::Identity()).norm() > tol || std::abs(R.determinant() - 1.0) > tol)
            throw DomainError("RigidMotion: matrix is not a proper rotation");
    }

    static RigidMotion translation(const Vec3& t) { return {Mat3::Identity(), t}; }

    /// Rotation taking the z-axis to `axis` (any non-zero vector), followed
    /// by translation to `origin`. Used to place an axisymmetric piece.
    static RigidMotion frame(const Vec3& origin, const Vec3& axis) {
        Vec3 z = axis.normalized();
        Vec3 seed = std::abs(z.z()) < 0.9 ? Vec3(0, 0, 1) : Vec3(1, 0, 0);
        Vec3 x = (seed - seed.dot(z) * z).normalized();
        Vec3 y = z.cross(x);
        Mat3 R;
        R.col(0) = x;
        R.col(1) = y;
        R.col(2) = z;
        return {R, origin};
    }
};

} // namespace hlab
