// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "gaze3d/core/error.hpp"

namespace gaze3d {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

// Rigid world->camera transform. A world point X maps into the camera
// frame as Xc = R*X + t; the camera looks along +Z, pixel +u is right
// and +v is down, origin at the top-left corner.
struct Pose {
    Mat3 R = Mat3::Identity();
    Vec3 t = Vec3::Zero();

    Vec3 to_camera(const Vec3& x_world) const { return R * x_world + t; }
    Vec3 to_world(const Vec3& x_cam) const { return R.transpose() * (x_cam - t); }
    Vec3 center() const { return -(R.transpose() * t); }

    Pose inverse() const { return Pose{R.transpose(), -(R.transpose() * t)}; }

    // this ∘ other: applies `other` first.
    Pose compose(const Pose& other) const { return Pose{R * other.R, R * other.t + t}; }

    // max deviation from RᵀR = I and det = +1
    double orthonormality_error() const;
    bool is_valid(double tol = 1e-9) const { return orthonormality_error() <= tol; }
};

struct Intrinsics {
    double fx = 0, fy = 0, cx = 0, cy = 0;
    int width = 0, height = 0;

    bool valid() const {
        return fx > 0 && fy > 0 && cx >= 0 && cx < width && cy >= 0 && cy < height;
    }
    bool contains(const Vec2& px) const {
        return px.x() >= 0 && px.x() <= width - 1 && px.y() >= 0 && px.y() <= height - 1;
    }
};

struct Ray {
    Vec3 origin = Vec3::Zero();
    Vec3 direction = Vec3::UnitZ();  // unit norm

    Vec3 at(double s) const { return origin + s * direction; }
};

// Pinhole projection of a world point. Throws BehindCamera when the
// camera-frame depth is not positive.
Vec2 project(const Vec3& point_world, const Pose& pose, const Intrinsics& k);

// Camera-frame depth of a world point (Zc); no validity check.
double camera_depth(const Vec3& point_world, const Pose& pose);

// Inverse of project at a given metric depth. Throws NonPositiveDepth.
Vec3 backproject(const Vec2& pixel, double depth, const Pose& pose, const Intrinsics& k);

// World-frame viewing ray through a pixel; origin is the camera center.
Ray pixel_ray(const Vec2& pixel, const Pose& pose, const Intrinsics& k);

// Rotation helpers (axis-angle exponential map and its inverse).
Mat3 so3_exp(const Vec3& w);
Vec3 so3_log(const Mat3& R);

// Angle in radians between two rotations.
double rotation_angle(const Mat3& a, const Mat3& b);

}  // namespace gaze3d
