// SPDX-License-Identifier: Apache-2.0

#include "gaze3d/core/geometry.hpp"

#include <cmath>

namespace gaze3d {

double Pose::orthonormality_error() const {
    double err = (R.transpose() * R - Mat3::Identity()).cwiseAbs().maxCoeff();
    return std::max(err, std::abs(R.determinant() - 1.0));
}

Vec2 project(const Vec3& point_world, const Pose& pose, const Intrinsics& k) {
    const Vec3 xc = pose.to_camera(point_world);
    if (xc.z() <= 0.0) fail(Errc::BehindCamera, "point has non-positive camera depth");
    return {k.fx * xc.x() / xc.z() + k.cx, k.fy * xc.y() / xc.z() + k.cy};
}

double camera_depth(const Vec3& point_world, const Pose& pose) {
    return pose.to_camera(point_world).z();
}

Vec3 backproject(const Vec2& pixel, double depth, const Pose& pose, const Intrinsics& k) {
    if (depth <= 0.0) fail(Errc::NonPositiveDepth, "depth must be positive");
    const Vec3 xc((pixel.x() - k.cx) / k.fx * depth, (pixel.y() - k.cy) / k.fy * depth, depth);
    return pose.to_world(xc);
}

Ray pixel_ray(const Vec2& pixel, const Pose& pose, const Intrinsics& k) {
    const Vec3 dir_cam((pixel.x() - k.cx) / k.fx, (pixel.y() - k.cy) / k.fy, 1.0);
    Ray ray;
    ray.origin = pose.center();
    ray.direction = (pose.R.transpose() * dir_cam).normalized();
    return ray;
}

Mat3 so3_exp(const Vec3& w) {
    const double theta = w.norm();
    if (theta < 1e-12) {
        Mat3 skew;
        skew << 0, -w.z(), w.y(), w.z(), 0, -w.x(), -w.y(), w.x(), 0;
        return Mat3::Identity() + skew;  // first-order step, exact enough at this scale
    }
    return Eigen::AngleAxisd(theta, w / theta).toRotationMatrix();
}

Vec3 so3_log(const Mat3& R) {
    Eigen::AngleAxisd aa(R);
    return aa.angle() * aa.axis();
}

double rotation_angle(const Mat3& a, const Mat3& b) {
    const double c = ((a.transpose() * b).trace() - 1.0) * 0.5;
    return std::acos(std::clamp(c, -1.0, 1.0));
}

}  // namespace gaze3d
