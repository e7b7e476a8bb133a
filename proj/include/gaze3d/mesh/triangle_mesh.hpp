// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "gaze3d/core/geometry.hpp"

namespace gaze3d::mesh {

struct Vertex {
    Vec3 position = Vec3::Zero();
    Eigen::Vector3f color{0.5f, 0.5f, 0.5f};  // neutral gray until observed
    int observation_count = 0;
};

// Indexed triangle soup; triangles wind counter-clockwise when viewed
// from outside.
struct TriangleMesh {
    std::vector<Vertex> vertices;
    std::vector<std::array<uint32_t, 3>> triangles;

    size_t triangle_count() const { return triangles.size(); }
    bool empty() const { return triangles.empty(); }

    Vec3 triangle_centroid(size_t i) const {
        const auto& t = triangles[i];
        return (vertices[t[0]].position + vertices[t[1]].position + vertices[t[2]].position) /
               3.0;
    }
    double triangle_area(size_t i) const {
        const auto& t = triangles[i];
        const Vec3 e1 = vertices[t[1]].position - vertices[t[0]].position;
        const Vec3 e2 = vertices[t[2]].position - vertices[t[0]].position;
        return 0.5 * e1.cross(e2).norm();
    }
    Vec3 triangle_normal(size_t i) const {  // unit, outward for CCW winding
        const auto& t = triangles[i];
        const Vec3 e1 = vertices[t[1]].position - vertices[t[0]].position;
        const Vec3 e2 = vertices[t[2]].position - vertices[t[0]].position;
        return e1.cross(e2).normalized();
    }

    double surface_area() const {
        double a = 0;
        for (size_t i = 0; i < triangles.size(); ++i) a += triangle_area(i);
        return a;
    }

    // Signed volume via the divergence theorem; positive when triangle
    // normals point outward.
    double signed_volume() const;

    // Map undirected edge -> number of incident triangles. A closed
    // 2-manifold has every count equal to 2.
    bool is_watertight() const;
};

}  // namespace gaze3d::mesh
