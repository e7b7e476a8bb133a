// SPDX-License-Identifier: Apache-2.0

#include "gaze3d/mesh/triangle_mesh.hpp"

#include <unordered_map>

namespace gaze3d::mesh {

double TriangleMesh::signed_volume() const {
    double v = 0;
    for (const auto& t : triangles) {
        const Vec3& a = vertices[t[0]].position;
        const Vec3& b = vertices[t[1]].position;
        const Vec3& c = vertices[t[2]].position;
        v += a.dot(b.cross(c));
    }
    return v / 6.0;
}

bool TriangleMesh::is_watertight() const {
    if (triangles.empty()) return false;
    std::unordered_map<uint64_t, int> edge_count;
    edge_count.reserve(triangles.size() * 3);
    for (const auto& t : triangles) {
        for (int e = 0; e < 3; ++e) {
            uint64_t a = t[e], b = t[(e + 1) % 3];
            if (a > b) std::swap(a, b);
            ++edge_count[(a << 32) | b];
        }
    }
    for (const auto& [edge, n] : edge_count)
        if (n != 2) return false;
    return true;
}

}  // namespace gaze3d::mesh
