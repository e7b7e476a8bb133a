// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gaze3d/core/geometry.hpp"
#include "gaze3d/core/image.hpp"

namespace gaze3d::vox {

struct IntegrationParams {
    double l_occ = 0.85;    // log-odds increment for the surface voxel
    double l_free = -0.40;  // log-odds decrement along the carved ray
    double l_min = -3.5;
    double l_max = 3.5;
    double max_range = 5.0;  // meters; pixels beyond are skipped
    int pixel_stride = 1;    // integrate every Nth pixel in x and y
};

using Vec3i = Eigen::Vector3i;

// Log-odds occupancy volume split into cubic sub-volumes that can be
// evicted to a backing directory and reloaded on demand. Values are
// float32; untouched voxels read as log-odds 0 without allocating.
//
// Single writer; concurrent reads are safe only with no writer (reads
// can fault pages back in).
class VoxelGrid {
public:
    VoxelGrid() = default;
    VoxelGrid(const Vec3& origin, double voxel_size, const Vec3i& dims, int sub_volume_edge = 64);

    const Vec3& origin() const { return origin_; }
    double voxel_size() const { return voxel_size_; }
    const Vec3i& dims() const { return dims_; }
    int sub_volume_edge() const { return edge_; }

    // Backing store for evicted sub-volumes (a directory of raw
    // little-endian float32 blocks, one file per sub-volume index).
    void set_backing_store(const std::string& dir);
    const std::string& backing_store() const { return store_dir_; }

    bool in_bounds(const Vec3i& v) const {
        return v.x() >= 0 && v.y() >= 0 && v.z() >= 0 && v.x() < dims_.x() && v.y() < dims_.y() &&
               v.z() < dims_.z();
    }

    Vec3i voxel_of(const Vec3& p) const;
    Vec3 voxel_center(const Vec3i& v) const;
    // Position of the lattice corner (ix,iy,iz); valid up to dims() inclusive.
    Vec3 corner_position(const Vec3i& c) const;

    float log_odds_at(const Vec3i& v) const;  // 0 outside bounds or untouched
    void add_log_odds(const Vec3i& v, double delta, double l_min, double l_max);

    double probability_at(const Vec3& point) const;  // 0.5 for unknown/outside

    // Keep at most `budget` sub-volumes resident from now on; excess pages
    // are written to the backing store in least-recently-used order.
    void evict_pages(size_t budget);
    size_t resident_pages() const { return pages_.size(); }
    size_t stored_pages() const;  // resident + on-disk

    // All voxel values in x-fastest index order; faults pages in as needed.
    std::vector<float> snapshot() const;

    // Manifest + page flush under `dir` (manifest.txt + pages/).
    void save(const std::string& dir) const;
    static VoxelGrid load(const std::string& dir);

private:
    struct Page {
        std::vector<float> values;
        uint64_t last_access = 0;
    };

    size_t page_count() const {
        return static_cast<size_t>(pages_dims_.x()) * pages_dims_.y() * pages_dims_.z();
    }
    size_t page_index_of(const Vec3i& v) const;
    size_t cell_index_of(const Vec3i& v) const;

    Page* find_page(size_t idx) const;           // no allocation, may reload from store
    Page& materialize_page(size_t idx);          // allocates (or reloads) and enforces budget
    void write_page(size_t idx, const Page& p) const;
    bool read_page(size_t idx, Page& p) const;
    void enforce_budget();
    std::string page_path(size_t idx) const;

    Vec3 origin_ = Vec3::Zero();
    double voxel_size_ = 0.0;
    Vec3i dims_ = Vec3i::Zero();
    int edge_ = 64;
    Vec3i pages_dims_ = Vec3i::Zero();
    std::string store_dir_;
    size_t budget_ = SIZE_MAX;

    mutable std::unordered_map<size_t, Page> pages_;
    mutable std::vector<uint8_t> on_disk_;  // 1 if the page file exists
    mutable uint64_t access_clock_ = 0;
};

// Fuses one posed depth image into the grid. Every valid pixel with
// depth <= max_range carves l_free along the clipped camera-to-surface
// segment and adds l_occ to the voxel containing the surface point.
void integrate_depth(VoxelGrid& grid, const DepthImage& depth, const Pose& pose,
                     const Intrinsics& k, const IntegrationParams& params);

double occupancy_probability(const VoxelGrid& grid, const Vec3& point);

// Exact voxel traversal of a world-space segment clipped to the grid;
// visits every voxel the segment pierces, in order.
void traverse_segment(const VoxelGrid& grid, const Vec3& from, const Vec3& to,
                      const std::function<void(const Vec3i&)>& visit);

}  // namespace gaze3d::vox
