// SPDX-License-Identifier: Apache-2.0

#include "gaze3d/vox/voxel_grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <limits>

#include "gaze3d/core/error.hpp"
#include "gaze3d/core/io.hpp"

namespace fs = std::filesystem;

namespace gaze3d::vox {

VoxelGrid::VoxelGrid(const Vec3& origin, double voxel_size, const Vec3i& dims,
                     int sub_volume_edge)
    : origin_(origin), voxel_size_(voxel_size), dims_(dims), edge_(sub_volume_edge) {
    if (voxel_size <= 0) fail(Errc::ConfigInvalid, "voxel_size must be positive");
    for (int a = 0; a < 3; ++a)
        if (dims_[a] <= 0 || dims_[a] % edge_ != 0)
            fail(Errc::ConfigInvalid, "dims must be positive and divisible by sub_volume_edge");
    pages_dims_ = dims_ / edge_;
    on_disk_.assign(page_count(), 0);
}

void VoxelGrid::set_backing_store(const std::string& dir) {
    store_dir_ = dir;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) fail(Errc::BackingStoreFailure, "cannot create " + dir);
}

Vec3i VoxelGrid::voxel_of(const Vec3& p) const {
    const Vec3 rel = (p - origin_) / voxel_size_;
    return Vec3i(static_cast<int>(std::floor(rel.x())), static_cast<int>(std::floor(rel.y())),
                 static_cast<int>(std::floor(rel.z())));
}

Vec3 VoxelGrid::voxel_center(const Vec3i& v) const {
    return origin_ + voxel_size_ * (v.cast<double>() + Vec3::Constant(0.5));
}

Vec3 VoxelGrid::corner_position(const Vec3i& c) const {
    return origin_ + voxel_size_ * c.cast<double>();
}

size_t VoxelGrid::page_index_of(const Vec3i& v) const {
    const int px = v.x() / edge_, py = v.y() / edge_, pz = v.z() / edge_;
    return (static_cast<size_t>(pz) * pages_dims_.y() + py) * pages_dims_.x() + px;
}

size_t VoxelGrid::cell_index_of(const Vec3i& v) const {
    const int lx = v.x() % edge_, ly = v.y() % edge_, lz = v.z() % edge_;
    return (static_cast<size_t>(lz) * edge_ + ly) * edge_ + lx;
}

std::string VoxelGrid::page_path(size_t idx) const {
    return store_dir_ + "/page_" + std::to_string(idx) + ".bin";
}

void VoxelGrid::write_page(size_t idx, const Page& p) const {
    if (store_dir_.empty()) fail(Errc::BackingStoreFailure, "no backing store configured");
    FILE* f = std::fopen(page_path(idx).c_str(), "wb");
    if (!f) fail(Errc::BackingStoreFailure, "cannot write " + page_path(idx));
    const size_t n = std::fwrite(p.values.data(), sizeof(float), p.values.size(), f);
    std::fclose(f);
    if (n != p.values.size()) fail(Errc::BackingStoreFailure, "short write " + page_path(idx));
    on_disk_[idx] = 1;
}

bool VoxelGrid::read_page(size_t idx, Page& p) const {
    if (store_dir_.empty() || !on_disk_[idx]) return false;
    FILE* f = std::fopen(page_path(idx).c_str(), "rb");
    if (!f) fail(Errc::BackingStoreFailure, "cannot read " + page_path(idx));
    const size_t cells = static_cast<size_t>(edge_) * edge_ * edge_;
    p.values.resize(cells);
    const size_t n = std::fread(p.values.data(), sizeof(float), cells, f);
    std::fclose(f);
    if (n != cells) fail(Errc::BackingStoreFailure, "short read " + page_path(idx));
    return true;
}

VoxelGrid::Page* VoxelGrid::find_page(size_t idx) const {
    auto it = pages_.find(idx);
    if (it == pages_.end()) {
        Page p;
        if (!read_page(idx, p)) return nullptr;
        p.last_access = ++access_clock_;
        pages_.emplace(idx, std::move(p));
        const_cast<VoxelGrid*>(this)->enforce_budget();
        it = pages_.find(idx);  // budget >= 1, so the newest page survives
    } else {
        it->second.last_access = ++access_clock_;
    }
    return &it->second;
}

VoxelGrid::Page& VoxelGrid::materialize_page(size_t idx) {
    if (Page* p = find_page(idx)) return *p;
    Page fresh;
    fresh.values.assign(static_cast<size_t>(edge_) * edge_ * edge_, 0.0f);
    fresh.last_access = ++access_clock_;
    pages_.emplace(idx, std::move(fresh));
    enforce_budget();
    return pages_.find(idx)->second;
}

void VoxelGrid::enforce_budget() {
    while (pages_.size() > budget_) {
        auto victim = pages_.begin();
        for (auto it = pages_.begin(); it != pages_.end(); ++it)
            if (it->second.last_access < victim->second.last_access) victim = it;
        write_page(victim->first, victim->second);
        pages_.erase(victim);
    }
}

void VoxelGrid::evict_pages(size_t budget) {
    if (budget < 1) fail(Errc::ConfigInvalid, "page budget must be >= 1");
    budget_ = budget;
    enforce_budget();
}

size_t VoxelGrid::stored_pages() const {
    size_t n = pages_.size();
    for (size_t i = 0; i < on_disk_.size(); ++i)
        if (on_disk_[i] && !pages_.count(i)) ++n;
    return n;
}

float VoxelGrid::log_odds_at(const Vec3i& v) const {
    if (!in_bounds(v)) return 0.0f;
    const Page* p = find_page(page_index_of(v));
    if (!p) return 0.0f;
    return p->values[cell_index_of(v)];
}

void VoxelGrid::add_log_odds(const Vec3i& v, double delta, double l_min, double l_max) {
    if (!in_bounds(v)) return;
    Page& p = materialize_page(page_index_of(v));
    float& cell = p.values[cell_index_of(v)];
    cell = static_cast<float>(std::clamp(static_cast<double>(cell) + delta, l_min, l_max));
}

double VoxelGrid::probability_at(const Vec3& point) const {
    const Vec3i v = voxel_of(point);
    if (!in_bounds(v)) return 0.5;
    const double l = log_odds_at(v);
    return 1.0 / (1.0 + std::exp(-l));
}

std::vector<float> VoxelGrid::snapshot() const {
    std::vector<float> out;
    out.reserve(static_cast<size_t>(dims_.x()) * dims_.y() * dims_.z());
    for (int z = 0; z < dims_.z(); ++z)
        for (int y = 0; y < dims_.y(); ++y)
            for (int x = 0; x < dims_.x(); ++x) out.push_back(log_odds_at({x, y, z}));
    return out;
}

void VoxelGrid::save(const std::string& dir) const {
    fs::create_directories(dir);
    write_keyvalue(dir + "/manifest.txt",
                   {{"origin_x", format_double(origin_.x())},
                    {"origin_y", format_double(origin_.y())},
                    {"origin_z", format_double(origin_.z())},
                    {"voxel_size", format_double(voxel_size_)},
                    {"dims_x", std::to_string(dims_.x())},
                    {"dims_y", std::to_string(dims_.y())},
                    {"dims_z", std::to_string(dims_.z())},
                    {"sub_volume_edge", std::to_string(edge_)}});
    VoxelGrid& self = const_cast<VoxelGrid&>(*this);
    const std::string old_store = store_dir_;
    self.store_dir_ = dir + "/pages";
    fs::create_directories(self.store_dir_);
    for (auto& [idx, page] : pages_) write_page(idx, page);
    if (!old_store.empty() && old_store != store_dir_) {
        // carry over pages that only exist in the previous store
        for (size_t i = 0; i < on_disk_.size(); ++i) {
            if (on_disk_[i] && !pages_.count(i)) {
                const std::string src = old_store + "/page_" + std::to_string(i) + ".bin";
                fs::copy_file(src, page_path(i), fs::copy_options::overwrite_existing);
            }
        }
    }
}

VoxelGrid VoxelGrid::load(const std::string& dir) {
    const auto kv = read_keyvalue(dir + "/manifest.txt");
    VoxelGrid g(Vec3(std::stod(kv.at("origin_x")), std::stod(kv.at("origin_y")),
                     std::stod(kv.at("origin_z"))),
                std::stod(kv.at("voxel_size")),
                Vec3i(std::stoi(kv.at("dims_x")), std::stoi(kv.at("dims_y")),
                      std::stoi(kv.at("dims_z"))),
                std::stoi(kv.at("sub_volume_edge")));
    g.store_dir_ = dir + "/pages";
    for (size_t i = 0; i < g.page_count(); ++i)
        g.on_disk_[i] = fs::exists(g.page_path(i)) ? 1 : 0;
    return g;
}

void traverse_segment(const VoxelGrid& grid, const Vec3& from, const Vec3& to,
                      const std::function<void(const Vec3i&)>& visit) {
    const Vec3 d = to - from;
    const double len = d.norm();
    if (len < 1e-12) return;
    const Vec3 dir = d / len;

    // clip [0,len] against the grid AABB
    const Vec3 lo = grid.origin();
    const Vec3 hi = grid.origin() + grid.voxel_size() * grid.dims().cast<double>();
    double t0 = 0.0, t1 = len;
    for (int a = 0; a < 3; ++a) {
        if (std::abs(dir[a]) < 1e-15) {
            if (from[a] < lo[a] || from[a] > hi[a]) return;
            continue;
        }
        double ta = (lo[a] - from[a]) / dir[a];
        double tb = (hi[a] - from[a]) / dir[a];
        if (ta > tb) std::swap(ta, tb);
        t0 = std::max(t0, ta);
        t1 = std::min(t1, tb);
    }
    if (t0 > t1) return;

    // nudge inside so the start cell is well defined on boundaries
    const double eps = 1e-9 * std::max(1.0, len);
    const Vec3 start = from + dir * std::min(t0 + eps, t1);
    Vec3i cell = grid.voxel_of(start);
    for (int a = 0; a < 3; ++a) cell[a] = std::clamp(cell[a], 0, grid.dims()[a] - 1);

    Vec3i step;
    Vec3 t_max, t_delta;
    for (int a = 0; a < 3; ++a) {
        if (dir[a] > 1e-15) {
            step[a] = 1;
            t_delta[a] = grid.voxel_size() / dir[a];
            t_max[a] = (grid.corner_position(cell + Vec3i::Unit(a))[a] - from[a]) / dir[a];
        } else if (dir[a] < -1e-15) {
            step[a] = -1;
            t_delta[a] = -grid.voxel_size() / dir[a];
            t_max[a] = (grid.corner_position(cell)[a] - from[a]) / dir[a];
        } else {
            step[a] = 0;
            t_delta[a] = std::numeric_limits<double>::infinity();
            t_max[a] = std::numeric_limits<double>::infinity();
        }
    }

    while (true) {
        visit(cell);
        int axis = 0;
        if (t_max.y() < t_max.x()) axis = 1;
        if (t_max.z() < t_max[axis]) axis = 2;
        if (t_max[axis] > t1) break;
        cell[axis] += step[axis];
        if (cell[axis] < 0 || cell[axis] >= grid.dims()[axis]) break;
        t_max[axis] += t_delta[axis];
    }
}

void integrate_depth(VoxelGrid& grid, const DepthImage& depth, const Pose& pose,
                     const Intrinsics& k, const IntegrationParams& params) {
    if (depth.empty()) fail(Errc::EmptyDepthImage, "depth image is empty");
    if (depth.width() != k.width || depth.height() != k.height)
        fail(Errc::ConfigInvalid, "depth image size does not match intrinsics");

    const Vec3 cam = pose.center();
    const int stride = std::max(1, params.pixel_stride);

    for (int y = 0; y < depth.height(); y += stride) {
        for (int x = 0; x < depth.width(); x += stride) {
            const float d = depth.at(x, y);
            if (d <= 0.0f || d > params.max_range) continue;
            const Vec3 surface = backproject(Vec2(x, y), d, pose, k);
            const Vec3i end_cell = grid.voxel_of(surface);
            const bool end_inside = grid.in_bounds(end_cell);
            traverse_segment(grid, cam, surface, [&](const Vec3i& cell) {
                if (end_inside && cell == end_cell) return;  // surface voxel handled below
                grid.add_log_odds(cell, params.l_free, params.l_min, params.l_max);
            });
            if (end_inside) grid.add_log_odds(end_cell, params.l_occ, params.l_min, params.l_max);
        }
    }
}

double occupancy_probability(const VoxelGrid& grid, const Vec3& point) {
    return grid.probability_at(point);
}

}  // namespace gaze3d::vox
