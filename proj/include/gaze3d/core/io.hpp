// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gaze3d/core/geometry.hpp"

namespace gaze3d {

// Pose files: CSV rows `frame_id, r00..r22 (row-major), tx, ty, tz`.
struct PoseRecord {
    int64_t frame_id = 0;
    Pose pose;
};

std::vector<PoseRecord> read_pose_csv(const std::string& path);
void write_pose_csv(const std::string& path, const std::vector<PoseRecord>& poses);

// Small `key=value` text files (intrinsics, grid manifests, configs).
std::map<std::string, std::string> read_keyvalue(const std::string& path);
void write_keyvalue(const std::string& path, const std::vector<std::pair<std::string, std::string>>& kv);

Intrinsics read_intrinsics(const std::string& path);
void write_intrinsics(const std::string& path, const Intrinsics& k);

// Formats a double with enough digits to round-trip exactly.
std::string format_double(double v);

// Localization ratio in the report style `1512 (79.45%)`.
std::string format_ratio(int64_t localized, int64_t total);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// FNV-1a over bytes; used for config provenance hashes in manifests.
uint64_t fnv1a64(const void* data, size_t n);
uint64_t fnv1a64(const std::string& s);

}  // namespace gaze3d
