// SPDX-License-Identifier: Apache-2.0

#include "gaze3d/core/io.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gaze3d/core/error.hpp"

namespace gaze3d {

std::vector<PoseRecord> read_pose_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::InputMissing, "cannot open " + path);
    std::vector<PoseRecord> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::stringstream ss(line);
        std::string cell;
        std::vector<double> vals;
        while (std::getline(ss, cell, ',')) vals.push_back(std::stod(cell));
        if (vals.size() != 13) fail(Errc::IoFailure, "bad pose row in " + path);
        PoseRecord rec;
        rec.frame_id = static_cast<int64_t>(vals[0]);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) rec.pose.R(r, c) = vals[1 + 3 * r + c];
        rec.pose.t = Vec3(vals[10], vals[11], vals[12]);
        out.push_back(rec);
    }
    return out;
}

void write_pose_csv(const std::string& path, const std::vector<PoseRecord>& poses) {
    std::ofstream out(path);
    if (!out) fail(Errc::IoFailure, "cannot create " + path);
    for (const auto& rec : poses) {
        out << rec.frame_id;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) out << ',' << format_double(rec.pose.R(r, c));
        for (int i = 0; i < 3; ++i) out << ',' << format_double(rec.pose.t[i]);
        out << '\n';
    }
}

std::map<std::string, std::string> read_keyvalue(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::InputMissing, "cannot open " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail(Errc::IoFailure, "bad key=value line in " + path);
        kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return kv;
}

void write_keyvalue(const std::string& path,
                    const std::vector<std::pair<std::string, std::string>>& kv) {
    std::ofstream out(path);
    if (!out) fail(Errc::IoFailure, "cannot create " + path);
    for (const auto& [k, v] : kv) out << k << '=' << v << '\n';
}

Intrinsics read_intrinsics(const std::string& path) {
    const auto kv = read_keyvalue(path);
    Intrinsics k;
    try {
        k.fx = std::stod(kv.at("fx"));
        k.fy = std::stod(kv.at("fy"));
        k.cx = std::stod(kv.at("cx"));
        k.cy = std::stod(kv.at("cy"));
        k.width = std::stoi(kv.at("width"));
        k.height = std::stoi(kv.at("height"));
    } catch (const std::out_of_range&) {
        fail(Errc::IoFailure, "missing intrinsics key in " + path);
    }
    if (!k.valid()) fail(Errc::IoFailure, "invalid intrinsics in " + path);
    return k;
}

void write_intrinsics(const std::string& path, const Intrinsics& k) {
    write_keyvalue(path, {{"fx", format_double(k.fx)},
                          {"fy", format_double(k.fy)},
                          {"cx", format_double(k.cx)},
                          {"cy", format_double(k.cy)},
                          {"width", std::to_string(k.width)},
                          {"height", std::to_string(k.height)}});
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_ratio(int64_t localized, int64_t total) {
    const double pct = total > 0 ? 100.0 * static_cast<double>(localized) / total : 0.0;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%" PRId64 " (%.2f%%)", localized, pct);
    return buf;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::InputMissing, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Errc::IoFailure, "cannot create " + path);
    out << content;
}

uint64_t fnv1a64(const void* data, size_t n) {
    const uint8_t* p = static_cast<const uint8_t*>(data);
    uint64_t h = 14695981039346656037ULL;
    for (size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 1099511628211ULL;
    }
    return h;
}

uint64_t fnv1a64(const std::string& s) { return fnv1a64(s.data(), s.size()); }

}  // namespace gaze3d
