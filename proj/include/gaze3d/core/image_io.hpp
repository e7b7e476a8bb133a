// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "gaze3d/core/image.hpp"

namespace gaze3d {

// 8-bit PNG, gray or RGB (alpha stripped on read).
ImageU8 read_png_u8(const std::string& path);
void write_png_u8(const std::string& path, const ImageU8& img);

// Depth images travel as 16-bit single-channel PNG in millimeters;
// value/1000 = meters, 0 = invalid.
DepthImage read_depth_png(const std::string& path);
void write_depth_png(const std::string& path, const DepthImage& depth);

}  // namespace gaze3d
