// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

namespace gaze3d {

// Dense row-major image with a compile-time element type and a runtime
// channel count (1 = gray, 3 = RGB).
template <typename T>
class Image {
public:
    Image() = default;
    Image(int width, int height, int channels, T fill = T{})
        : w_(width), h_(height), c_(channels),
          data_(static_cast<size_t>(width) * height * channels, fill) {}

    int width() const { return w_; }
    int height() const { return h_; }
    int channels() const { return c_; }
    bool empty() const { return data_.empty(); }

    T& at(int x, int y, int ch = 0) { return data_[(static_cast<size_t>(y) * w_ + x) * c_ + ch]; }
    const T& at(int x, int y, int ch = 0) const {
        return data_[(static_cast<size_t>(y) * w_ + x) * c_ + ch];
    }

    bool contains(int x, int y) const { return x >= 0 && x < w_ && y >= 0 && y < h_; }

    T* data() { return data_.data(); }
    const T* data() const { return data_.data(); }
    size_t size() const { return data_.size(); }

private:
    int w_ = 0, h_ = 0, c_ = 1;
    std::vector<T> data_;
};

using ImageU8 = Image<uint8_t>;   // gray or interleaved RGB
using ImageF = Image<float>;      // gray, values nominally in [0,1]
using DepthImage = Image<float>;  // meters, 0 = invalid

// Grayscale conversion (Rec.601 luma for RGB input; pass-through for gray).
ImageF to_gray_f(const ImageU8& img);

// Bilinear sample of a single-channel float image; caller guarantees
// 0 <= x <= w-1, 0 <= y <= h-1.
float sample_bilinear(const ImageF& img, float x, float y);

// Separable Gaussian blur with kernel radius ceil(3*sigma).
ImageF gaussian_blur(const ImageF& img, float sigma);

// 2x decimation keeping even-indexed pixels.
ImageF downsample_half(const ImageF& img);

}  // namespace gaze3d
