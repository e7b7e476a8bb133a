// SPDX-License-Identifier: Apache-2.0

#include "gaze3d/core/image.hpp"

#include <algorithm>
#include <cmath>

namespace gaze3d {

ImageF to_gray_f(const ImageU8& img) {
    ImageF out(img.width(), img.height(), 1);
    const float inv = 1.0f / 255.0f;
    if (img.channels() == 1) {
        for (int y = 0; y < img.height(); ++y)
            for (int x = 0; x < img.width(); ++x) out.at(x, y) = img.at(x, y) * inv;
    } else {
        for (int y = 0; y < img.height(); ++y)
            for (int x = 0; x < img.width(); ++x) {
                const float r = img.at(x, y, 0), g = img.at(x, y, 1), b = img.at(x, y, 2);
                out.at(x, y) = (0.299f * r + 0.587f * g + 0.114f * b) * inv;
            }
    }
    return out;
}

float sample_bilinear(const ImageF& img, float x, float y) {
    const int x0 = std::clamp(static_cast<int>(std::floor(x)), 0, img.width() - 1);
    const int y0 = std::clamp(static_cast<int>(std::floor(y)), 0, img.height() - 1);
    const int x1 = std::min(x0 + 1, img.width() - 1);
    const int y1 = std::min(y0 + 1, img.height() - 1);
    const float fx = x - x0, fy = y - y0;
    const float v00 = img.at(x0, y0), v10 = img.at(x1, y0);
    const float v01 = img.at(x0, y1), v11 = img.at(x1, y1);
    return (1 - fy) * ((1 - fx) * v00 + fx * v10) + fy * ((1 - fx) * v01 + fx * v11);
}

static std::vector<float> gaussian_kernel(float sigma) {
    const int radius = std::max(1, static_cast<int>(std::ceil(3.0f * sigma)));
    std::vector<float> k(2 * radius + 1);
    float sum = 0.0f;
    for (int i = -radius; i <= radius; ++i) {
        k[i + radius] = std::exp(-0.5f * i * i / (sigma * sigma));
        sum += k[i + radius];
    }
    for (float& v : k) v /= sum;
    return k;
}

ImageF gaussian_blur(const ImageF& img, float sigma) {
    const auto kernel = gaussian_kernel(sigma);
    const int radius = static_cast<int>(kernel.size() / 2);
    const int w = img.width(), h = img.height();
    ImageF tmp(w, h, 1), out(w, h, 1);
    // horizontal pass, clamped borders
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            float acc = 0.0f;
            for (int i = -radius; i <= radius; ++i) {
                const int xi = std::clamp(x + i, 0, w - 1);
                acc += kernel[i + radius] * img.at(xi, y);
            }
            tmp.at(x, y) = acc;
        }
    }
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            float acc = 0.0f;
            for (int i = -radius; i <= radius; ++i) {
                const int yi = std::clamp(y + i, 0, h - 1);
                acc += kernel[i + radius] * tmp.at(x, yi);
            }
            out.at(x, y) = acc;
        }
    }
    return out;
}

ImageF downsample_half(const ImageF& img) {
    const int w = std::max(1, img.width() / 2), h = std::max(1, img.height() / 2);
    ImageF out(w, h, 1);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) out.at(x, y) = img.at(2 * x, 2 * y);
    return out;
}

}  // namespace gaze3d
