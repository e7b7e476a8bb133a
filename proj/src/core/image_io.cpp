// SPDX-License-Identifier: Apache-2.0

#include "gaze3d/core/image_io.hpp"

#include <png.h>

#include <cmath>
#include <cstdio>
#include <memory>
#include <vector>

#include "gaze3d/core/error.hpp"

namespace gaze3d {

namespace {

struct FileCloser {
    void operator()(FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<FILE, FileCloser>;

struct PngRead {
    png_structp png = nullptr;
    png_infop info = nullptr;
    ~PngRead() { png_destroy_read_struct(&png, &info, nullptr); }
};

struct PngWrite {
    png_structp png = nullptr;
    png_infop info = nullptr;
    ~PngWrite() { png_destroy_write_struct(&png, &info); }
};

void read_rows(png_structp png, png_infop info, std::vector<uint8_t>& buf, size_t row_bytes,
               int height) {
    buf.resize(row_bytes * height);
    std::vector<png_bytep> rows(height);
    for (int y = 0; y < height; ++y) rows[y] = buf.data() + y * row_bytes;
    png_read_image(png, rows.data());
    png_read_end(png, info);
}

}  // namespace

ImageU8 read_png_u8(const std::string& path) {
    FilePtr f(std::fopen(path.c_str(), "rb"));
    if (!f) fail(Errc::InputMissing, "cannot open " + path);

    PngRead ctx;
    ctx.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    ctx.info = png_create_info_struct(ctx.png);
    if (!ctx.png || !ctx.info || setjmp(png_jmpbuf(ctx.png)))
        fail(Errc::IoFailure, "png read failed for " + path);

    png_init_io(ctx.png, f.get());
    png_read_info(ctx.png, ctx.info);

    png_set_strip_16(ctx.png);
    png_set_strip_alpha(ctx.png);
    png_set_palette_to_rgb(ctx.png);
    png_set_expand_gray_1_2_4_to_8(ctx.png);
    png_read_update_info(ctx.png, ctx.info);

    const int w = png_get_image_width(ctx.png, ctx.info);
    const int h = png_get_image_height(ctx.png, ctx.info);
    const int ch = png_get_channels(ctx.png, ctx.info);
    if (ch != 1 && ch != 3) fail(Errc::IoFailure, "unsupported channel count in " + path);

    std::vector<uint8_t> buf;
    read_rows(ctx.png, ctx.info, buf, static_cast<size_t>(w) * ch, h);

    ImageU8 img(w, h, ch);
    std::copy(buf.begin(), buf.end(), img.data());
    return img;
}

void write_png_u8(const std::string& path, const ImageU8& img) {
    FilePtr f(std::fopen(path.c_str(), "wb"));
    if (!f) fail(Errc::IoFailure, "cannot create " + path);

    PngWrite ctx;
    ctx.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    ctx.info = png_create_info_struct(ctx.png);
    if (!ctx.png || !ctx.info || setjmp(png_jmpbuf(ctx.png)))
        fail(Errc::IoFailure, "png write failed for " + path);

    png_init_io(ctx.png, f.get());
    const int color = img.channels() == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB;
    png_set_IHDR(ctx.png, ctx.info, img.width(), img.height(), 8, color, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(ctx.png, ctx.info);

    const size_t row_bytes = static_cast<size_t>(img.width()) * img.channels();
    for (int y = 0; y < img.height(); ++y)
        png_write_row(ctx.png, const_cast<png_bytep>(img.data() + y * row_bytes));
    png_write_end(ctx.png, ctx.info);
}

DepthImage read_depth_png(const std::string& path) {
    FilePtr f(std::fopen(path.c_str(), "rb"));
    if (!f) fail(Errc::InputMissing, "cannot open " + path);

    PngRead ctx;
    ctx.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    ctx.info = png_create_info_struct(ctx.png);
    if (!ctx.png || !ctx.info || setjmp(png_jmpbuf(ctx.png)))
        fail(Errc::IoFailure, "png read failed for " + path);

    png_init_io(ctx.png, f.get());
    png_read_info(ctx.png, ctx.info);

    const int depth_bits = png_get_bit_depth(ctx.png, ctx.info);
    const int color = png_get_color_type(ctx.png, ctx.info);
    if (depth_bits != 16 || color != PNG_COLOR_TYPE_GRAY)
        fail(Errc::IoFailure, "expected 16-bit gray PNG: " + path);
    png_set_swap(ctx.png);  // PNG is big-endian on disk
    png_read_update_info(ctx.png, ctx.info);

    const int w = png_get_image_width(ctx.png, ctx.info);
    const int h = png_get_image_height(ctx.png, ctx.info);

    std::vector<uint8_t> buf;
    read_rows(ctx.png, ctx.info, buf, static_cast<size_t>(w) * 2, h);

    DepthImage img(w, h, 1);
    const uint16_t* px = reinterpret_cast<const uint16_t*>(buf.data());
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) img.at(x, y) = px[y * w + x] / 1000.0f;
    return img;
}

void write_depth_png(const std::string& path, const DepthImage& depth) {
    FilePtr f(std::fopen(path.c_str(), "wb"));
    if (!f) fail(Errc::IoFailure, "cannot create " + path);

    PngWrite ctx;
    ctx.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    ctx.info = png_create_info_struct(ctx.png);
    if (!ctx.png || !ctx.info || setjmp(png_jmpbuf(ctx.png)))
        fail(Errc::IoFailure, "png write failed for " + path);

    png_init_io(ctx.png, f.get());
    png_set_IHDR(ctx.png, ctx.info, depth.width(), depth.height(), 16, PNG_COLOR_TYPE_GRAY,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(ctx.png, ctx.info);
    png_set_swap(ctx.png);

    std::vector<uint16_t> row(depth.width());
    for (int y = 0; y < depth.height(); ++y) {
        for (int x = 0; x < depth.width(); ++x) {
            const float mm = depth.at(x, y) * 1000.0f;
            row[x] = static_cast<uint16_t>(std::clamp(std::lround(mm), 0L, 65535L));
        }
        png_write_row(ctx.png, reinterpret_cast<png_bytep>(row.data()));
    }
    png_write_end(ctx.png, ctx.info);
}

}  // namespace gaze3d
