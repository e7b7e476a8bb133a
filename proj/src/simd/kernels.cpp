// SPDX-License-Identifier: Apache-2.0

#include "gaze3d/simd/kernels.hpp"

namespace gaze3d::simd {

namespace {

bool avx2_supported() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

IsaLevel detect() { return avx2_supported() ? IsaLevel::Avx2 : IsaLevel::Scalar; }

IsaLevel g_isa = detect();

}  // namespace

IsaLevel active_isa() { return g_isa; }

const char* isa_name(IsaLevel l) { return l == IsaLevel::Avx2 ? "avx2" : "scalar"; }

void force_isa(IsaLevel l) {
    if (l == IsaLevel::Avx2 && !avx2_supported()) l = IsaLevel::Scalar;
    g_isa = l;
}

void l2sq_one_to_many_scalar(const float* query, const float* rows, size_t n, size_t dim,
                             float* out) {
    for (size_t i = 0; i < n; ++i) {
        const float* row = rows + i * dim;
        float acc = 0.0f;
        for (size_t j = 0; j < dim; ++j) {
            const float d = query[j] - row[j];
            acc += d * d;
        }
        out[i] = acc;
    }
}

void dist3_sq_batch_scalar(double px, double py, double pz, const double* xs, const double* ys,
                           const double* zs, size_t n, double* out) {
    for (size_t i = 0; i < n; ++i) {
        const double dx = xs[i] - px, dy = ys[i] - py, dz = zs[i] - pz;
        out[i] = dx * dx + dy * dy + dz * dz;
    }
}

void axpy_f32_scalar(float w, const float* row, size_t dim, float* acc) {
    for (size_t j = 0; j < dim; ++j) acc[j] += w * row[j];
}

void l2sq_one_to_many(const float* query, const float* rows, size_t n, size_t dim, float* out) {
#if defined(__x86_64__) || defined(_M_X64)
    if (g_isa == IsaLevel::Avx2) {
        l2sq_one_to_many_avx2(query, rows, n, dim, out);
        return;
    }
#endif
    l2sq_one_to_many_scalar(query, rows, n, dim, out);
}

void dist3_sq_batch(double px, double py, double pz, const double* xs, const double* ys,
                    const double* zs, size_t n, double* out) {
#if defined(__x86_64__) || defined(_M_X64)
    if (g_isa == IsaLevel::Avx2) {
        dist3_sq_batch_avx2(px, py, pz, xs, ys, zs, n, out);
        return;
    }
#endif
    dist3_sq_batch_scalar(px, py, pz, xs, ys, zs, n, out);
}

void axpy_f32(float w, const float* row, size_t dim, float* acc) {
#if defined(__x86_64__) || defined(_M_X64)
    if (g_isa == IsaLevel::Avx2) {
        axpy_f32_avx2(w, row, dim, acc);
        return;
    }
#endif
    axpy_f32_scalar(w, row, dim, acc);
}

}  // namespace gaze3d::simd
