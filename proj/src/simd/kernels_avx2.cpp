// SPDX-License-Identifier: Apache-2.0
//
// AVX2/FMA kernel variants. This translation unit is compiled with
// -mavx2 -mfma; callers reach it only through the runtime dispatch in
// kernels.cpp, so the binary still runs on plain SSE2 machines.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "gaze3d/simd/kernels.hpp"

namespace gaze3d::simd {

namespace {

inline float hsum256(__m256 v) {
    const __m128 lo = _mm256_castps256_ps128(v);
    const __m128 hi = _mm256_extractf128_ps(v, 1);
    __m128 s = _mm_add_ps(lo, hi);
    s = _mm_add_ps(s, _mm_movehl_ps(s, s));
    s = _mm_add_ss(s, _mm_shuffle_ps(s, s, 0x55));
    return _mm_cvtss_f32(s);
}

}  // namespace

void l2sq_one_to_many_avx2(const float* query, const float* rows, size_t n, size_t dim,
                           float* out) {
    const size_t dim8 = dim & ~size_t(7);
    for (size_t i = 0; i < n; ++i) {
        const float* row = rows + i * dim;
        __m256 acc = _mm256_setzero_ps();
        size_t j = 0;
        for (; j < dim8; j += 8) {
            const __m256 d = _mm256_sub_ps(_mm256_loadu_ps(query + j), _mm256_loadu_ps(row + j));
            acc = _mm256_fmadd_ps(d, d, acc);
        }
        float sum = hsum256(acc);
        for (; j < dim; ++j) {
            const float d = query[j] - row[j];
            sum += d * d;
        }
        out[i] = sum;
    }
}

void dist3_sq_batch_avx2(double px, double py, double pz, const double* xs, const double* ys,
                         const double* zs, size_t n, double* out) {
    const __m256d vx = _mm256_set1_pd(px);
    const __m256d vy = _mm256_set1_pd(py);
    const __m256d vz = _mm256_set1_pd(pz);
    const size_t n4 = n & ~size_t(3);
    size_t i = 0;
    for (; i < n4; i += 4) {
        const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs + i), vx);
        const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys + i), vy);
        const __m256d dz = _mm256_sub_pd(_mm256_loadu_pd(zs + i), vz);
        __m256d acc = _mm256_mul_pd(dx, dx);
        acc = _mm256_fmadd_pd(dy, dy, acc);
        acc = _mm256_fmadd_pd(dz, dz, acc);
        _mm256_storeu_pd(out + i, acc);
    }
    for (; i < n; ++i) {
        const double dx = xs[i] - px, dy = ys[i] - py, dz = zs[i] - pz;
        out[i] = dx * dx + dy * dy + dz * dz;
    }
}

void axpy_f32_avx2(float w, const float* row, size_t dim, float* acc) {
    const __m256 vw = _mm256_set1_ps(w);
    const size_t dim8 = dim & ~size_t(7);
    size_t j = 0;
    for (; j < dim8; j += 8) {
        const __m256 a = _mm256_loadu_ps(acc + j);
        _mm256_storeu_ps(acc + j, _mm256_fmadd_ps(vw, _mm256_loadu_ps(row + j), a));
    }
    for (; j < dim; ++j) acc[j] += w * row[j];
}

}  // namespace gaze3d::simd

#endif  // x86_64
