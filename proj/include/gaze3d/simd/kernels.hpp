// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>

namespace gaze3d::simd {

// Arithmetic inner loops with a scalar reference implementation and an
// AVX2 variant selected once at startup. The scalar kernels stay exported
// for equivalence tests; everything else calls the dispatched entry
// points. Results may differ from the reference by accumulation-order
// rounding only.

enum class IsaLevel { Scalar, Avx2 };

IsaLevel active_isa();
const char* isa_name(IsaLevel);

// Test hook; downgrades to Scalar when the requested level is unsupported.
void force_isa(IsaLevel);

// out[i] = squared L2 distance between `query` and row i of `rows`
// (row-major, `dim` floats per row).
void l2sq_one_to_many(const float* query, const float* rows, size_t n, size_t dim, float* out);
void l2sq_one_to_many_scalar(const float* query, const float* rows, size_t n, size_t dim,
                             float* out);

// out[i] = (xs[i]-px)^2 + (ys[i]-py)^2 + (zs[i]-pz)^2
void dist3_sq_batch(double px, double py, double pz, const double* xs, const double* ys,
                    const double* zs, size_t n, double* out);
void dist3_sq_batch_scalar(double px, double py, double pz, const double* xs, const double* ys,
                           const double* zs, size_t n, double* out);

// acc[j] += w * row[j]  (used by k-means centroid accumulation)
void axpy_f32(float w, const float* row, size_t dim, float* acc);
void axpy_f32_scalar(float w, const float* row, size_t dim, float* acc);

#if defined(__x86_64__) || defined(_M_X64)
void l2sq_one_to_many_avx2(const float* query, const float* rows, size_t n, size_t dim,
                           float* out);
void dist3_sq_batch_avx2(double px, double py, double pz, const double* xs, const double* ys,
                         const double* zs, size_t n, double* out);
void axpy_f32_avx2(float w, const float* row, size_t dim, float* acc);
#endif

}  // namespace gaze3d::simd
