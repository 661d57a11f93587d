// Compiled with -mavx2 only — do not include from other translation units.
//
// Per-lane arithmetic mirrors the scalar kernels operation for operation
// (mul, add, sqrt — no fma), so results are bit-identical to the scalar
// path and the dispatch can switch freely between the two.

#include "chainkit/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <bit>
#include <cmath>
#include <limits>

namespace chainkit::kernels::avx2 {

namespace {

inline double focal_sum1(double x, double y, double f1x, double f1y, double f2x, double f2y) {
    const double dx1 = x - f1x;
    const double dy1 = y - f1y;
    const double dx2 = x - f2x;
    const double dy2 = y - f2y;
    return std::sqrt(dx1 * dx1 + dy1 * dy1) + std::sqrt(dx2 * dx2 + dy2 * dy2);
}

inline __m256d focal_sum4(const double* xs, const double* ys, std::size_t j,
                          __m256d f1x, __m256d f1y, __m256d f2x, __m256d f2y) {
    const __m256d x = _mm256_loadu_pd(xs + j);
    const __m256d y = _mm256_loadu_pd(ys + j);
    const __m256d dx1 = _mm256_sub_pd(x, f1x);
    const __m256d dy1 = _mm256_sub_pd(y, f1y);
    const __m256d dx2 = _mm256_sub_pd(x, f2x);
    const __m256d dy2 = _mm256_sub_pd(y, f2y);
    const __m256d d1 = _mm256_sqrt_pd(
        _mm256_add_pd(_mm256_mul_pd(dx1, dx1), _mm256_mul_pd(dy1, dy1)));
    const __m256d d2 = _mm256_sqrt_pd(
        _mm256_add_pd(_mm256_mul_pd(dx2, dx2), _mm256_mul_pd(dy2, dy2)));
    return _mm256_add_pd(d1, d2);
}

}  // namespace

std::size_t focal_count_within(const double* xs, const double* ys, std::size_t n,
                               double f1x, double f1y, double f2x, double f2y, double limit) {
    const __m256d vf1x = _mm256_set1_pd(f1x), vf1y = _mm256_set1_pd(f1y);
    const __m256d vf2x = _mm256_set1_pd(f2x), vf2y = _mm256_set1_pd(f2y);
    const __m256d vlimit = _mm256_set1_pd(limit);
    std::size_t count = 0;
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        const __m256d s = focal_sum4(xs, ys, j, vf1x, vf1y, vf2x, vf2y);
        const int mask = _mm256_movemask_pd(_mm256_cmp_pd(s, vlimit, _CMP_LE_OQ));
        count += static_cast<std::size_t>(std::popcount(static_cast<unsigned>(mask)));
    }
    for (; j < n; ++j) {
        count += focal_sum1(xs[j], ys[j], f1x, f1y, f2x, f2y) <= limit;
    }
    return count;
}

std::size_t focal_first_above(const double* xs, const double* ys, std::size_t n,
                              double f1x, double f1y, double f2x, double f2y, double limit) {
    const __m256d vf1x = _mm256_set1_pd(f1x), vf1y = _mm256_set1_pd(f1y);
    const __m256d vf2x = _mm256_set1_pd(f2x), vf2y = _mm256_set1_pd(f2y);
    const __m256d vlimit = _mm256_set1_pd(limit);
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        const __m256d s = focal_sum4(xs, ys, j, vf1x, vf1y, vf2x, vf2y);
        const int mask = _mm256_movemask_pd(_mm256_cmp_pd(s, vlimit, _CMP_GT_OQ));
        if (mask != 0) {
            return j + static_cast<std::size_t>(std::countr_zero(static_cast<unsigned>(mask)));
        }
    }
    for (; j < n; ++j) {
        if (focal_sum1(xs[j], ys[j], f1x, f1y, f2x, f2y) > limit) return j;
    }
    return npos;
}

MaxResult focal_max(const double* xs, const double* ys, std::size_t n,
                    double f1x, double f1y, double f2x, double f2y) {
    const __m256d vf1x = _mm256_set1_pd(f1x), vf1y = _mm256_set1_pd(f1y);
    const __m256d vf2x = _mm256_set1_pd(f2x), vf2y = _mm256_set1_pd(f2y);

    MaxResult best{-std::numeric_limits<double>::infinity(), npos};
    std::size_t j = 0;
    if (n >= 4) {
        __m256d vmax = _mm256_set1_pd(-std::numeric_limits<double>::infinity());
        __m256i vidx = _mm256_setzero_si256();
        __m256i cur = _mm256_set_epi64x(3, 2, 1, 0);
        const __m256i step = _mm256_set1_epi64x(4);
        for (; j + 4 <= n; j += 4) {
            const __m256d s = focal_sum4(xs, ys, j, vf1x, vf1y, vf2x, vf2y);
            // strictly-greater update keeps the first index per lane
            const __m256d gt = _mm256_cmp_pd(s, vmax, _CMP_GT_OQ);
            vmax = _mm256_blendv_pd(vmax, s, gt);
            vidx = _mm256_blendv_epi8(vidx, cur, _mm256_castpd_si256(gt));
            cur = _mm256_add_epi64(cur, step);
        }
        alignas(32) double lane_max[4];
        alignas(32) long long lane_idx[4];
        _mm256_store_pd(lane_max, vmax);
        _mm256_store_si256(reinterpret_cast<__m256i*>(lane_idx), vidx);
        for (int lane = 0; lane < 4; ++lane) {
            const auto idx = static_cast<std::size_t>(lane_idx[lane]);
            if (lane_max[lane] > best.value ||
                (lane_max[lane] == best.value && idx < best.index)) {
                best.value = lane_max[lane];
                best.index = idx;
            }
        }
    }
    for (; j < n; ++j) {
        const double s = focal_sum1(xs[j], ys[j], f1x, f1y, f2x, f2y);
        if (s > best.value) {
            best.value = s;
            best.index = j;
        }
    }
    return best;
}

}  // namespace chainkit::kernels::avx2

#endif  // x86-64
