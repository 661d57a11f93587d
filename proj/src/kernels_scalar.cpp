#include <cmath>
#include <limits>

#include "chainkit/kernels.hpp"

namespace chainkit::kernels::scalar {

namespace {

inline double focal_sum(double x, double y, double f1x, double f1y, double f2x, double f2y) {
    const double dx1 = x - f1x;
    const double dy1 = y - f1y;
    const double dx2 = x - f2x;
    const double dy2 = y - f2y;
    return std::sqrt(dx1 * dx1 + dy1 * dy1) + std::sqrt(dx2 * dx2 + dy2 * dy2);
}

}  // namespace

std::size_t focal_count_within(const double* xs, const double* ys, std::size_t n,
                               double f1x, double f1y, double f2x, double f2y, double limit) {
    std::size_t count = 0;
    for (std::size_t j = 0; j < n; ++j) {
        count += focal_sum(xs[j], ys[j], f1x, f1y, f2x, f2y) <= limit;
    }
    return count;
}

std::size_t focal_first_above(const double* xs, const double* ys, std::size_t n,
                              double f1x, double f1y, double f2x, double f2y, double limit) {
    for (std::size_t j = 0; j < n; ++j) {
        if (focal_sum(xs[j], ys[j], f1x, f1y, f2x, f2y) > limit) return j;
    }
    return npos;
}

MaxResult focal_max(const double* xs, const double* ys, std::size_t n,
                    double f1x, double f1y, double f2x, double f2y) {
    MaxResult best{-std::numeric_limits<double>::infinity(), npos};
    for (std::size_t j = 0; j < n; ++j) {
        const double s = focal_sum(xs[j], ys[j], f1x, f1y, f2x, f2y);
        if (s > best.value) {
            best.value = s;
            best.index = j;
        }
    }
    return best;
}

}  // namespace chainkit::kernels::scalar
