#pragma once

#include <cstddef>
#include <cstdint>

// Focal-sum kernels over structure-of-arrays point data:
//
//     s(j) = |(xs[j], ys[j]) - f1| + |(xs[j], ys[j]) - f2|
//
// Everything hot in the library reduces to one of the three shapes below:
// the brute-force minimum-c scan maximizes s(j) over the interior of a
// vertex pair, and ellipse range counting compares s(j) against a limit.
//
// A scalar reference implementation and an AVX2 variant are provided; the
// active one is selected at runtime (CPU detection, overridable through
// set_impl or the CHAINKIT_KERNEL environment variable). Both variants are
// required to produce bit-identical results: same counts, same indices,
// same max values. The whole project is compiled with -ffp-contract=off and
// the AVX2 code avoids fma so that per-lane arithmetic matches the scalar
// expression exactly.

namespace chainkit::kernels {

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

struct MaxResult {
    double value;       // -inf when n == 0
    std::size_t index;  // first index attaining value; npos when n == 0
};

// Number of points with s(j) <= limit.
std::size_t focal_count_within(const double* xs, const double* ys, std::size_t n,
                               double f1x, double f1y, double f2x, double f2y, double limit);

// First index with s(j) > limit, or npos.
std::size_t focal_first_above(const double* xs, const double* ys, std::size_t n,
                              double f1x, double f1y, double f2x, double f2y, double limit);

// Maximum of s(j), with the first index that attains it.
MaxResult focal_max(const double* xs, const double* ys, std::size_t n,
                    double f1x, double f1y, double f2x, double f2y);

enum class Impl : std::uint8_t { Auto, Scalar, Avx2 };

// Resolved implementation actually dispatched to.
Impl active_impl();
const char* impl_name(Impl impl);

// Force an implementation (Auto re-detects). Throws InvalidParamsError when
// the requested variant is not supported on this CPU. Not thread-safe with
// concurrent kernel calls; intended for startup, tests, and benches.
void set_impl(Impl impl);
bool avx2_supported();

// Reference kernels, always available; the dispatch targets above compare
// against these in the equivalence tests.
namespace scalar {
std::size_t focal_count_within(const double* xs, const double* ys, std::size_t n,
                               double f1x, double f1y, double f2x, double f2y, double limit);
std::size_t focal_first_above(const double* xs, const double* ys, std::size_t n,
                              double f1x, double f1y, double f2x, double f2y, double limit);
MaxResult focal_max(const double* xs, const double* ys, std::size_t n,
                    double f1x, double f1y, double f2x, double f2y);
}  // namespace scalar

namespace avx2 {
// Defined only when built for x86-64; callable after checking avx2_supported().
std::size_t focal_count_within(const double* xs, const double* ys, std::size_t n,
                               double f1x, double f1y, double f2x, double f2y, double limit);
std::size_t focal_first_above(const double* xs, const double* ys, std::size_t n,
                              double f1x, double f1y, double f2x, double f2y, double limit);
MaxResult focal_max(const double* xs, const double* ys, std::size_t n,
                    double f1x, double f1y, double f2x, double f2y);
}  // namespace avx2

}  // namespace chainkit::kernels
