#include "chainkit/kernels.hpp"

#include <cstdlib>
#include <cstring>

#include "chainkit/errors.hpp"

namespace chainkit::kernels {

namespace {

struct Vtable {
    decltype(&scalar::focal_count_within) count;
    decltype(&scalar::focal_first_above) first_above;
    decltype(&scalar::focal_max) max;
};

constexpr Vtable kScalar{&scalar::focal_count_within, &scalar::focal_first_above,
                         &scalar::focal_max};

#if defined(__x86_64__) || defined(_M_X64)
constexpr Vtable kAvx2{&avx2::focal_count_within, &avx2::focal_first_above, &avx2::focal_max};
#endif

Impl g_active = Impl::Auto;
Vtable g_vtable = kScalar;

Impl detect() {
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2")) return Impl::Avx2;
#endif
    return Impl::Scalar;
}

void apply(Impl impl) {
    switch (impl) {
        case Impl::Scalar:
            g_vtable = kScalar;
            break;
        case Impl::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
            g_vtable = kAvx2;
            break;
#else
            throw InvalidParamsError("avx2 kernels not built for this architecture");
#endif
        case Impl::Auto:
            break;
    }
    g_active = impl;
}

struct Init {
    Init() {
        Impl impl = detect();
        if (const char* env = std::getenv("CHAINKIT_KERNEL")) {
            if (std::strcmp(env, "scalar") == 0) impl = Impl::Scalar;
            else if (std::strcmp(env, "avx2") == 0 && avx2_supported()) impl = Impl::Avx2;
        }
        apply(impl);
    }
};
const Init g_init{};

}  // namespace

bool avx2_supported() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Impl active_impl() { return g_active; }

const char* impl_name(Impl impl) {
    switch (impl) {
        case Impl::Scalar: return "scalar";
        case Impl::Avx2: return "avx2";
        case Impl::Auto: return "auto";
    }
    return "?";
}

void set_impl(Impl impl) {
    if (impl == Impl::Auto) {
        apply(detect());
        return;
    }
    if (impl == Impl::Avx2 && !avx2_supported()) {
        throw InvalidParamsError("avx2 kernels not supported on this CPU");
    }
    apply(impl);
}

std::size_t focal_count_within(const double* xs, const double* ys, std::size_t n,
                               double f1x, double f1y, double f2x, double f2y, double limit) {
    return g_vtable.count(xs, ys, n, f1x, f1y, f2x, f2y, limit);
}

std::size_t focal_first_above(const double* xs, const double* ys, std::size_t n,
                              double f1x, double f1y, double f2x, double f2y, double limit) {
    return g_vtable.first_above(xs, ys, n, f1x, f1y, f2x, f2y, limit);
}

MaxResult focal_max(const double* xs, const double* ys, std::size_t n,
                    double f1x, double f1y, double f2x, double f2y) {
    return g_vtable.max(xs, ys, n, f1x, f1y, f2x, f2y);
}

}  // namespace chainkit::kernels
