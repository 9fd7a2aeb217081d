#include "rsinfer/kernels/kernels.hpp"

#include <cstdlib>

namespace rsinfer::kernels {

bool avx2_available() {
#if RSINFER_HAVE_AVX2_BUILD
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

namespace {

// Decided once at startup; RSINFER_FORCE_SCALAR pins the reference kernels
// (used by the equivalence tests and as an escape hatch).
bool pick_avx2() {
    if (std::getenv("RSINFER_FORCE_SCALAR") != nullptr) return false;
    return avx2_available();
}

const bool g_use_avx2 = pick_avx2();

} // namespace

const char* active_backend() { return g_use_avx2 ? "avx2" : "scalar"; }

void range_mask_and(const double* coords, std::size_t n, double lo, double hi,
                    std::uint64_t* inout) {
#if RSINFER_HAVE_AVX2_BUILD
    if (g_use_avx2) {
        avx2::range_mask_and(coords, n, lo, hi, inout);
        return;
    }
#endif
    scalar::range_mask_and(coords, n, lo, hi, inout);
}

void dot_products(const double* const* dims, std::size_t ndim, std::size_t n,
                  const double* nu, double* out) {
#if RSINFER_HAVE_AVX2_BUILD
    if (g_use_avx2) {
        avx2::dot_products(dims, ndim, n, nu, out);
        return;
    }
#endif
    scalar::dot_products(dims, ndim, n, nu, out);
}

double masked_max(const double* values, const std::uint64_t* mask, std::size_t n) {
#if RSINFER_HAVE_AVX2_BUILD
    if (g_use_avx2) return avx2::masked_max(values, mask, n);
#endif
    return scalar::masked_max(values, mask, n);
}

double min_sq_dist(const double* const* dims, std::size_t ndim, std::size_t n,
                   const double* point) {
#if RSINFER_HAVE_AVX2_BUILD
    if (g_use_avx2) return avx2::min_sq_dist(dims, ndim, n, point);
#endif
    return scalar::min_sq_dist(dims, ndim, n, point);
}

} // namespace rsinfer::kernels
