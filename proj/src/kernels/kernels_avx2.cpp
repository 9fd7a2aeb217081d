// AVX2 variants of the hot kernels. This translation unit is compiled with
// -mavx2 -mfma; nothing here runs unless dispatch picked the avx2 backend.
// All float inputs are assumed finite (no NaN), which the callers guarantee.

#include "rsinfer/kernels/kernels.hpp"

#if RSINFER_HAVE_AVX2_BUILD

#include <immintrin.h>

#include <limits>

namespace rsinfer::kernels::avx2 {

namespace {

inline double hmax(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    __m128d m = _mm_max_pd(lo, hi);
    m = _mm_max_sd(m, _mm_unpackhi_pd(m, m));
    return _mm_cvtsd_f64(m);
}

inline double hmin(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    __m128d m = _mm_min_pd(lo, hi);
    m = _mm_min_sd(m, _mm_unpackhi_pd(m, m));
    return _mm_cvtsd_f64(m);
}

} // namespace

void range_mask_and(const double* coords, std::size_t n, double lo, double hi,
                    std::uint64_t* inout) {
    const __m256d vlo = _mm256_set1_pd(lo);
    const __m256d vhi = _mm256_set1_pd(hi);
    const std::size_t full_words = n / 64;
    for (std::size_t w = 0; w < full_words; ++w) {
        if (inout[w] == 0) continue;
        const double* base = coords + w * 64;
        std::uint64_t keep = 0;
        for (int g = 0; g < 16; ++g) {
            __m256d v = _mm256_loadu_pd(base + 4 * g);
            __m256d ok = _mm256_and_pd(_mm256_cmp_pd(v, vlo, _CMP_GE_OQ),
                                       _mm256_cmp_pd(v, vhi, _CMP_LE_OQ));
            keep |= static_cast<std::uint64_t>(_mm256_movemask_pd(ok)) << (4 * g);
        }
        inout[w] &= keep;
    }
    if (n % 64 != 0) {
        const std::size_t w = full_words;
        std::uint64_t keep = 0;
        for (std::size_t b = 0; b < n % 64; ++b) {
            const double v = coords[w * 64 + b];
            if (v >= lo && v <= hi) keep |= std::uint64_t{1} << b;
        }
        inout[w] &= keep;
    }
}

void dot_products(const double* const* dims, std::size_t ndim, std::size_t n,
                  const double* nu, double* out) {
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256d acc = _mm256_setzero_pd();
        for (std::size_t d = 0; d < ndim; ++d) {
            acc = _mm256_fmadd_pd(_mm256_set1_pd(nu[d]),
                                  _mm256_loadu_pd(dims[d] + k), acc);
        }
        _mm256_storeu_pd(out + k, acc);
    }
    for (; k < n; ++k) {
        double s = 0.0;
        for (std::size_t d = 0; d < ndim; ++d) s += nu[d] * dims[d][k];
        out[k] = s;
    }
}

double masked_max(const double* values, const std::uint64_t* mask, std::size_t n) {
    const double ninf = -std::numeric_limits<double>::infinity();
    const __m256d vninf = _mm256_set1_pd(ninf);
    const __m256i lane_bit = _mm256_set_epi64x(8, 4, 2, 1);
    __m256d acc = vninf;
    const std::size_t full_words = n / 64;
    for (std::size_t w = 0; w < full_words; ++w) {
        const std::uint64_t m = mask[w];
        if (m == 0) continue;
        const double* base = values + w * 64;
        if (m == ~std::uint64_t{0}) {
            for (int g = 0; g < 16; ++g)
                acc = _mm256_max_pd(acc, _mm256_loadu_pd(base + 4 * g));
        } else {
            for (int g = 0; g < 16; ++g) {
                const auto bits = static_cast<long long>((m >> (4 * g)) & 0xF);
                if (bits == 0) continue;
                __m256i hit = _mm256_cmpeq_epi64(
                    _mm256_and_si256(_mm256_set1_epi64x(bits), lane_bit), lane_bit);
                __m256d v = _mm256_blendv_pd(vninf, _mm256_loadu_pd(base + 4 * g),
                                             _mm256_castsi256_pd(hit));
                acc = _mm256_max_pd(acc, v);
            }
        }
    }
    double best = hmax(acc);
    if (n % 64 != 0) {
        const std::size_t w = full_words;
        for (std::size_t b = 0; b < n % 64; ++b) {
            if ((mask[w] >> b) & 1u) {
                const double v = values[w * 64 + b];
                if (v > best) best = v;
            }
        }
    }
    return best;
}

double min_sq_dist(const double* const* dims, std::size_t ndim, std::size_t n,
                   const double* point) {
    const double inf = std::numeric_limits<double>::infinity();
    __m256d best4 = _mm256_set1_pd(inf);
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256d s = _mm256_setzero_pd();
        for (std::size_t d = 0; d < ndim; ++d) {
            __m256d diff = _mm256_sub_pd(_mm256_loadu_pd(dims[d] + k),
                                         _mm256_set1_pd(point[d]));
            s = _mm256_fmadd_pd(diff, diff, s);
        }
        best4 = _mm256_min_pd(best4, s);
    }
    double best = hmin(best4);
    for (; k < n; ++k) {
        double s = 0.0;
        for (std::size_t d = 0; d < ndim; ++d) {
            const double diff = dims[d][k] - point[d];
            s += diff * diff;
        }
        if (s < best) best = s;
    }
    return best;
}

} // namespace rsinfer::kernels::avx2

#endif // RSINFER_HAVE_AVX2_BUILD
