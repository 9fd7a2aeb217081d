#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

// Data-parallel inner loops shared by the estimators and the posterior
// Monte-Carlo stage. Each kernel has a scalar reference implementation and,
// on x86-64, an AVX2 variant; the active backend is picked once at runtime
// (override with the RSINFER_FORCE_SCALAR environment variable). The two
// backends are equivalence-tested against each other.
//
// Membership masks are bit vectors: bit k of word k/64 refers to point k.

namespace rsinfer::kernels {

inline std::size_t mask_words(std::size_t n) { return (n + 63) / 64; }

// Name of the backend selected at runtime ("avx2" or "scalar").
const char* active_backend();

// inout &= (lo <= c[k] <= hi), bit-per-point. Bits at k >= n are cleared.
void range_mask_and(const double* c, std::size_t n, double lo, double hi,
                    std::uint64_t* inout);

// out[k] = sum_d nu[d] * dims[d][k].
void dot_products(const double* const* dims, std::size_t ndim, std::size_t n,
                  const double* nu, double* out);

// Max of vals[k] over set bits; -inf when the mask is empty.
double masked_max(const double* vals, const std::uint64_t* mask, std::size_t n);

// Min over points of the squared Euclidean distance to pt.
double min_sq_dist(const double* const* dims, std::size_t ndim, std::size_t n,
                   const double* pt);

// Plain word helpers (64-way parallel already; no SIMD variant).
void mask_fill(std::uint64_t* mask, std::size_t n);  // set bits 0..n-1
bool mask_any_and(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
void mask_and(const std::uint64_t* a, const std::uint64_t* b, std::size_t words,
              std::uint64_t* out);
void mask_or_inplace(std::uint64_t* inout, const std::uint64_t* b, std::size_t words);
std::size_t mask_count(const std::uint64_t* m, std::size_t words);
// True when every set bit of a is also set in b.
bool mask_subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
std::vector<std::uint32_t> mask_to_indices(const std::uint64_t* m, std::size_t n);
void indices_to_mask(const std::uint32_t* idx, std::size_t count, std::size_t n,
                     std::uint64_t* out);

namespace scalar {
void range_mask_and(const double* c, std::size_t n, double lo, double hi,
                    std::uint64_t* inout);
void dot_products(const double* const* dims, std::size_t ndim, std::size_t n,
                  const double* nu, double* out);
double masked_max(const double* vals, const std::uint64_t* mask, std::size_t n);
double min_sq_dist(const double* const* dims, std::size_t ndim, std::size_t n,
                   const double* pt);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define RSINFER_HAVE_AVX2_BUILD 1
namespace avx2 {
void range_mask_and(const double* c, std::size_t n, double lo, double hi,
                    std::uint64_t* inout);
void dot_products(const double* const* dims, std::size_t ndim, std::size_t n,
                  const double* nu, double* out);
double masked_max(const double* vals, const std::uint64_t* mask, std::size_t n);
double min_sq_dist(const double* const* dims, std::size_t ndim, std::size_t n,
                   const double* pt);
}  // namespace avx2
#else
#define RSINFER_HAVE_AVX2_BUILD 0
#endif

// True when the AVX2 backend is compiled in and the CPU supports it.
bool avx2_available();

}  // namespace rsinfer::kernels
