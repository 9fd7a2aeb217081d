#include "rsinfer/kernels/kernels.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace rsinfer::kernels {

namespace scalar {

void range_mask_and(const double* c, std::size_t n, double lo, double hi,
                    std::uint64_t* inout) {
  const std::size_t words = mask_words(n);
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t m = inout[w];
    if (m == 0) continue;
    const std::size_t base = w * 64;
    const std::size_t end = std::min<std::size_t>(64, n - base);
    std::uint64_t keep = 0;
    for (std::size_t b = 0; b < end; ++b) {
      const double v = c[base + b];
      if (v >= lo && v <= hi) keep |= (std::uint64_t{1} << b);
    }
    inout[w] = m & keep;
  }
}

void dot_products(const double* const* dims, std::size_t ndim, std::size_t n,
                  const double* nu, double* out) {
  for (std::size_t k = 0; k < n; ++k) {
    double s = 0.0;
    for (std::size_t d = 0; d < ndim; ++d) s += nu[d] * dims[d][k];
    out[k] = s;
  }
}

double masked_max(const double* vals, const std::uint64_t* mask, std::size_t n) {
  double best = -std::numeric_limits<double>::infinity();
  const std::size_t words = mask_words(n);
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t m = mask[w];
    while (m != 0) {
      const int b = std::countr_zero(m);
      m &= m - 1;
      const double v = vals[w * 64 + static_cast<std::size_t>(b)];
      if (v > best) best = v;
    }
  }
  return best;
}

double min_sq_dist(const double* const* dims, std::size_t ndim, std::size_t n,
                   const double* pt) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) {
    double s = 0.0;
    for (std::size_t d = 0; d < ndim; ++d) {
      const double diff = dims[d][k] - pt[d];
      s += diff * diff;
    }
    if (s < best) best = s;
  }
  return best;
}

}  // namespace scalar

void mask_fill(std::uint64_t* mask, std::size_t n) {
  const std::size_t words = mask_words(n);
  for (std::size_t w = 0; w < words; ++w) mask[w] = ~std::uint64_t{0};
  if (n % 64 != 0 && words > 0)
    mask[words - 1] = (~std::uint64_t{0}) >> (64 - n % 64);
}

bool mask_any_and(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  for (std::size_t w = 0; w < words; ++w)
    if ((a[w] & b[w]) != 0) return true;
  return false;
}

void mask_and(const std::uint64_t* a, const std::uint64_t* b, std::size_t words,
              std::uint64_t* out) {
  for (std::size_t w = 0; w < words; ++w) out[w] = a[w] & b[w];
}

void mask_or_inplace(std::uint64_t* inout, const std::uint64_t* b, std::size_t words) {
  for (std::size_t w = 0; w < words; ++w) inout[w] |= b[w];
}

std::size_t mask_count(const std::uint64_t* m, std::size_t words) {
  std::size_t c = 0;
  for (std::size_t w = 0; w < words; ++w) c += static_cast<std::size_t>(std::popcount(m[w]));
  return c;
}

bool mask_subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  for (std::size_t w = 0; w < words; ++w)
    if ((a[w] & ~b[w]) != 0) return false;
  return true;
}

std::vector<std::uint32_t> mask_to_indices(const std::uint64_t* m, std::size_t n) {
  std::vector<std::uint32_t> out;
  const std::size_t words = mask_words(n);
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t x = m[w];
    while (x != 0) {
      const int b = std::countr_zero(x);
      x &= x - 1;
      out.push_back(static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(b)));
    }
  }
  return out;
}

void indices_to_mask(const std::uint32_t* idx, std::size_t count, std::size_t n,
                     std::uint64_t* out) {
  const std::size_t words = mask_words(n);
  for (std::size_t w = 0; w < words; ++w) out[w] = 0;
  for (std::size_t i = 0; i < count; ++i)
    out[idx[i] / 64] |= (std::uint64_t{1} << (idx[i] % 64));
}

}  // namespace rsinfer::kernels
