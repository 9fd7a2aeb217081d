#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace rsinfer {

using Vec = std::vector<double>;

// Absolute tolerance for set-equality and duplicate-point tests.
inline constexpr double kSetTol = 1e-12;
// Mass functions must sum to one within this tolerance or are rejected.
inline constexpr double kMassSumTol = 1e-9;
// Absolute tolerance of quantile bisection on the parameter axis.
inline constexpr double kQuantileTol = 1e-10;
// Quantile truncation for unbounded p-box sampling: u is clamped to
// [kQuantileTrunc, 1 - kQuantileTrunc].
inline constexpr double kQuantileTrunc = 1e-9;

// Bad configuration or input files; the CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Prior and data random sets never intersect (K = 1); exit code 3.
class TotalConflictError : public std::runtime_error {
 public:
  explicit TotalConflictError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure (singular system, divergent iteration); exit code 4.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Sub-seed derivation: derive(master, k) = splitmix64(master + splitmix64(k)).
// Chainable, so components can be re-run in isolation yet reproducibly.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return splitmix64(master + splitmix64(stream));
}

// Named seed streams used by the pipeline (documented in the README).
namespace seed_stream {
inline constexpr std::uint64_t kMcmcChain = 1;
inline constexpr std::uint64_t kMcmcTuning = 2;
inline constexpr std::uint64_t kPriorRealizations = 3;
inline constexpr std::uint64_t kNoiseDraws = 4;
inline constexpr std::uint64_t kChainInit = 5;
inline constexpr std::uint64_t kMseReference = 6;
inline constexpr std::uint64_t kMseReplication = 7;
inline constexpr std::uint64_t kHausdorffDraw = 8;
inline constexpr std::uint64_t kPriorBundle = 9;
}  // namespace seed_stream

// Deterministic RNG. std::mt19937_64 has a portable output sequence; the
// distributions below are hand-rolled because the std:: ones are not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // Uniform in [0, 1).
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Standard normal via Box-Muller.
  double normal() {
    const double u1 = 1.0 - uniform01();  // (0, 1]
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
  }

  std::uint64_t next_u64() { return eng_(); }

 private:
  static constexpr double kPi = 3.14159265358979323846;
  std::mt19937_64 eng_;
};

}  // namespace rsinfer
