#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace mergeforge {

// splitmix64: tiny, fast, and identical on every platform. All artifact
// randomness flows through this; std::mt19937 / std::normal_distribution are
// avoided because their streams are implementation-defined.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n). Rejection-free modulo is fine here: n is tiny
  // compared with 2^64 in every call site (task counts, index picks).
  std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

  // Box-Muller, one value per call (the spare is cached).
  double next_gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = next_double();
    double u2 = next_double();
    while (u1 <= 0.0) u1 = next_double();
    const double mag = std::sqrt(-2.0 * std::log(u1));
    const double ang = 2.0 * 3.141592653589793238462643383279502884 * u2;
    spare_ = mag * std::sin(ang);
    has_spare_ = true;
    return mag * std::cos(ang);
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return h;
}

// Named sub-stream derivation: (master seed, task index, layer name) map to a
// fixed stream so layer-parallel execution cannot perturb results.
inline SplitMix64 derive_stream(std::uint64_t master_seed, std::uint64_t task_index,
                                std::string_view layer_name) {
  std::uint64_t s = master_seed;
  s ^= 0x9E3779B97F4A7C15ull * (task_index + 1);
  s ^= fnv1a64(layer_name);
  return SplitMix64(s);
}

}  // namespace mergeforge
