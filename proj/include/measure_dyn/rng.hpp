#pragma once

#include <cstdint>

#include "measure_dyn/normal.hpp"

namespace measure_dyn {

/// Counter-based pseudo-random stream (splitmix64 as a keyed permutation of
/// a counter).  Streams derived via split() are independent and addressable,
/// so Monte-Carlo paths and grid rows can be generated out of order and still
/// reproduce bit-identically for a given root seed.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed) : key_(mix64(seed + kGolden)), ctr_(0) {}

  /// Independent child stream addressed by `stream`.
  SplitRng split(std::uint64_t stream) const {
    SplitRng r(0);
    r.key_ = mix64(key_ ^ mix64(stream * kGolden + kGolden));
    r.ctr_ = 0;
    return r;
  }

  std::uint64_t next_u64() { return mix64(key_ + (++ctr_) * kGolden); }

  /// Uniform in the open interval (0,1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53 + 0x1.0p-54; }

  /// Standard normal via the inverse CDF (monotone in the underlying uniform).
  double normal() { return norm_inv(uniform()); }

 private:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

  static std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t key_;
  std::uint64_t ctr_;
};

}  // namespace measure_dyn
