#pragma once

#include <cstdint>
#include <random>

#include "pfaff/exactmath/rational.hpp"

namespace pfaff {

/// Seeded generator with a fixed integer mapping, so draws are identical
/// across standard library implementations.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  /// Integer uniformly drawn from [lo, hi] (modulo bias is irrelevant here).
  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(gen_() % span);
  }

  /// Rational p/q with |p| <= height and 1 <= q <= height.
  Rational rational(long height) { return Rational(uniform(-height, height), uniform(1, height)); }

  /// Double in [0, 1).
  double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace pfaff
