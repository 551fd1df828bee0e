#pragma once

#include <cstdint>
#include <random>

#include "s3nk/nk.hpp"

namespace s3nk {

// Seeded source whose output does not depend on the standard library's distributions.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : eng_(seed) {}

  // Uniform on [lo, hi).
  double uniform(double lo = -1.0, double hi = 1.0) {
    const double u = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

  Quaternion unit_quaternion();
  SurfacePoint point();
  // (alpha, beta) uniform in [-1, 1]^6, rejecting norm < 1e-3.
  TangentVector tangent(const SurfacePoint& base);

 private:
  std::mt19937_64 eng_;
};

}  // namespace s3nk
