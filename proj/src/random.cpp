#include "s3nk/random.hpp"

#include <cmath>

namespace s3nk {

Quaternion Sampler::unit_quaternion() {
  for (;;) {
    const Quaternion q{uniform(), uniform(), uniform(), uniform()};
    const double n = q.norm();
    if (n > 1e-3 && n <= 1.0) return q / n;
  }
}

SurfacePoint Sampler::point() {
  const auto p = unit_quaternion();
  const auto q = unit_quaternion();
  return SurfacePoint(p, q);
}

TangentVector Sampler::tangent(const SurfacePoint& base) {
  for (;;) {
    Vec6 c;
    double n2 = 0;
    for (auto& v : c) {
      v = uniform();
      n2 += v * v;
    }
    if (std::sqrt(n2) >= 1e-3) return TangentVector::from_coords(base, c);
  }
}

}  // namespace s3nk
