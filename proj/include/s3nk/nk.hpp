#pragma once

#include <array>
#include <functional>
#include <utility>

#include "s3nk/quat.hpp"

namespace s3nk {

inline constexpr double kBaseEps = 1e-10;

using Vec6 = std::array<double, 6>;

// A point (p, q) of S3 x S3. Both factors are unit within 1e-10.
class SurfacePoint {
 public:
  SurfacePoint() : p_(kOne), q_(kOne) {}
  // Throws NotOnManifold unless both factors are unit within 1e-10.
  SurfacePoint(const Quaternion& p, const Quaternion& q);
  static SurfacePoint normalized(const Quaternion& p, const Quaternion& q);

  const Quaternion& p() const { return p_; }
  const Quaternion& q() const { return q_; }

 private:
  Quaternion p_, q_;
};

double point_distance(const SurfacePoint& a, const SurfacePoint& b);
bool same_point(const SurfacePoint& a, const SurfacePoint& b, double tol = kBaseEps);

// Z = (p alpha, q beta) at base (p, q).
struct TangentVector {
  SurfacePoint base;
  ImaginaryQuaternion alpha;
  ImaginaryQuaternion beta;

  Vec6 coords() const { return {alpha.x, alpha.y, alpha.z, beta.x, beta.y, beta.z}; }
  static TangentVector from_coords(const SurfacePoint& base, const Vec6& c) {
    return {base, {c[0], c[1], c[2]}, {c[3], c[4], c[5]}};
  }
  TangentVector operator-() const { return {base, -alpha, -beta}; }
};

TangentVector operator+(const TangentVector& a, const TangentVector& b);
TangentVector operator-(const TangentVector& a, const TangentVector& b);
TangentVector operator*(double s, const TangentVector& a);
inline TangentVector operator*(const TangentVector& a, double s) { return s * a; }

// Largest absolute difference of the (alpha, beta) coordinates.
double max_abs_diff(const TangentVector& a, const TangentVector& b);
double max_abs(const TangentVector& a);

// A raw vector of R8 = H x H.
struct AmbientVector {
  Quaternion u;
  Quaternion v;
};

AmbientVector operator+(const AmbientVector& a, const AmbientVector& b);
AmbientVector operator-(const AmbientVector& a, const AmbientVector& b);
AmbientVector operator*(double s, const AmbientVector& a);
double ambient_dot(const AmbientVector& a, const AmbientVector& b);
double ambient_norm(const AmbientVector& a);

AmbientVector to_ambient(const SurfacePoint& x);
AmbientVector to_ambient(const TangentVector& z);
// Projects off the two position normals and reads (alpha, beta) = (Im(p-bar u), Im(q-bar v)).
TangentVector tangent_part(const SurfacePoint& base, const AmbientVector& w);

TangentVector apply_J(const TangentVector& z);
TangentVector apply_P(const TangentVector& z);
TangentVector apply_Q(const TangentVector& z);

double metric_g(const TangentVector& z, const TangentVector& w);
double euclid_inner(const TangentVector& z, const TangentVector& w);
inline double g_norm(const TangentVector& z) { return std::sqrt(metric_g(z, z)); }

TangentVector tensor_G(const TangentVector& x, const TangentVector& y);
TangentVector curvature_R(const TangentVector& x, const TangentVector& y, const TangentVector& z);

// nabla-tilde_X Y from the projected Euclidean derivative nabla^E_X Y.
TangentVector euclid_to_nk(const TangentVector& value_e, const TangentVector& x, const TangentVector& y);

std::pair<AmbientVector, AmbientVector> product_projections(const TangentVector& z);

// Point reached along the product of great circles (p exp(s alpha), q exp(s beta)).
SurfacePoint point_along(const TangentVector& z, double s);

using TangentField = std::function<TangentVector(const SurfacePoint&)>;

// Tangential part of the R8 derivative of a vector field along X, by central differences
// with one Richardson level. The field is sampled on the curve point_along(X, s).
TangentVector numeric_euclid_derivative(const TangentVector& x, const TangentField& field, double h = 1e-5);

class Isometry {
 public:
  enum class Kind { Fabc, SwapFactors, InvertShear };

  // F_abc(p, q) = (a p c-bar, b q c-bar). Throws NonUnitParameter.
  static Isometry fabc(const Quaternion& a, const Quaternion& b, const Quaternion& c);
  // F1(p, q) = (q, p).
  static Isometry swap_factors();
  // F2(p, q) = (p-bar, q p-bar).
  static Isometry invert_shear();

  Kind kind() const { return kind_; }
  SurfacePoint apply(const SurfacePoint& x) const;
  TangentVector push(const TangentVector& z) const;
  // F1 and F2 satisfy dF J = -J dF.
  bool anti_holomorphic() const { return kind_ != Kind::Fabc; }

 private:
  Isometry(Kind kind, Quaternion a, Quaternion b, Quaternion c) : kind_(kind), a_(a), b_(b), c_(c) {}
  Kind kind_;
  Quaternion a_, b_, c_;
};

}  // namespace s3nk
