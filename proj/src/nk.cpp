#include "s3nk/nk.hpp"

#include <algorithm>
#include <cmath>

#include "s3nk/errors.hpp"

namespace s3nk {

namespace {

const double kSqrt3 = std::sqrt(3.0);

void require_same_base(const TangentVector& a, const TangentVector& b) {
  if (!same_point(a.base, b.base)) throw Error(ErrorKind::BasePointMismatch, "tangent vectors at different points");
}

bool is_unit(const Quaternion& a, double tol) { return std::abs(a.norm() - 1.0) <= tol; }

}  // namespace

SurfacePoint::SurfacePoint(const Quaternion& p, const Quaternion& q) : p_(p), q_(q) {
  if (!is_unit(p, kBaseEps) || !is_unit(q, kBaseEps))
    throw Error(ErrorKind::NotOnManifold, "point factors are not unit quaternions");
}

SurfacePoint SurfacePoint::normalized(const Quaternion& p, const Quaternion& q) {
  return SurfacePoint(normalize(p), normalize(q));
}

double point_distance(const SurfacePoint& a, const SurfacePoint& b) {
  return std::max(max_abs_diff(a.p(), b.p()), max_abs_diff(a.q(), b.q()));
}

bool same_point(const SurfacePoint& a, const SurfacePoint& b, double tol) { return point_distance(a, b) <= tol; }

TangentVector operator+(const TangentVector& a, const TangentVector& b) {
  require_same_base(a, b);
  return {a.base, a.alpha + b.alpha, a.beta + b.beta};
}

TangentVector operator-(const TangentVector& a, const TangentVector& b) {
  require_same_base(a, b);
  return {a.base, a.alpha - b.alpha, a.beta - b.beta};
}

TangentVector operator*(double s, const TangentVector& a) { return {a.base, s * a.alpha, s * a.beta}; }

double max_abs_diff(const TangentVector& a, const TangentVector& b) {
  return std::max(max_abs_diff(a.alpha, b.alpha), max_abs_diff(a.beta, b.beta));
}

double max_abs(const TangentVector& a) {
  double m = 0;
  for (double c : a.coords()) m = std::max(m, std::abs(c));
  return m;
}

AmbientVector operator+(const AmbientVector& a, const AmbientVector& b) { return {a.u + b.u, a.v + b.v}; }
AmbientVector operator-(const AmbientVector& a, const AmbientVector& b) { return {a.u - b.u, a.v - b.v}; }
AmbientVector operator*(double s, const AmbientVector& a) { return {s * a.u, s * a.v}; }
double ambient_dot(const AmbientVector& a, const AmbientVector& b) { return dot(a.u, b.u) + dot(a.v, b.v); }
double ambient_norm(const AmbientVector& a) { return std::sqrt(ambient_dot(a, a)); }

AmbientVector to_ambient(const SurfacePoint& x) { return {x.p(), x.q()}; }

AmbientVector to_ambient(const TangentVector& z) {
  return {z.base.p() * Quaternion::from_imag(z.alpha), z.base.q() * Quaternion::from_imag(z.beta)};
}

TangentVector tangent_part(const SurfacePoint& base, const AmbientVector& w) {
  return {base, (base.p().conj() * w.u).imag(), (base.q().conj() * w.v).imag()};
}

TangentVector apply_J(const TangentVector& z) {
  return {z.base, (2.0 * z.beta - z.alpha) / kSqrt3, (-2.0 * z.alpha + z.beta) / kSqrt3};
}

TangentVector apply_P(const TangentVector& z) { return {z.base, z.beta, z.alpha}; }

TangentVector apply_Q(const TangentVector& z) { return {z.base, -z.alpha, z.beta}; }

double metric_g(const TangentVector& z, const TangentVector& w) {
  require_same_base(z, w);
  return (4.0 * (im_dot(z.alpha, w.alpha) + im_dot(z.beta, w.beta)) -
          2.0 * (im_dot(z.alpha, w.beta) + im_dot(z.beta, w.alpha))) /
         3.0;
}

double euclid_inner(const TangentVector& z, const TangentVector& w) {
  require_same_base(z, w);
  return im_dot(z.alpha, w.alpha) + im_dot(z.beta, w.beta);
}

TangentVector tensor_G(const TangentVector& x, const TangentVector& y) {
  require_same_base(x, y);
  const double k = 2.0 / (3.0 * kSqrt3);
  const auto& a = x.alpha;
  const auto& b = x.beta;
  const auto& c = y.alpha;
  const auto& d = y.beta;
  const auto alpha = im_cross(b, c) + im_cross(a, d) + im_cross(a, c) - 2.0 * im_cross(b, d);
  const auto beta = -im_cross(a, d) - im_cross(b, c) + 2.0 * im_cross(a, c) - im_cross(b, d);
  return {x.base, k * alpha, k * beta};
}

TangentVector curvature_R(const TangentVector& x, const TangentVector& y, const TangentVector& z) {
  require_same_base(x, y);
  require_same_base(x, z);
  const auto jx = apply_J(x), jy = apply_J(y), jz = apply_J(z);
  const auto px = apply_P(x), py = apply_P(y);
  const auto jpx = apply_J(px), jpy = apply_J(py);
  TangentVector r = (5.0 / 12.0) * (metric_g(y, z) * x - metric_g(x, z) * y);
  r = r + (1.0 / 12.0) * (metric_g(jy, z) * jx - metric_g(jx, z) * jy - 2.0 * metric_g(jx, y) * jz);
  r = r + (1.0 / 3.0) * (metric_g(py, z) * px - metric_g(px, z) * py + metric_g(jpy, z) * jpx -
                         metric_g(jpx, z) * jpy);
  return r;
}

TangentVector euclid_to_nk(const TangentVector& value_e, const TangentVector& x, const TangentVector& y) {
  require_same_base(value_e, x);
  require_same_base(value_e, y);
  const auto corr = apply_J(tensor_G(x, apply_P(y))) + apply_J(tensor_G(y, apply_P(x)));
  return value_e - 0.5 * corr;
}

std::pair<AmbientVector, AmbientVector> product_projections(const TangentVector& z) {
  const auto w = to_ambient(z);
  const auto qw = to_ambient(apply_Q(z));
  return {0.5 * (w - qw), 0.5 * (w + qw)};
}

SurfacePoint point_along(const TangentVector& z, double s) {
  return SurfacePoint::normalized(z.base.p() * qexp(s * z.alpha), z.base.q() * qexp(s * z.beta));
}

TangentVector numeric_euclid_derivative(const TangentVector& x, const TangentField& field, double h) {
  auto sample = [&](double s) { return to_ambient(field(point_along(x, s))); };
  auto central = [&](double step) { return (1.0 / (2.0 * step)) * (sample(step) - sample(-step)); };
  const auto d1 = central(h);
  const auto d2 = central(0.5 * h);
  return tangent_part(x.base, (1.0 / 3.0) * (4.0 * d2 - d1));
}

Isometry Isometry::fabc(const Quaternion& a, const Quaternion& b, const Quaternion& c) {
  for (const auto* u : {&a, &b, &c})
    if (!is_unit(*u, 1e-12)) throw Error(ErrorKind::NonUnitParameter, "F_abc needs unit quaternions a, b, c");
  return Isometry(Kind::Fabc, a, b, c);
}

Isometry Isometry::swap_factors() { return Isometry(Kind::SwapFactors, kOne, kOne, kOne); }

Isometry Isometry::invert_shear() { return Isometry(Kind::InvertShear, kOne, kOne, kOne); }

SurfacePoint Isometry::apply(const SurfacePoint& x) const {
  switch (kind_) {
    case Kind::Fabc: return SurfacePoint::normalized(a_ * x.p() * c_.conj(), b_ * x.q() * c_.conj());
    case Kind::SwapFactors: return SurfacePoint(x.q(), x.p());
    case Kind::InvertShear: return SurfacePoint::normalized(x.p().conj(), x.q() * x.p().conj());
  }
  return x;
}

TangentVector Isometry::push(const TangentVector& z) const {
  const auto base = apply(z.base);
  switch (kind_) {
    case Kind::Fabc: return {base, conjugate_by(c_, z.alpha), conjugate_by(c_, z.beta)};
    case Kind::SwapFactors: return {base, z.beta, z.alpha};
    case Kind::InvertShear: {
      const auto& p = z.base.p();
      return {base, -conjugate_by(p, z.alpha), conjugate_by(p, z.beta - z.alpha)};
    }
  }
  return z;
}

}  // namespace s3nk
