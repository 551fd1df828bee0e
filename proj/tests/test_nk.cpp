#include <doctest.h>

#include <cmath>

#include "s3nk/errors.hpp"
#include "s3nk/nk.hpp"
#include "s3nk/random.hpp"

using namespace s3nk;

namespace {

const double kS3 = std::sqrt(3.0);
const ImaginaryQuaternion I{1, 0, 0}, Jq{0, 1, 0}, K{0, 0, 1}, O{};
const SurfacePoint kBase{kOne, kOne};

TangentVector at_base(const ImaginaryQuaternion& a, const ImaginaryQuaternion& b) { return {kBase, a, b}; }

bool near(const TangentVector& a, const TangentVector& b, double tol = 1e-15) { return max_abs_diff(a, b) <= tol; }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no s3nk::Error thrown");
  return ErrorKind::IoFailure;
}

// (nabla-tilde_X J) Y for a left-invariant Y, from the numerical ambient derivative.
TangentVector numeric_nabla_J(const TangentVector& x, const TangentVector& y) {
  const auto field = [&](const SurfacePoint& b) { return TangentVector{b, y.alpha, y.beta}; };
  const auto jfield = [&](const SurfacePoint& b) { return apply_J(TangentVector{b, y.alpha, y.beta}); };
  const TangentVector jy = apply_J(y);
  const TangentVector d_jy = euclid_to_nk(numeric_euclid_derivative(x, jfield), x, jy);
  const TangentVector d_y = euclid_to_nk(numeric_euclid_derivative(x, field), x, y);
  return d_jy - apply_J(d_y);
}

}  // namespace

TEST_SUITE("nk") {

TEST_CASE("surface points") {
  CHECK(kind_of([] { SurfacePoint(2.0 * kOne, kOne); }) == ErrorKind::NotOnManifold);
  const SurfacePoint p = SurfacePoint::normalized({1, 1, 0, 0}, {0, 0, 3, 0});
  CHECK(std::abs(p.p().norm() - 1) < 1e-15);
  CHECK(same_point(p, p));
}

TEST_CASE("tangent arithmetic checks the base point") {
  const SurfacePoint other{kI, kOne};
  const TangentVector a = at_base(I, O), b{other, I, O};
  CHECK(kind_of([&] { (void)(a + b); }) == ErrorKind::BasePointMismatch);
  CHECK(kind_of([&] { (void)metric_g(a, b); }) == ErrorKind::BasePointMismatch);
  CHECK(kind_of([&] { (void)tensor_G(a, b); }) == ErrorKind::BasePointMismatch);
}

TEST_CASE("almost complex structure values") {
  CHECK(near(apply_J(at_base(I, O)), at_base(-I / kS3, -2.0 * I / kS3)));
  CHECK(near(apply_J(at_base(I, I)), at_base(I / kS3, -I / kS3)));
  const TangentVector z = at_base(Jq, K);
  CHECK(near(apply_J(apply_J(z)), -z, 1e-15));
}

TEST_CASE("product structure and Q values") {
  CHECK(near(apply_P(at_base(I, Jq)), at_base(Jq, I)));
  const TangentVector z = at_base(I, O);
  CHECK(near(apply_P(apply_J(z)), at_base(-2.0 * I / kS3, -I / kS3), 1e-15));
  CHECK(near(apply_J(apply_P(z)), at_base(2.0 * I / kS3, I / kS3), 1e-15));
  CHECK(near(apply_Q(at_base(I, Jq)), at_base(-I, Jq)));
  const TangentVector qj = apply_Q(apply_J(z));
  CHECK(near(qj, at_base(I / kS3, -2.0 * I / kS3), 1e-15));
  CHECK(near(qj, (1.0 / kS3) * (z - 2.0 * apply_P(z)), 1e-15));
}

TEST_CASE("metric values") {
  CHECK(metric_g(at_base(I, O), at_base(I, O)) == doctest::Approx(4.0 / 3).epsilon(1e-15));
  CHECK(metric_g(at_base(I, -I), at_base(I, -I)) == doctest::Approx(4.0).epsilon(1e-15));
  const TangentVector z = at_base(I, O);
  CHECK(metric_g(z, apply_P(z)) == doctest::Approx(-2.0 / 3).epsilon(1e-15));
  CHECK(euclid_inner(z, z) == 1.0);
  CHECK(euclid_inner(at_base(Jq, K), at_base(K, Jq)) == 0.0);
}

TEST_CASE("metric agrees with the averaged Euclidean product") {
  Sampler s(11);
  for (int n = 0; n < 50; ++n) {
    const SurfacePoint x = s.point();
    const TangentVector z = s.tangent(x), w = s.tangent(x);
    const double avg = 0.5 * (euclid_inner(z, w) + euclid_inner(apply_J(z), apply_J(w)));
    CHECK(std::abs(metric_g(z, w) - avg) < 1e-14);
    CHECK(std::abs(euclid_inner(z, w) - metric_g(z, w) - 0.5 * metric_g(z, apply_P(w))) < 1e-14);
  }
}

TEST_CASE("G value and skew-symmetry") {
  const TangentVector g = tensor_G(at_base(I, O), at_base(O, Jq));
  const double c = 2.0 / (3.0 * kS3);
  CHECK(near(g, at_base(c * K, -c * K), 1e-15));
  Sampler s(3);
  const SurfacePoint x = s.point();
  const TangentVector a = s.tangent(x), b = s.tangent(x);
  CHECK(max_abs(tensor_G(a, a)) < 1e-15);
  CHECK(max_abs(tensor_G(a, apply_J(a))) < 1e-15);
  CHECK(max_abs(tensor_G(a, b) + tensor_G(b, a)) < 1e-15);
}

TEST_CASE("G equals the covariant derivative of J") {
  Sampler s(5);
  for (int n = 0; n < 5; ++n) {
    const SurfacePoint x = s.point();
    const TangentVector a = s.tangent(x), b = s.tangent(x);
    CHECK(max_abs(numeric_nabla_J(a, b) - tensor_G(a, b)) < 1e-7);
    CHECK(max_abs(numeric_nabla_J(a, a)) < 1e-7);
  }
}

TEST_CASE("quartic identity for G: only the standard pattern holds") {
  Sampler s(17);
  double standard = 0, sign_variant = 0, printed_variant = 0;
  for (int n = 0; n < 20; ++n) {
    const SurfacePoint x = s.point();
    const TangentVector X = s.tangent(x), Y = s.tangent(x), Z = s.tangent(x), W = s.tangent(x);
    const auto g = metric_g;
    const TangentVector JX = apply_J(X), JY = apply_J(Y), JZ = apply_J(Z);
    const double lhs = g(tensor_G(X, Y), tensor_G(Z, W));
    const double std_rhs = (g(X, Z) * g(Y, W) - g(X, W) * g(Y, Z) - g(JX, Z) * g(JY, W) + g(JX, W) * g(JY, Z)) / 3;
    const double sign_rhs = (g(X, Z) * g(Y, W) - g(X, W) * g(Y, Z) + g(JX, Z) * g(JY, W) - g(JX, W) * g(JZ, Y)) / 3;
    // As printed, with the malformed g(JX,Z)JY term read as g(JX,Z)g(JY,W).
    const double printed_rhs = (g(X, Y) * g(Y, W) - g(X, W) * g(Y, Z) + g(JX, Z) * g(JY, W) - g(JX, W) * g(JZ, Y)) / 3;
    standard = std::max(standard, std::abs(lhs - std_rhs));
    sign_variant = std::max(sign_variant, std::abs(lhs - sign_rhs));
    printed_variant = std::max(printed_variant, std::abs(lhs - printed_rhs));
  }
  CHECK(standard < 1e-13);
  CHECK(sign_variant > 1e-3);
  CHECK(printed_variant > 1e-3);
}

TEST_CASE("curvature spot value and symmetries") {
  const TangentVector x = at_base(I, O), y = at_base(Jq, O);
  CHECK(near(curvature_R(x, y, y), x, 1e-12));
  CHECK(max_abs(curvature_R(x, x, y)) < 1e-15);
  Sampler s(23);
  for (int n = 0; n < 20; ++n) {
    const SurfacePoint b = s.point();
    const TangentVector X = s.tangent(b), Y = s.tangent(b), Z = s.tangent(b), W = s.tangent(b);
    CHECK(max_abs(curvature_R(X, Y, Z) + curvature_R(Y, Z, X) + curvature_R(Z, X, Y)) < 1e-13);
    CHECK(std::abs(metric_g(curvature_R(X, Y, Z), W) + metric_g(curvature_R(X, Y, W), Z)) < 1e-13);
  }
}

TEST_CASE("connection correction") {
  const TangentVector x = at_base(I, O), y = at_base(O, I);
  const TangentVector value = at_base({0.1, 0.2, 0.3}, {-0.4, 0.5, 0.6});
  CHECK(near(euclid_to_nk(value, x, y), value, 1e-15));
}

TEST_CASE("product projections") {
  const auto [u, v] = product_projections(at_base(I, Jq));
  CHECK(max_abs_diff(u.u, kI) == 0.0);
  CHECK(u.v.norm() == 0.0);
  CHECK(max_abs_diff(v.v, kJ) == 0.0);
  CHECK(v.u.norm() == 0.0);
}

TEST_CASE("isometries") {
  CHECK(kind_of([] { Isometry::fabc(2.0 * kOne, kOne, kOne); }) == ErrorKind::NonUnitParameter);

  const SurfacePoint pt{kI, kJ};
  const SurfacePoint img = Isometry::invert_shear().apply(pt);
  CHECK(max_abs_diff(img.p(), -kI) < 1e-15);
  CHECK(max_abs_diff(img.q(), kK) < 1e-15);

  const Isometry id = Isometry::fabc(kOne, kOne, kOne);
  CHECK(same_point(id.apply(pt), pt));

  Sampler s(31);
  const Isometry F = Isometry::fabc(s.unit_quaternion(), s.unit_quaternion(), s.unit_quaternion());
  const Isometry F1 = Isometry::swap_factors(), F2 = Isometry::invert_shear();
  for (int n = 0; n < 10; ++n) {
    const SurfacePoint b = s.point();
    const TangentVector z = s.tangent(b), w = s.tangent(b);
    CHECK(std::abs(metric_g(F.push(z), F.push(w)) - metric_g(z, w)) < 1e-14);
    CHECK(max_abs(apply_P(F.push(z)) - F.push(apply_P(z))) < 1e-14);
    CHECK(max_abs(F1.push(apply_J(z)) + apply_J(F1.push(z))) < 1e-14);
    CHECK(max_abs(F1.push(tensor_G(z, w)) + tensor_G(F1.push(z), F1.push(w))) < 1e-14);
    CHECK(same_point(F1.apply(F1.apply(b)), b));
    // dF2 against a central difference of the point map along the great-circle curve.
    const double h = 1e-5;
    const AmbientVector fd = (0.5 / h) * (to_ambient(F2.apply(point_along(z, h))) -
                                          to_ambient(F2.apply(point_along(z, -h))));
    const TangentVector pushed = F2.push(z);
    CHECK(ambient_norm(fd - to_ambient(pushed)) < 1e-8);
    const TangentVector rhs = F2.push(-0.5 * apply_P(z) + (kS3 / 2) * apply_J(apply_P(z)));
    CHECK(max_abs(apply_P(pushed) - rhs) < 1e-13);
  }
}

}  // TEST_SUITE
