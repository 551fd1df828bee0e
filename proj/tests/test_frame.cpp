#include <doctest.h>

#include <cmath>

#include "s3nk/catalog.hpp"
#include "s3nk/errors.hpp"
#include "s3nk/frame.hpp"
#include "s3nk/random.hpp"

using namespace s3nk;

namespace {

const double kS3 = std::sqrt(3.0);

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no s3nk::Error thrown");
  return ErrorKind::IoFailure;
}

double g_component(const TangentVector& v, const TangentVector& e) { return metric_g(v, e); }

}  // namespace

TEST_SUITE("frame") {

TEST_CASE("pushforward of the first factor phase") {
  const ImmersionChart c = make_chart("thm42.f1");
  const Pushforward pv = numeric_pushforward(c, {0, 0, 1}, {0, 1, 0});
  CHECK(std::abs(pv.vec.alpha.x - 0.5) < 1e-9);
  CHECK(std::abs(pv.vec.alpha.y) < 1e-9);
  CHECK(std::abs(pv.vec.alpha.z) < 1e-9);
  CHECK(pv.tangency_residual < 1e-8);
  const Pushforward pu = numeric_pushforward(c, {0, 0, 1}, {1, 0, 0});
  CHECK(std::abs(pu.vec.alpha.x - kS3 / 2) < 1e-9);
}

TEST_CASE("pushforward errors") {
  const ImmersionChart c = make_chart("thm42.f1");
  CHECK(kind_of([&] { numeric_pushforward(c, {0, 0, 1}, {0, 0, 0}); }) == ErrorKind::DegenerateDirection);
  CHECK(kind_of([&] { numeric_pushforward(c, {1.0, 0, 1}, {1, 0, 0}); }) == ErrorKind::DomainBoundary);
  CHECK(kind_of([&] { numeric_pushforward(c, {0, 0, 0}, {1, 0, 0}); }) == ErrorKind::DomainBoundary);
}

TEST_CASE("central differences converge at second order") {
  for (const char* id : {"thm42.f1.sine", "thm52", "cor.f2"}) {
    const ImmersionChart c = make_chart(id);
    const ChartParams x = interior_grid(c.domain(), 3)[13];
    for (const ChartParams dir : {ChartParams{1, 0, 0}, ChartParams{0.3, -0.5, 0.8}}) {
      const double h = 2e-2;
      const TangentVector d1 = central_difference(c, x, dir, h);
      const TangentVector d2 = central_difference(c, x, dir, h / 2);
      const TangentVector d4 = central_difference(c, x, dir, h / 4);
      const double ratio = max_abs_diff(d1, d2) / max_abs_diff(d2, d4);
      INFO(id);
      CHECK(ratio >= 3.5);
    }
  }
}

TEST_CASE("totally real plane is not a proper CR plane") {
  const SurfacePoint b{kOne, kOne};
  const std::array<TangentVector, 3> basis{TangentVector{b, {1, 0, 0}, {}}, TangentVector{b, {0, 1, 0}, {}},
                                           TangentVector{b, {0, 0, 1}, {}}};
  CHECK(kind_of([&] { cr_split(basis); }) == ErrorKind::NotProperCR);
}

TEST_CASE("CR split on catalog charts") {
  for (const auto& id : chart_ids()) {
    const ImmersionChart c = make_chart(id);
    for (const ChartParams& x : interior_grid(c.domain(), 2)) {
      const CrSplit s = cr_split(coordinate_pushforwards(c, x), c.orientation());
      INFO(id);
      CHECK(s.cr_residual < 1e-7);
      CHECK(std::abs(metric_g(s.e3, s.e1)) < 1e-10);
      CHECK(std::abs(metric_g(s.e3, s.e2)) < 1e-10);
      CHECK(max_abs_diff(s.e2, apply_J(s.e1)) < 1e-12);
    }
  }
}

TEST_CASE("gauge-fixed E1 does not depend on the input D1 basis") {
  for (const char* id : {"thm52", "thm42.f2.linear"}) {
    const ImmersionChart c = make_chart(id);
    const ChartParams x = interior_grid(c.domain(), 3)[5];
    const CrSplit s = cr_split(coordinate_pushforwards(c, x), c.orientation());
    const FrameSample ref = build_frame(s);
    for (double phi : {0.3, 1.1, 2.5, -2.0}) {
      CrSplit r = s;
      r.e1 = std::cos(phi) * s.e1 + std::sin(phi) * s.e2;
      r.e2 = apply_J(r.e1);
      const FrameSample fr = build_frame(r);
      INFO(id << " phi=" << phi);
      const double d = std::min(max_abs_diff(fr.E[0], ref.E[0]), max_abs_diff(fr.E[0], -ref.E[0]));
      CHECK(d < 1e-12);
    }
  }
}

TEST_CASE("frame relations and the G table") {
  Sampler rng(77);
  for (const auto& id : chart_ids()) {
    const ImmersionChart c = make_chart(id);
    const Box& b = c.domain();
    for (int n = 0; n < 3; ++n) {
      ChartParams x;
      for (int m = 0; m < 3; ++m) {
        const double w = b[m].hi - b[m].lo;
        x[m] = rng.uniform(b[m].lo + 0.1 * w, b[m].hi - 0.1 * w);
      }
      const FrameSample fr = frame_at(c, x);
      INFO(id);
      CHECK(orthonormality_residual(fr) < 1e-12);
      CHECK(frame_relation_residual(fr) < 1e-12);
      CHECK(g_table_residual(fr) < 1e-7);
      // E6 = -J E5, G(E1,E2) = 0, G(E3,E4) = 0, sqrt3 G(E1,E3) = E5
      CHECK(max_abs_diff(fr.E[5], -apply_J(fr.E[4])) < 1e-12);
      CHECK(g_norm(tensor_G(fr.E[0], fr.E[1])) < 1e-12);
      CHECK(g_norm(tensor_G(fr.E[2], fr.E[3])) < 1e-12);
      CHECK(max_abs_diff(kS3 * tensor_G(fr.E[0], fr.E[2]), fr.E[4]) < 1e-12);
    }
  }
}

TEST_CASE("P in the adapted frame") {
  Sampler rng(5);
  for (int n = 0; n < 20; ++n) {
    const double theta = rng.uniform(0, M_PI / 2);
    std::array<double, 4> a{rng.uniform(), rng.uniform(), rng.uniform(), rng.uniform()};
    double nrm = 0;
    for (double v : a) nrm += v * v;
    for (double& v : a) v /= std::sqrt(nrm);
    const auto M = p_matrix(theta, a);
    // P is a g-symmetric involution: M symmetric and M M = I.
    double sym = 0, inv = 0;
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        sym = std::max(sym, std::abs(M[i][j] - M[j][i]));
        double s = 0;
        for (int k = 0; k < 6; ++k) s += M[i][k] * M[k][j];
        inv = std::max(inv, std::abs(s - (i == j ? 1.0 : 0.0)));
      }
    CHECK(sym < 1e-14);
    CHECK(inv < 1e-14);
    CHECK(M[0][0] == doctest::Approx(std::cos(theta)));
  }
}

TEST_CASE("angle functions of the catalog families") {
  SUBCASE("P D1 = D2") {
    const ImmersionChart c = make_chart("thm52");
    const AngleData ang = extract_angles(frame_at(c, {0.2, -0.3, 0.1}));
    CHECK(std::abs(ang.theta - M_PI / 2) < 1e-6);
    CHECK(std::abs(ang.a[0] - 1) < 1e-5);
    CHECK(std::abs(ang.a[1]) < 1e-5);
    CHECK(std::abs(ang.a[2]) < 1e-5);
    CHECK(std::abs(ang.a[3]) < 1e-5);
    CHECK(classify(ang).cls == PClass::D1PerpSubcaseD2);
  }
  SUBCASE("P D1 = D3") {
    const ImmersionChart c = make_chart("cor.f1");
    const AngleData ang = extract_angles(frame_at(c, {0.1, 0.2, -0.3}));
    CHECK(std::abs(ang.theta - M_PI / 2) < 1e-6);
    CHECK(std::abs(ang.a[2] - 0.5) < 1e-5);
    CHECK(std::abs(ang.a[3] - kS3 / 2) < 1e-5);
    CHECK(classify(ang).cls == PClass::D1PerpSubcaseD3);
  }
  SUBCASE("P D1 = D1") {
    const ImmersionChart c = make_chart("thm42.f1");
    const FrameSample fr = frame_at(c, {0.3, -0.2, 1.2});
    const AngleData ang = extract_angles(fr);
    CHECK(ang.theta < 1e-6);
    CHECK(ang.lifted);
    CHECK(std::abs(ang.omega[0] + 0.5) < 1e-6);
    CHECK(std::abs(ang.omega[1] - kS3 / 2) < 1e-6);
    CHECK(std::abs(ang.omega[2]) < 1e-6);
    CHECK(classify(ang).cls == PClass::D1EqualsD1);
    // omega1 = g(P E3, E3) read directly
    CHECK(std::abs(g_component(apply_P(fr.E[2]), fr.E[2]) + 0.5) < 1e-6);
    CHECK(pe3_on_d3(fr) < 0.9);
  }
}

TEST_CASE("classification boundaries") {
  AngleData a;
  a.theta = 0.3;
  CHECK(classify(a).cls == PClass::Generic);
  a.theta = M_PI / 2;
  a.a = {0.6, 0.0, 0.8, 0.0};
  CHECK(classify(a).cls == PClass::D1PerpMixed);
  a.a = {0.0, 0.0, 0.6, 0.8};
  CHECK(classify(a).cls == PClass::D1PerpSubcaseD3);
  a.theta = 2e-6;
  CHECK(classify(a, 1e-5).cls == PClass::D1EqualsD1);
}

TEST_CASE("non-orthonormal frames are rejected") {
  FrameSample fr = frame_at(make_chart("thm52"), {0, 0, 0});
  fr.E[2] = 1.01 * fr.E[2];
  CHECK(kind_of([&] { extract_angles(fr); }) == ErrorKind::FrameNotOrthonormal);
}

TEST_CASE("second fundamental form values") {
  SUBCASE("P D1 = D2 chart") {
    const CoefficientTable t = coefficients(make_chart("thm52"), {0.1, 0.2, -0.1});
    CHECK(std::abs(t.h(1, 1, 3) + 1 / kS3) < 1e-5);
    CHECK(std::abs(t.h(2, 3, 2) + 1 / (2 * kS3)) < 1e-5);
    CHECK(std::abs(t.h(1, 3, 3) - t.h(2, 3, 2) - 1 / kS3) < 1e-5);
    CHECK(std::abs(t.bracket_defect()) < 1e-5);
  }
  SUBCASE("P D1 = D3 chart") {
    const CoefficientTable t = coefficients(make_chart("cor.f1"), {0.2, -0.1, 0.05});
    const double trace = t.h(1, 1, 1) + t.h(2, 2, 1);
    CHECK(std::abs(trace - 2 * std::cos(M_PI) / kS3) < 1e-5);
    CHECK(std::abs(t.bracket_defect() + trace) < 1e-5);
    CHECK(std::abs(std::abs(t.bracket_defect()) - 2 / kS3) < 1e-5);
    CHECK(std::abs(t.h(1, 3, 3) - t.h(2, 3, 2) - 1 / kS3) < 1e-5);
  }
  SUBCASE("P D1 = D1 chart") {
    const ImmersionChart c = make_chart("thm42.f3.sine");
    CHECK(std::abs(d1_integrability_defect(c, {0.1, 0.3, 0.7})) < 1e-5);
  }
}

TEST_CASE("structure relations on every catalog chart") {
  for (const auto& id : chart_ids()) {
    const ImmersionChart c = make_chart(id);
    const ChartParams x = interior_grid(c.domain(), 3)[7];
    const CoefficientTable t = coefficients(c, x);
    INFO(id);
    CHECK(first_order_relations(t).size() == 18);
    CHECK(normal_relations(t).size() == 3);
    for (const auto& rs : {symmetry_relations(t), first_order_relations(t), normal_relations(t)})
      for (const Relation& r : rs) {
        INFO(r.name);
        CHECK(r.residual < 1e-5);
      }
  }
}

TEST_CASE("bracket defect does not depend on the gauge") {
  const ImmersionChart c = make_chart("cor.f2");
  const ChartParams x{0.1, -0.2, 0.3};
  const double ref = d1_integrability_defect(c, x);
  CoefficientOptions opts;
  opts.gauge.twist = 0.7;
  opts.twist_slope = {0.5, -1.0, 0.25};
  CHECK(std::abs(d1_integrability_defect(c, x, opts) - ref) < 1e-7);
}

TEST_CASE("isometry laws for the angle functions") {
  AngleData in;
  in.theta = M_PI / 2;
  in.a = {1, 0, 0, 0};
  AngleData out = transform_angles(in, Isometry::Kind::SwapFactors);
  CHECK(out.a == std::array<double, 4>{1, 0, 0, 0});
  in.a = {0, 1, 0, 0};
  out = transform_angles(in, Isometry::Kind::SwapFactors);
  CHECK(out.a[1] == -1.0);
  CHECK(out.theta == in.theta);

  in.a = {1, 0, 0, 0};
  out = transform_angles(in, Isometry::Kind::InvertShear, AngleLaw::Printed);
  CHECK(out.a[0] == doctest::Approx(0.5));
  CHECK(out.a[1] == doctest::Approx(kS3 / 2));
  out = transform_angles(in, Isometry::Kind::InvertShear, AngleLaw::SignCorrected);
  CHECK(out.a[0] == doctest::Approx(0.5));
  CHECK(out.a[1] == doctest::Approx(-kS3 / 2));

  // Printed law does not preserve a1^2 + a2^2.
  in.a = {0.6, 0.8, 0, 0};
  out = transform_angles(in, Isometry::Kind::InvertShear, AngleLaw::Printed);
  CHECK(std::abs(out.a[0] * out.a[0] + out.a[1] * out.a[1] - 1) > 0.1);
  out = transform_angles(in, Isometry::Kind::InvertShear, AngleLaw::SignCorrected);
  CHECK(std::abs(out.a[0] * out.a[0] + out.a[1] * out.a[1] - 1) < 1e-15);
}

TEST_CASE("angle laws against direct recomputation on image charts") {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const ImmersionChart c = cr_plane_chart(seed);
    const AngleData ang = extract_angles(frame_at(c, {0, 0, 0}));
    const AngleData f1 = extract_angles(frame_at(transform_chart(c, Isometry::swap_factors()), {0, 0, 0}));
    const AngleData f2 = extract_angles(frame_at(transform_chart(c, Isometry::invert_shear()), {0, 0, 0}));
    const AngleData law1 = transform_angles(ang, Isometry::Kind::SwapFactors);
    const AngleData law2 = transform_angles(ang, Isometry::Kind::InvertShear, AngleLaw::SignCorrected);
    CHECK(std::abs(f1.theta - ang.theta) < 1e-6);
    CHECK(std::abs(f2.theta - ang.theta) < 1e-6);
    // The image frame may pick the opposite E1, which flips (a1, a2).
    const auto close = [](const std::array<double, 4>& x, const std::array<double, 4>& y) {
      double same = 0, flipped = 0;
      for (int m = 0; m < 4; ++m) {
        same = std::max(same, std::abs(x[m] - y[m]));
        flipped = std::max(flipped, std::abs(x[m] - (m < 2 ? -y[m] : y[m])));
      }
      return std::min(same, flipped) < 1e-5;
    };
    CHECK(close(f1.a, law1.a));
    CHECK(close(f2.a, law2.a));
  }
}

}  // TEST_SUITE
