#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "s3nk/catalog.hpp"
#include "s3nk/errors.hpp"
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

double chart_distance(const ImmersionChart& a, const ImmersionChart& b, int n = 4) {
  double d = 0;
  for (const ChartParams& x : interior_grid(a.domain(), n)) d = std::max(d, point_distance(a(x), b(x)));
  return d;
}

}  // namespace

TEST_SUITE("catalog") {

TEST_CASE("registry") {
  const auto ids = chart_ids();
  for (const char* id : {"thm42.f1", "thm42.f2.linear", "thm42.f3.sine", "thm52", "thm52.r5", "cor.f1", "cor.f3"})
    CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
  CHECK(std::none_of(ids.begin(), ids.end(), [](const std::string& s) { return s.ends_with(".custom"); }));
  const auto with_custom = chart_ids(true);
  CHECK(std::find(with_custom.begin(), with_custom.end(), "thm42.f2.custom") != with_custom.end());
  CHECK(kind_of([] { make_chart("unknown"); }) == ErrorKind::UnknownChart);
  CHECK(kind_of([] { make_chart("thm42.f1.custom"); }) == ErrorKind::UnknownChart);
  CHECK(make_chart("thm42.f1.custom", ProfileSpec::linear(0, 1)).name() == "thm42.f1.custom");
}

TEST_CASE("P-preserving family values") {
  const ImmersionChart f1 = make_chart("thm42.f1");
  const SurfacePoint o = f1({0, 0, 0});
  CHECK(max_abs_diff(o.p(), kOne) < 1e-15);
  CHECK(max_abs_diff(o.q(), kOne) < 1e-15);
  // p = e^{i v/2} along u = 0
  for (double v : {-0.9, 0.4, 1.0}) {
    const Quaternion p = f1({0, v, 0.5}).p();
    CHECK(max_abs_diff(p, {std::cos(v / 2), std::sin(v / 2), 0, 0}) < 1e-15);
  }
  Sampler s(2);
  const ImmersionChart f3 = make_chart("thm42.f3.sine");
  for (int n = 0; n < 20; ++n) {
    const SurfacePoint x = f3({s.uniform(), s.uniform(), s.uniform(0, 2)});
    CHECK(std::abs(x.q().norm() - 1) < 1e-12);
  }
  CHECK(kind_of([&] { f1({0, 0, 3.0}); }) == ErrorKind::ProfileDomainMismatch);
  CHECK(f1.expect().cls == PClass::D1EqualsD1);
}

TEST_CASE("P D1 = D2 chart values") {
  const ImmersionChart c = chart_p_to_d2(0.5 * kOne, 0.5 * kOne);
  const SurfacePoint o = c({0, 0, 0});
  CHECK(max_abs_diff(o.p(), {0.5, 0, 0, kS3 / 2}) < 1e-15);
  CHECK(max_abs_diff(o.q(), {0.5, 0, 0, -kS3 / 2}) < 1e-15);
  CHECK(kind_of([] { chart_p_to_d2(kOne, 0.5 * kOne); }) == ErrorKind::WrongCoefficientNorm);
  CHECK(kind_of([] { chart_p_to_d2(0.5 * kOne, 0.5 * kI + 0.1 * kJ); }) == ErrorKind::WrongCoefficientNorm);
  Sampler s(4);
  const ImmersionChart r = make_chart("thm52.r2");
  for (int n = 0; n < 20; ++n) {
    const SurfacePoint x = r({s.uniform(), s.uniform(), s.uniform()});
    CHECK(std::abs(x.p().norm() - 1) < 1e-12);
    CHECK(std::abs(x.q().norm() - 1) < 1e-12);
  }
  CHECK(c.expect().cls == PClass::D1PerpSubcaseD2);
  CHECK(c.expect().theta == doctest::Approx(M_PI / 2));
}

TEST_CASE("P D1 = D3 chart values") {
  const Quaternion c{kS3 / 2, 0.5, 0, 0};
  const SurfacePoint a = make_chart("cor.f1")({0, 0, 0});
  CHECK(max_abs_diff(a.p(), c) < 1e-15);
  CHECK(max_abs_diff(a.q(), kOne) < 1e-15);
  const SurfacePoint b = make_chart("cor.f3")({0, 0, 0});
  CHECK(max_abs_diff(b.p(), kOne) < 1e-15);
  CHECK(max_abs_diff(b.q(), c) < 1e-15);
  const ChartExpectation& e = make_chart("cor.f2").expect();
  CHECK(e.cls == PClass::D1PerpSubcaseD3);
  REQUIRE(e.branch_t.has_value());
  CHECK(*e.branch_t == doctest::Approx(2 * M_PI / 3));
  REQUIRE(e.defect_abs.has_value());
  CHECK(*e.defect_abs == doctest::Approx(2 / kS3));
}

TEST_CASE("charts related by isometries") {
  const Isometry F1 = Isometry::swap_factors(), F2 = Isometry::invert_shear();
  const ImmersionChart f1 = make_chart("thm42.f1.sine");
  CHECK(chart_distance(transform_chart(f1, F1), make_chart("thm42.f2.sine")) < 1e-15);
  CHECK(chart_distance(transform_chart(transform_chart(f1, F1), F1), f1) == 0.0);
  CHECK(chart_distance(transform_chart(make_chart("cor.f1"), F1), make_chart("cor.f2")) < 1e-14);
  // F2 after F1 takes the first P D1 = D3 chart to the third.
  CHECK(chart_distance(transform_chart(transform_chart(make_chart("cor.f1"), F1), F2), make_chart("cor.f3")) < 1e-14);
  const ImmersionChart g = transform_chart(f1, F2);
  CHECK(g.orientation() == -f1.orientation());
  CHECK(g.name() == "F2(thm42.f1.sine)");
  const ImmersionChart h = transform_chart(f1, Isometry::fabc(kI, kJ, kOne));
  CHECK(h.orientation() == f1.orientation());
}

TEST_CASE("interior grid") {
  const Box b{{{0, 4}, {-1, 1}, {2, 3}}};
  const auto pts = interior_grid(b, 3);
  REQUIRE(pts.size() == 27);
  CHECK(pts[0] == ChartParams{1, -0.5, 2.25});
  CHECK(pts[26] == ChartParams{3, 0.5, 2.75});
  // x1 slowest
  CHECK(pts[1] == ChartParams{1, -0.5, 2.5});
  const ImmersionChart c = make_chart("thm52");
  CHECK(c.contains({0.5, 0.5, 0.5}, 0.4));
  CHECK_FALSE(c.contains({0.5, 0.5, 0.5}, 0.6));
  CHECK(kind_of([&] { c.require_inside({1.0, 0, 0}, 0); }) == ErrorKind::DomainBoundary);
}

}  // TEST_SUITE
