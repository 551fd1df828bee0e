#include "s3nk/catalog.hpp"

#include <cmath>

#include "s3nk/errors.hpp"
#include "s3nk/frame.hpp"
#include "s3nk/random.hpp"

namespace s3nk {

namespace {

const double kSqrt3 = std::sqrt(3.0);
const double kPi = 3.14159265358979323846;

Quaternion phase(double angle) { return {std::cos(angle), std::sin(angle), 0, 0}; }

const char* family_tag(Family f) {
  switch (f) {
    case Family::F1: return "f1";
    case Family::F2: return "f2";
    case Family::F3: return "f3";
  }
  return "f1";
}

std::vector<InnerTarget> swap_factor(std::vector<InnerTarget> v) {
  for (auto& t : v) t.factor = 1 - t.factor;
  return v;
}

std::vector<RatioTarget> swap_factor(std::vector<RatioTarget> v) {
  for (auto& t : v) t.factor = 1 - t.factor;
  return v;
}

}  // namespace

ImmersionChart chart_p_preserving(Family which, std::shared_ptr<const ProfilePath> path) {
  const Box domain{{{-1, 1}, {-1, 1}, {path->t_begin(), path->t_end()}}};
  ImmersionChart::Eval eval;
  switch (which) {
    case Family::F1:
      eval = [path](const ChartParams& x) {
        const auto [u, v, t] = x;
        return SurfacePoint::normalized(phase(kSqrt3 / 2 * u + v / 2),
                                        path->quaternion_at(t) * phase(kSqrt3 / 2 * u - v / 2));
      };
      break;
    case Family::F2:
      eval = [path](const ChartParams& x) {
        const auto [u, v, t] = x;
        return SurfacePoint::normalized(path->quaternion_at(t) * phase(kSqrt3 / 2 * u - v / 2),
                                        phase(kSqrt3 / 2 * u + v / 2));
      };
      break;
    case Family::F3:
      eval = [path](const ChartParams& x) {
        const auto [u, v, t] = x;
        const Quaternion abar = path->quaternion_at(t).conj();
        return SurfacePoint::normalized(phase(v) * abar, phase(-(kSqrt3 / 2 * u - v / 2)) * abar);
      };
      break;
  }

  ChartExpectation e;
  e.cls = PClass::D1EqualsD1;
  e.theta = 0;
  e.defect_abs = 0;
  const std::vector<InnerTarget> inner{
      {0, 1, 1, 0.75}, {0, 2, 2, 0.25}, {0, 3, 3, 0},      {0, 1, 2, kSqrt3 / 4}, {1, 1, 1, 0.75},
      {1, 2, 2, 0.25}, {1, 3, 3, 0.75}, {1, 1, 2, -kSqrt3 / 4}, {1, 1, 3, 0},     {1, 2, 3, 0},
  };
  const std::vector<RatioTarget> ratios{{0, 2, 1, 1 / kSqrt3}, {1, 2, 1, -1 / kSqrt3}};
  switch (which) {
    case Family::F1:
      e.omega = std::array<double, 3>{-0.5, kSqrt3 / 2, 0};
      e.inner = inner;
      e.ratios = ratios;
      break;
    case Family::F2:
      e.omega = std::array<double, 3>{-0.5, -kSqrt3 / 2, 0};
      e.inner = swap_factor(inner);
      e.ratios = swap_factor(ratios);
      break;
    case Family::F3:
      e.omega = std::array<double, 3>{1, 0, 0};
      break;
  }
  return ImmersionChart(std::string("thm42.") + family_tag(which), domain, std::move(eval), 1, std::move(e));
}

ImmersionChart chart_p_preserving(Family which, const ProfileSpec& profile, const APair& a0) {
  auto path = std::make_shared<const ProfilePath>(integrate_A(profile, a0, 0.0, 2.0, 1e-3));
  return chart_p_preserving(which, std::move(path));
}

ImmersionChart chart_p_to_d2(const Quaternion& A, const Quaternion& E) {
  if (std::abs(A.norm() - 0.5) > 1e-12 || std::abs(E.norm() - 0.5) > 1e-12)
    throw Error(ErrorKind::WrongCoefficientNorm, "A and E must have norm 1/2");
  const double r32 = std::sqrt(1.5), r23 = std::sqrt(2.0 / 3.0), r2 = std::sqrt(2.0), r6 = std::sqrt(6.0);
  auto eval = [=](const ChartParams& x) {
    const auto [u, v, t] = x;
    const double psi1 = r32 * u - v / r2;
    const double psi2 = r23 * t + u / r6 + v / r2;
    const double psi3 = r32 * u + v / r2;
    const double psi4 = r23 * t + u / r6 - v / r2;
    const Quaternion fp{std::cos(psi1), std::sin(psi1), kSqrt3 * std::sin(psi2), kSqrt3 * std::cos(psi2)};
    const Quaternion fq{std::cos(psi3), std::sin(psi3), -kSqrt3 * std::sin(psi4), -kSqrt3 * std::cos(psi4)};
    return SurfacePoint::normalized(A * fp, E * fq);
  };

  ChartExpectation e;
  e.cls = PClass::D1PerpSubcaseD2;
  e.theta = kPi / 2;
  e.a = std::array<double, 4>{1, 0, 0, 0};
  e.defect_abs = 0;
  for (int f = 0; f < 2; ++f) {
    for (int m = 1; m <= 3; ++m) e.inner.push_back({f, m, m, 0.5});
    e.inner.push_back({f, 1, 3, 0.25});
    e.inner.push_back({f, 1, 2, 0});
  }
  e.inner.push_back({0, 2, 3, kSqrt3 / 4});
  e.inner.push_back({1, 2, 3, -kSqrt3 / 4});
  e.coeffs = {{'h', 1, 1, 3, -1 / kSqrt3}, {'h', 2, 3, 2, -1 / (2 * kSqrt3)}};
  const Box domain{{{-1, 1}, {-1, 1}, {-1, 1}}};
  return ImmersionChart("thm52", domain, std::move(eval), 1, std::move(e));
}

ImmersionChart chart_p_to_d3(Family which) {
  const Quaternion c{kSqrt3 / 2, 0.5, 0, 0};
  ImmersionChart::Eval eval;
  double t = 0;
  int orientation = 1;
  switch (which) {
    case Family::F1:
      eval = [c](const ChartParams& x) {
        const Quaternion u = qexp({x[0], x[1], x[2]});
        return SurfacePoint::normalized(u * c * u.conj(), u.conj());
      };
      t = kPi / 3;
      break;
    case Family::F2:
      eval = [c](const ChartParams& x) {
        const Quaternion u = qexp({x[0], x[1], x[2]});
        return SurfacePoint::normalized(u.conj(), u * c * u.conj());
      };
      t = 2 * kPi / 3;
      orientation = -1;
      break;
    case Family::F3:
      eval = [c](const ChartParams& x) {
        const Quaternion u = qexp({x[0], x[1], x[2]});
        return SurfacePoint::normalized(u, u * c);
      };
      t = 0;
      orientation = -1;
      break;
  }
  ChartExpectation e;
  e.cls = PClass::D1PerpSubcaseD3;
  e.theta = kPi / 2;
  e.a = std::array<double, 4>{0, 0, std::cos(t), std::sin(t)};
  e.branch_t = t;
  e.defect_abs = 2 / kSqrt3;
  e.h_trace = 2 * std::cos(3 * t) / kSqrt3;
  const Box domain{{{-0.6, 0.6}, {-0.6, 0.6}, {-0.6, 0.6}}};
  return ImmersionChart(std::string("cor.") + family_tag(which), domain, std::move(eval), orientation, std::move(e));
}

ImmersionChart transform_chart(const ImmersionChart& chart, const Isometry& iso) {
  auto inner = chart.evaluator();
  auto eval = [inner, iso](const ChartParams& x) { return iso.apply(inner(x)); };

  ChartExpectation e = chart.expect();
  std::string tag = "Fabc";
  if (iso.kind() != Isometry::Kind::Fabc) {
    const bool f1 = iso.kind() == Isometry::Kind::SwapFactors;
    tag = f1 ? "F1" : "F2";
    AngleData ang;
    ang.theta = e.theta;
    if (e.a) ang.a = *e.a;
    if (e.omega) ang.omega = *e.omega;
    const AngleData moved = transform_angles(ang, iso.kind());
    if (e.omega) e.omega = moved.omega;
    // Only the F1 law for a is reliable; see transform_angles.
    if (e.a && f1)
      e.a = moved.a;
    else
      e.a.reset();
    e.branch_t.reset();
    e.h_trace.reset();
    e.inner.clear();
    e.ratios.clear();
    e.coeffs.clear();
  }
  const int orientation = iso.anti_holomorphic() ? -chart.orientation() : chart.orientation();
  return ImmersionChart(tag + "(" + chart.name() + ")", chart.domain(), std::move(eval), orientation, std::move(e));
}

ImmersionChart cr_plane_chart(std::uint64_t seed) {
  Sampler rng(seed);
  const SurfacePoint base = rng.point();
  TangentVector e1 = rng.tangent(base);
  e1 = (1 / g_norm(e1)) * e1;
  const TangentVector e2 = apply_J(e1);
  TangentVector e3 = rng.tangent(base);
  e3 = e3 - metric_g(e3, e1) * e1 - metric_g(e3, e2) * e2;
  e3 = (1 / g_norm(e3)) * e3;
  const std::array<TangentVector, 3> es{e1, e2, e3};
  auto eval = [base, es](const ChartParams& x) {
    ImaginaryQuaternion a, b;
    for (int m = 0; m < 3; ++m) {
      a += x[m] * es[m].alpha;
      b += x[m] * es[m].beta;
    }
    return SurfacePoint::normalized(base.p() * qexp(a), base.q() * qexp(b));
  };
  const Box domain{{{-0.5, 0.5}, {-0.5, 0.5}, {-0.5, 0.5}}};
  return ImmersionChart("crplane." + std::to_string(seed), domain, std::move(eval), 1, ChartExpectation{});
}

std::vector<std::string> chart_ids(bool with_custom) {
  std::vector<std::string> ids;
  for (const char* f : {"f1", "f2", "f3"}) {
    ids.push_back(std::string("thm42.") + f);
    ids.push_back(std::string("thm42.") + f + ".linear");
    ids.push_back(std::string("thm42.") + f + ".sine");
    if (with_custom) ids.push_back(std::string("thm42.") + f + ".custom");
  }
  ids.push_back("thm52");
  for (int r = 1; r <= 5; ++r) ids.push_back("thm52.r" + std::to_string(r));
  for (const char* f : {"cor.f1", "cor.f2", "cor.f3"}) ids.push_back(f);
  return ids;
}

ImmersionChart make_chart(const std::string& id, const std::optional<ProfileSpec>& custom) {
  auto family = [&](const std::string& tag) -> std::optional<Family> {
    if (tag == "f1") return Family::F1;
    if (tag == "f2") return Family::F2;
    if (tag == "f3") return Family::F3;
    return std::nullopt;
  };

  if (id.rfind("thm42.", 0) == 0) {
    const std::string rest = id.substr(6);
    const auto dot = rest.find('.');
    const auto fam = family(rest.substr(0, dot));
    const std::string variant = dot == std::string::npos ? "" : rest.substr(dot + 1);
    std::optional<ProfileSpec> profile;
    if (variant.empty()) profile = ProfileSpec::zero();
    if (variant == "linear") profile = ProfileSpec::linear(0, 1);
    if (variant == "sine") profile = ProfileSpec::sine(1, 1, 0);
    if (variant == "custom" && custom) profile = *custom;
    if (fam && profile) return chart_p_preserving(*fam, *profile).with_name(id);
  } else if (id == "thm52") {
    return chart_p_to_d2(Quaternion::real(0.5), Quaternion::real(0.5));
  } else if (id.rfind("thm52.r", 0) == 0 && id.size() == 8 && id[7] >= '1' && id[7] <= '5') {
    Sampler rng(5200 + static_cast<std::uint64_t>(id[7] - '0'));
    const Quaternion A = 0.5 * rng.unit_quaternion();
    const Quaternion E = 0.5 * rng.unit_quaternion();
    return chart_p_to_d2(A, E).with_name(id);
  } else if (id.rfind("cor.", 0) == 0) {
    if (const auto fam = family(id.substr(4))) return chart_p_to_d3(*fam);
  }
  throw Error(ErrorKind::UnknownChart, "no chart with id '" + id + "'");
}

}  // namespace s3nk
