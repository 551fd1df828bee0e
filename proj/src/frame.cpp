#include "s3nk/frame.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "s3nk/errors.hpp"

namespace s3nk {

namespace {

const double kSqrt3 = std::sqrt(3.0);
const double kPi = 3.14159265358979323846;

double max_norm(const ChartParams& d) { return std::max({std::abs(d[0]), std::abs(d[1]), std::abs(d[2])}); }

ChartParams shifted(const ChartParams& x, const ChartParams& dir, double s) {
  return {x[0] + s * dir[0], x[1] + s * dir[1], x[2] + s * dir[2]};
}

AmbientVector chart_difference(const ImmersionChart& chart, const ChartParams& x, const ChartParams& dir, double h) {
  const auto plus = to_ambient(chart(shifted(x, dir, h)));
  const auto minus = to_ambient(chart(shifted(x, dir, -h)));
  return (1.0 / (2.0 * h)) * (plus - minus);
}

// Solves sum_m c_m t_m = v in the least-squares sense of g.
Eigen::Vector3d coords_in(const std::array<TangentVector, 3>& t, const TangentVector& v) {
  Eigen::Matrix3d gram;
  Eigen::Vector3d rhs;
  for (int m = 0; m < 3; ++m) {
    rhs(m) = metric_g(v, t[m]);
    for (int n = 0; n < 3; ++n) gram(m, n) = metric_g(t[m], t[n]);
  }
  return gram.ldlt().solve(rhs);
}

TangentVector unit(const TangentVector& v) { return (1.0 / g_norm(v)) * v; }

TangentVector rotate(const TangentVector& e1, const TangentVector& e2, double phi) {
  return std::cos(phi) * e1 + std::sin(phi) * e2;
}

void complete_frame(FrameSample& fr, const TangentVector& e1, const TangentVector& e3) {
  fr.E[0] = e1;
  fr.E[1] = apply_J(e1);
  fr.E[2] = e3;
  fr.E[3] = apply_J(e3);
  fr.E[4] = kSqrt3 * tensor_G(fr.E[0], fr.E[2]);
  fr.E[5] = kSqrt3 * tensor_G(fr.E[1], fr.E[2]);
}

void negate_e1(FrameSample& fr) {
  for (int i : {0, 1, 4, 5}) fr.E[i] = -fr.E[i];
}

void negate_e3(FrameSample& fr) {
  for (int i : {2, 3, 4, 5}) fr.E[i] = -fr.E[i];
}

}  // namespace

const char* to_string(GaugeMode m) {
  switch (m) {
    case GaugeMode::MaxPE1E1: return "max_g(PE1,E1)";
    case GaugeMode::MaxPE1E3: return "max_g(PE1,E3)";
    case GaugeMode::Degenerate: return "degenerate";
  }
  return "degenerate";
}

TangentVector central_difference(const ImmersionChart& chart, const ChartParams& x, const ChartParams& dir, double h) {
  if (max_norm(dir) == 0) throw Error(ErrorKind::DegenerateDirection, "zero direction");
  chart.require_inside(x, h * max_norm(dir));
  return tangent_part(chart(x), chart_difference(chart, x, dir, h));
}

Pushforward numeric_pushforward(const ImmersionChart& chart, const ChartParams& x, const ChartParams& dir,
                                const FdOptions& fd) {
  if (max_norm(dir) == 0) throw Error(ErrorKind::DegenerateDirection, "zero direction");
  chart.require_inside(x, fd.step * max_norm(dir));
  const auto base = chart(x);
  AmbientVector d = chart_difference(chart, x, dir, fd.step);
  if (fd.richardson) {
    const auto half = chart_difference(chart, x, dir, 0.5 * fd.step);
    d = (1.0 / 3.0) * (4.0 * half - d);
  }
  const double normal = std::max(std::abs(dot(base.p(), d.u)), std::abs(dot(base.q(), d.v)));
  return {tangent_part(base, d), normal};
}

std::array<TangentVector, 3> coordinate_pushforwards(const ImmersionChart& chart, const ChartParams& x,
                                                     const FdOptions& fd) {
  return {numeric_pushforward(chart, x, {1, 0, 0}, fd).vec, numeric_pushforward(chart, x, {0, 1, 0}, fd).vec,
          numeric_pushforward(chart, x, {0, 0, 1}, fd).vec};
}

double gram_determinant(const std::array<TangentVector, 3>& t) {
  Eigen::Matrix3d gram;
  for (int m = 0; m < 3; ++m)
    for (int n = 0; n < 3; ++n) gram(m, n) = metric_g(t[m], t[n]);
  return gram.determinant();
}

CrSplit cr_split(const std::array<TangentVector, 3>& basis, int orientation, double tol, int seed_index) {
  std::array<TangentVector, 3> o = basis;
  for (int m = 0; m < 3; ++m) {
    for (int n = 0; n < m; ++n) o[m] = o[m] - metric_g(o[m], o[n]) * o[n];
    const double len = g_norm(o[m]);
    if (!(len > 1e-12)) throw Error(ErrorKind::DegenerateDirection, "tangent basis is linearly dependent");
    o[m] = (1.0 / len) * o[m];
  }

  Eigen::Matrix3d mj;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) mj(a, b) = metric_g(apply_J(o[b]), o[a]);
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(mj, Eigen::ComputeFullV);
  const auto sv = svd.singularValues();

  CrSplit out{o[0], o[1], o[2], {sv(0), sv(1), sv(2)}, 0, false};
  if (sv(1) < tol) throw Error(ErrorKind::NotProperCR, "tangent space is totally real");
  if (sv(2) > tol) throw Error(ErrorKind::NotProperCR, "tangent space is almost complex");

  const Eigen::Vector3d k = svd.matrixV().col(2);
  TangentVector e3 = unit(k(0) * o[0] + k(1) * o[1] + k(2) * o[2]);

  std::array<double, 3> share{};
  for (int m = 0; m < 3; ++m) {
    const double along = metric_g(basis[m], e3) / g_norm(basis[m]);
    share[m] = 1 - along * along;
  }
  if (seed_index < 0 || seed_index > 2)
    seed_index = static_cast<int>(std::max_element(share.begin(), share.end()) - share.begin());
  const TangentVector& seed = basis[seed_index];
  const TangentVector e1 = unit(seed - metric_g(seed, e3) * e3);
  out.seed_index = seed_index;
  const TangentVector e2 = apply_J(e1);

  for (const auto* e : {&e1, &e2}) {
    TangentVector proj = metric_g(*e, o[0]) * o[0] + metric_g(*e, o[1]) * o[1] + metric_g(*e, o[2]) * o[2];
    out.cr_residual = std::max(out.cr_residual, g_norm(*e - proj));
  }

  Eigen::Matrix3d c;
  const std::array<const TangentVector*, 3> es{&e1, &e2, &e3};
  for (int r = 0; r < 3; ++r) c.row(r) = coords_in(basis, *es[r]).transpose();
  if (orientation * c.determinant() < 0) {
    e3 = -e3;
    out.e3_flipped = true;
  }
  out.e1 = e1;
  out.e2 = e2;
  out.e3 = e3;
  return out;
}

FrameSample build_frame(const CrSplit& split, const GaugePolicy& policy) {
  FrameSample fr;
  fr.base = split.e1.base;
  fr.gauge.e3_flipped = split.e3_flipped;
  fr.gauge.seed_index = split.seed_index;

  const TangentVector& e1 = split.e1;
  const TangentVector e2 = apply_J(e1);
  const TangentVector pe1 = apply_P(e1);
  const double c = metric_g(pe1, e1);
  const double s = metric_g(pe1, e2);
  double phi = 0;
  if (std::hypot(c, s) > policy.eps) {
    fr.gauge.mode = GaugeMode::MaxPE1E1;
    phi = 0.5 * std::atan2(s, c);
  } else {
    const double a = metric_g(pe1, split.e3);
    const double b = metric_g(apply_P(e2), split.e3);
    if (std::hypot(a, b) > policy.eps) {
      fr.gauge.mode = GaugeMode::MaxPE1E3;
      phi = std::atan2(b, a);
    } else {
      fr.gauge.mode = GaugeMode::Degenerate;
      fr.gauge.degenerate = true;
    }
  }
  phi += policy.twist;
  fr.gauge.rotation = phi;
  complete_frame(fr, rotate(e1, e2, phi), split.e3);

  if (policy.fix_sign) {
    const TangentVector p = apply_P(fr.E[0]);
    double key = 0;
    for (double v : {metric_g(p, fr.E[2]), metric_g(p, fr.E[3])}) {
      if (std::abs(v) > policy.eps) {
        key = v;
        break;
      }
    }
    if (key == 0) {
      for (double v : fr.E[0].coords()) {
        if (std::abs(v) > policy.eps) {
          key = v;
          break;
        }
      }
    }
    if (key < 0) {
      negate_e1(fr);
      fr.gauge.e1_flipped = true;
    }
  }
  return fr;
}

FrameSample frame_at(const ImmersionChart& chart, const ChartParams& x, const GaugePolicy& policy,
                     const FdOptions& fd) {
  const auto t = coordinate_pushforwards(chart, x, fd);
  return build_frame(cr_split(t, chart.orientation(), 1e-6, policy.seed_index), policy);
}

double orthonormality_residual(const FrameSample& fr) {
  double r = 0;
  for (int i = 0; i < 6; ++i)
    for (int j = i; j < 6; ++j) r = std::max(r, std::abs(metric_g(fr.E[i], fr.E[j]) - (i == j ? 1.0 : 0.0)));
  return r;
}

double frame_relation_residual(const FrameSample& fr) {
  const auto& E = fr.E;
  return std::max({max_abs_diff(E[1], apply_J(E[0])), max_abs_diff(E[3], apply_J(E[2])),
                   max_abs_diff(E[4], kSqrt3 * tensor_G(E[0], E[2])), max_abs_diff(E[5], kSqrt3 * tensor_G(E[1], E[2])),
                   max_abs_diff(E[5], -apply_J(E[4]))});
}

double g_table_residual(const FrameSample& fr) {
  struct Entry {
    int i, j;
    double c;
    int k;
  };
  const double r = 1.0 / kSqrt3;
  static const Entry table[15] = {
      {1, 2, 0, 0},  {1, 3, r, 5},  {1, 4, r, 6},  {1, 5, -r, 3}, {1, 6, -r, 4},
      {2, 3, r, 6},  {2, 4, -r, 5}, {2, 5, r, 4},  {2, 6, -r, 3}, {3, 4, 0, 0},
      {3, 5, r, 1},  {3, 6, r, 2},  {4, 5, -r, 2}, {4, 6, r, 1},  {5, 6, 0, 0},
  };
  double worst = 0;
  for (const auto& e : table) {
    const auto g = tensor_G(fr.E[e.i - 1], fr.E[e.j - 1]);
    const auto want = e.k == 0 ? 0.0 * g : e.c * fr.E[e.k - 1];
    worst = std::max(worst, max_abs_diff(g, want));
  }
  return worst;
}

std::array<double, 3> omega_from_a(const std::array<double, 4>& a) {
  const auto [a1, a2, a3, a4] = a;
  return {a3 * a3 - a4 * a4 + a2 * a2 - a1 * a1, 2 * (a3 * a4 - a1 * a2), 2 * (a1 * a3 + a2 * a4)};
}

std::array<std::array<double, 6>, 6> p_matrix(double theta, const std::array<double, 4>& a) {
  const auto [a1, a2, a3, a4] = a;
  const double c = std::cos(theta), s = std::sin(theta);
  const double u = -(a1 * a3 + a2 * a4) * (1 + c);
  const double w = (a2 * a3 - a1 * a4) * (c - 1);
  return {{
      {c, 0, a1 * s, a2 * s, a3 * s, a4 * s},
      {0, -c, a2 * s, -a1 * s, -a4 * s, a3 * s},
      {a1 * s, a2 * s, a3 * a3 - a4 * a4 + (a2 * a2 - a1 * a1) * c, 2 * (a3 * a4 - a1 * a2 * c), u, w},
      {a2 * s, -a1 * s, 2 * (a3 * a4 - a1 * a2 * c), a4 * a4 - a3 * a3 + (a1 * a1 - a2 * a2) * c, -w, u},
      {a3 * s, -a4 * s, u, -w, a1 * a1 - a2 * a2 + (a4 * a4 - a3 * a3) * c, 2 * (a1 * a2 - a3 * a4 * c)},
      {a4 * s, a3 * s, w, u, 2 * (a1 * a2 - a3 * a4 * c), a2 * a2 - a1 * a1 + (a3 * a3 - a4 * a4) * c},
  }};
}

AngleData extract_angles(const FrameSample& fr, double eps) {
  if (orthonormality_residual(fr) > 1e-8) throw Error(ErrorKind::FrameNotOrthonormal, "frame is not g-orthonormal");
  const auto& E = fr.E;
  const auto pe1 = apply_P(E[0]);
  const double c = metric_g(pe1, E[0]);
  std::array<double, 4> comp{};
  double s2 = 0;
  for (int k = 0; k < 4; ++k) {
    comp[k] = metric_g(pe1, E[k + 2]);
    s2 += comp[k] * comp[k];
  }
  const double s = std::sqrt(s2);

  AngleData out;
  out.theta = std::clamp(std::atan2(s, c), 0.0, kPi / 2);
  if (s >= eps) {
    for (int k = 0; k < 4; ++k) out.a[k] = comp[k] / s;
    out.omega = omega_from_a(out.a);
  } else {
    const auto pe3 = apply_P(E[2]);
    out.omega = {metric_g(pe3, E[2]), metric_g(pe3, E[3]), -metric_g(pe3, E[4])};
    out.lifted = true;
    const double a4 = std::sqrt(std::max(0.0, (1 - out.omega[0]) / 2));
    if (a4 > eps)
      out.a = {0, out.omega[2] / (2 * a4), out.omega[1] / (2 * a4), a4};
    else
      out.a = {0, 0, 1, 0};
  }

  const auto m = p_matrix(out.theta, out.a);
  for (int j = 0; j < 6; ++j) {
    const auto pe = apply_P(E[j]);
    for (int i = 0; i < 6; ++i)
      out.p_matrix_residual = std::max(out.p_matrix_residual, std::abs(metric_g(pe, E[i]) - m[j][i]));
  }
  return out;
}

ClassResult classify(const AngleData& ang, double tol) {
  ClassResult r;
  r.theta_from_zero = ang.theta;
  r.theta_from_right = std::abs(ang.theta - kPi / 2);
  r.a12 = std::hypot(ang.a[0], ang.a[1]);
  r.a34 = std::hypot(ang.a[2], ang.a[3]);
  if (r.theta_from_zero < tol)
    r.cls = PClass::D1EqualsD1;
  else if (r.theta_from_right < tol && r.a34 < tol)
    r.cls = PClass::D1PerpSubcaseD2;
  else if (r.theta_from_right < tol && r.a12 < tol)
    r.cls = PClass::D1PerpSubcaseD3;
  else if (r.theta_from_right < tol)
    r.cls = PClass::D1PerpMixed;
  else
    r.cls = PClass::Generic;
  return r;
}

double pe3_on_d3(const FrameSample& fr) {
  const auto pe3 = apply_P(fr.E[2]);
  return std::hypot(metric_g(pe3, fr.E[4]), metric_g(pe3, fr.E[5]));
}

namespace {

struct StencilDerivs {
  FrameSample center;
  std::array<TangentVector, 3> t;
  // d[m][j]: ambient derivative of E_{j+1} along the m-th parameter.
  std::array<std::array<AmbientVector, 6>, 3> d;
};

void align_to(FrameSample& fr, const FrameSample& ref, double jump_tol) {
  if (ambient_dot(to_ambient(fr.E[0]), to_ambient(ref.E[0])) < 0) negate_e1(fr);
  if (ambient_dot(to_ambient(fr.E[2]), to_ambient(ref.E[2])) < 0) negate_e3(fr);
  for (int j = 0; j < 6; ++j) {
    if (ambient_norm(to_ambient(fr.E[j]) - to_ambient(ref.E[j])) > jump_tol)
      throw Error(ErrorKind::GaugeDiscontinuity, "frame jumps across the coefficient stencil");
  }
}

StencilDerivs frame_derivatives(const ImmersionChart& chart, const ChartParams& x, const CoefficientOptions& opts) {
  chart.require_inside(x, opts.step + 2 * opts.fd.step);
  StencilDerivs out;
  out.t = coordinate_pushforwards(chart, x, opts.fd);
  GaugePolicy base_policy = opts.gauge;
  auto frame_with_twist = [&](const ChartParams& y) {
    GaugePolicy pol = base_policy;
    for (int m = 0; m < 3; ++m) pol.twist += opts.twist_slope[m] * (y[m] - x[m]);
    return frame_at(chart, y, pol, opts.fd);
  };
  out.center = frame_with_twist(x);
  base_policy.seed_index = out.center.gauge.seed_index;
  const double jump_tol = 100 * opts.step;

  for (int m = 0; m < 3; ++m) {
    ChartParams dir{0, 0, 0};
    dir[m] = 1;
    auto diff = [&](double h) {
      auto plus = frame_with_twist(shifted(x, dir, h));
      auto minus = frame_with_twist(shifted(x, dir, -h));
      align_to(plus, out.center, jump_tol);
      align_to(minus, out.center, jump_tol);
      std::array<AmbientVector, 6> r;
      for (int j = 0; j < 6; ++j) r[j] = (1.0 / (2 * h)) * (to_ambient(plus.E[j]) - to_ambient(minus.E[j]));
      return r;
    };
    auto d = diff(opts.step);
    if (opts.richardson) {
      const auto half = diff(0.5 * opts.step);
      for (int j = 0; j < 6; ++j) d[j] = (1.0 / 3.0) * (4.0 * half[j] - d[j]);
    }
    out.d[m] = d;
  }
  return out;
}

// Ambient directional derivative D_{E_i} E_j.
AmbientVector directional(const StencilDerivs& sd, const Eigen::Vector3d& c, int j) {
  return c(0) * sd.d[0][j] + c(1) * sd.d[1][j] + c(2) * sd.d[2][j];
}

double bracket_defect(const StencilDerivs& sd) {
  const auto& E = sd.center.E;
  const auto c1 = coords_in(sd.t, E[0]);
  const auto c2 = coords_in(sd.t, E[1]);
  const auto br = directional(sd, c1, 1) - directional(sd, c2, 0);
  return metric_g(tangent_part(sd.center.base, br), E[2]);
}

}  // namespace

CoefficientTable coefficients(const ImmersionChart& chart, const ChartParams& x, const CoefficientOptions& opts) {
  const auto sd = frame_derivatives(chart, x, opts);
  const auto& E = sd.center.E;
  CoefficientTable out;
  for (int i = 0; i < 3; ++i) {
    const auto ci = coords_in(sd.t, E[i]);
    for (int j = 0; j < 6; ++j) {
      const auto de = tangent_part(sd.center.base, directional(sd, ci, j));
      const auto nk = euclid_to_nk(de, E[i], E[j]);
      for (int k = 0; k < 6; ++k) out.nab_[i][j][k] = metric_g(nk, E[k]);
    }
  }
  out.bracket_defect_ = bracket_defect(sd);
  return out;
}

double d1_integrability_defect(const ImmersionChart& chart, const ChartParams& x, const CoefficientOptions& opts) {
  return bracket_defect(frame_derivatives(chart, x, opts));
}

std::vector<Relation> symmetry_relations(const CoefficientTable& t) {
  double g = 0, b = 0, h = 0;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k) {
        g = std::max(g, std::abs(t.gamma(i, j, k) + t.gamma(i, k, j)));
        b = std::max(b, std::abs(t.b(i, j, k) + t.b(i, k, j)));
        h = std::max(h, std::abs(t.h(i, j, k) - t.h(j, i, k)));
      }
  return {{"Gamma_ij^k=-Gamma_ik^j", g}, {"b_ij^k=-b_ik^j", b}, {"h_ij^k=h_ji^k", h}};
}

std::vector<Relation> first_order_relations(const CoefficientTable& t) {
  const double r = 1.0 / kSqrt3;
  auto G = [&](int i, int j, int k) { return t.gamma(i, j, k); };
  auto H = [&](int i, int j, int k) { return t.h(i, j, k); };
  auto B = [&](int i, int j, int k) { return t.b(i, j, k); };
  return {
      {"Gamma_11^3=h_12^1", std::abs(G(1, 1, 3) - H(1, 2, 1))},
      {"Gamma_12^3=-h_11^1", std::abs(G(1, 2, 3) + H(1, 1, 1))},
      {"Gamma_21^3=h_22^1", std::abs(G(2, 1, 3) - H(2, 2, 1))},
      {"Gamma_22^3=-h_12^1", std::abs(G(2, 2, 3) + H(1, 2, 1))},
      {"Gamma_31^3=h_23^1", std::abs(G(3, 1, 3) - H(2, 3, 1))},
      {"Gamma_32^3=-h_13^1", std::abs(G(3, 2, 3) + H(1, 3, 1))},
      {"h_11^2=-h_12^3", std::abs(H(1, 1, 2) + H(1, 2, 3))},
      {"h_12^2=h_11^3", std::abs(H(1, 2, 2) - H(1, 1, 3))},
      {"h_13^3=h_23^2+1/sqrt3", std::abs(H(1, 3, 3) - H(2, 3, 2) - r)},
      {"h_22^2=h_12^3", std::abs(H(2, 2, 2) - H(1, 2, 3))},
      {"h_22^3=-h_11^3", std::abs(H(2, 2, 3) + H(1, 1, 3))},
      {"h_23^3=-h_13^2", std::abs(H(2, 3, 3) + H(1, 3, 2))},
      {"b_11^2=h_13^3+1/sqrt3", std::abs(B(1, 1, 2) - H(1, 3, 3) - r)},
      {"b_11^3=-h_13^2", std::abs(B(1, 1, 3) + H(1, 3, 2))},
      {"b_21^2=-h_13^2", std::abs(B(2, 1, 2) + H(1, 3, 2))},
      {"b_21^3=2/sqrt3-h_13^3", std::abs(B(2, 1, 3) + H(1, 3, 3) - 2 * r)},
      {"b_31^2=h_33^3", std::abs(B(3, 1, 2) - H(3, 3, 3))},
      {"b_31^3=-h_33^2", std::abs(B(3, 1, 3) + H(3, 3, 2))},
  };
}

std::vector<Relation> normal_relations(const CoefficientTable& t) {
  auto G = [&](int i, int j, int k) { return t.gamma(i, j, k); };
  return {
      {"b_12^3=Gamma_11^2-Gamma_32^3", std::abs(t.b(1, 2, 3) - G(1, 1, 2) + G(3, 2, 3))},
      {"b_22^3=Gamma_21^2+Gamma_31^3", std::abs(t.b(2, 2, 3) - G(2, 1, 2) - G(3, 1, 3))},
      {"b_32^3=h_33^1+Gamma_31^2", std::abs(t.b(3, 2, 3) - t.h(3, 3, 1) - G(3, 1, 2))},
  };
}

AngleData transform_angles(const AngleData& ang, Isometry::Kind which, AngleLaw law) {
  AngleData out = ang;
  out.p_matrix_residual = 0;
  const auto [a1, a2, a3, a4] = ang.a;
  const auto [w1, w2, w3] = ang.omega;
  const double h = 0.5, r = kSqrt3 / 2;
  switch (which) {
    case Isometry::Kind::Fabc:
      break;
    case Isometry::Kind::SwapFactors:
      out.a = {a1, -a2, -a3, a4};
      out.omega = {w1, -w2, -w3};
      break;
    case Isometry::Kind::InvertShear:
      if (law == AngleLaw::Printed)
        out.a = {h * a1 - r * a2, r * a1 - h * a2, h * a3 - r * a4, r * a3 + h * a4};
      else
        out.a = {h * a1 - r * a2, -r * a1 - h * a2, h * a3 - r * a4, -r * a3 - h * a4};
      out.omega = {-h * w1 - r * w2, -r * w1 + h * w2, w3};
      break;
  }
  return out;
}

}  // namespace s3nk
