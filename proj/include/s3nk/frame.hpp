#pragma once

#include <array>
#include <string>
#include <vector>

#include "s3nk/chart.hpp"
#include "s3nk/nk.hpp"

namespace s3nk {

inline constexpr double kGaugeEps = 1e-6;

struct FdOptions {
  double step = 1e-5;
  bool richardson = true;
};

struct Pushforward {
  TangentVector vec;
  double tangency_residual = 0;
};

// d/ds chart(x + s dir) at s = 0, as (alpha, beta) data.
// Throws DegenerateDirection for dir = 0 and DomainBoundary when the stencil leaves the domain.
Pushforward numeric_pushforward(const ImmersionChart& chart, const ChartParams& x, const ChartParams& dir,
                                const FdOptions& fd = {});

// One plain central difference with step h, no extrapolation.
TangentVector central_difference(const ImmersionChart& chart, const ChartParams& x, const ChartParams& dir, double h);

std::array<TangentVector, 3> coordinate_pushforwards(const ImmersionChart& chart, const ChartParams& x,
                                                     const FdOptions& fd = {});

// Gram determinant of three tangent vectors in the metric g.
double gram_determinant(const std::array<TangentVector, 3>& t);

struct CrSplit {
  TangentVector e1, e2, e3;
  // Singular values of the projected-J matrix, descending.
  std::array<double, 3> singular_values{};
  // Largest |J E - proj_T J E| over the returned D1 pair.
  double cr_residual = 0;
  bool e3_flipped = false;
  // Index of the basis vector whose D1 projection seeded e1.
  int seed_index = 0;
};

// Splits span(basis) into D1 (pair e1, e2 = J e1) and the unit D1-perp e3, with
// (e1, e2, e3) positive relative to `orientation` times the basis order.
// e1 is the normalized D1 projection of basis[seed_index]; seed_index < 0 picks the longest projection.
// Throws NotProperCR when the middle singular value is < tol or the smallest is > tol.
CrSplit cr_split(const std::array<TangentVector, 3>& basis, int orientation = 1, double tol = 1e-6,
                 int seed_index = -1);

enum class GaugeMode { MaxPE1E1, MaxPE1E3, Degenerate };

const char* to_string(GaugeMode m);

struct GaugePolicy {
  double eps = kGaugeEps;
  bool fix_sign = true;
  // Extra rotation applied after gauge fixing. Zero for the canonical frame.
  double twist = 0;
  // Basis vector seeding E1 when both gauge functionals are flat; see cr_split.
  int seed_index = -1;
};

struct GaugeInfo {
  GaugeMode mode = GaugeMode::Degenerate;
  double rotation = 0;
  bool e3_flipped = false;
  bool e1_flipped = false;
  bool degenerate = false;
  int seed_index = 0;
};

struct FrameSample {
  SurfacePoint base;
  std::array<TangentVector, 6> E;
  GaugeInfo gauge;
};

FrameSample build_frame(const CrSplit& split, const GaugePolicy& policy = {});

// Pushforwards, CR split and gauge-fixed frame at x.
FrameSample frame_at(const ImmersionChart& chart, const ChartParams& x, const GaugePolicy& policy = {},
                     const FdOptions& fd = {});

// max |g(E_i, E_j) - delta_ij|.
double orthonormality_residual(const FrameSample& fr);
// max deviation of E2 = J E1, E4 = J E3, E5 = sqrt3 G(E1,E3), E6 = sqrt3 G(E2,E3) = -J E5.
double frame_relation_residual(const FrameSample& fr);
// The 15 values G(E_i, E_j), i < j, against the closed-form table.
double g_table_residual(const FrameSample& fr);

struct AngleData {
  double theta = 0;
  std::array<double, 4> a{};
  std::array<double, 3> omega{};
  // a was lifted from the omegas because sin(theta) < eps.
  bool lifted = false;
  // max deviation of the 6x6 matrix g(P E_j, E_i) from the closed form in (theta, a).
  double p_matrix_residual = 0;
};

// Throws FrameNotOrthonormal when orthonormality_residual > 1e-8.
AngleData extract_angles(const FrameSample& fr, double eps = kGaugeEps);

std::array<double, 3> omega_from_a(const std::array<double, 4>& a);

// Matrix g(P E_j, E_i) of P in an adapted frame.
std::array<std::array<double, 6>, 6> p_matrix(double theta, const std::array<double, 4>& a);

struct ClassResult {
  PClass cls = PClass::Generic;
  double theta_from_zero = 0;
  double theta_from_right = 0;
  double a12 = 0;  // sqrt(a1^2 + a2^2)
  double a34 = 0;  // sqrt(a3^2 + a4^2)
};

ClassResult classify(const AngleData& ang, double tol = 1e-5);

// Length of the projection of P E3 onto span(E5, E6).
double pe3_on_d3(const FrameSample& fr);

struct CoefficientOptions {
  GaugePolicy gauge;
  FdOptions fd;
  double step = 1e-3;
  bool richardson = true;
  // Phase gradient added to the gauge twist; twist(x) = gauge.twist + <twist_slope, x - x0>.
  std::array<double, 3> twist_slope{};
};

class CoefficientTable {
 public:
  // 1-based indices as in Gamma_ij^k = g(nabla_{E_i} E_j, E_k).
  double gamma(int i, int j, int k) const { return nab_[i - 1][j - 1][k - 1]; }
  double h(int i, int j, int k) const { return nab_[i - 1][j - 1][k + 2]; }
  double b(int i, int j, int k) const { return nab_[i - 1][j + 2][k + 2]; }
  // g(nabla_{E_i} E_j, E_k) for i, j, k in 1..6.
  double nabla(int i, int j, int k) const { return nab_[i - 1][j - 1][k - 1]; }
  // g([E1, E2], E3) from the ambient Lie bracket.
  double bracket_defect() const { return bracket_defect_; }

  std::array<std::array<std::array<double, 6>, 6>, 3> nab_{};
  double bracket_defect_ = 0;
};

CoefficientTable coefficients(const ImmersionChart& chart, const ChartParams& x, const CoefficientOptions& opts = {});

// g([E1, E2], E3) at x. Zero iff D1 is involutive there.
double d1_integrability_defect(const ImmersionChart& chart, const ChartParams& x,
                               const CoefficientOptions& opts = {});

struct Relation {
  std::string name;
  double residual;
};

// Antisymmetry of Gamma and b, symmetry of h: worst residual of each family.
std::vector<Relation> symmetry_relations(const CoefficientTable& t);
// First-order relations between Gamma, h and b on a 3-dimensional CR submanifold.
std::vector<Relation> first_order_relations(const CoefficientTable& t);
// Relations of the normal connection b_ij^3 to Gamma and h.
std::vector<Relation> normal_relations(const CoefficientTable& t);

enum class AngleLaw { Printed, SignCorrected };

// Angle functions of the image under F1 (SwapFactors) or F2 (InvertShear).
// Printed is the F2 law as usually stated; SignCorrected uses a2' = -sqrt3/2 a1 - a2/2 and
// a4' = -sqrt3/2 a3 - a4/2, which is what direct recomputation on F2 images gives.
AngleData transform_angles(const AngleData& ang, Isometry::Kind which, AngleLaw law = AngleLaw::Printed);

}  // namespace s3nk
