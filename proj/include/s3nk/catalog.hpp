#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "s3nk/chart.hpp"
#include "s3nk/profile.hpp"

namespace s3nk {

enum class Family { F1, F2, F3 };

// Charts with P D1 = D1 and P D2 = D2, built on the A(t) path; t ranges over the path.
// F1: (e^{i(sqrt3 u/2 + v/2)}, A(t) e^{i(sqrt3 u/2 - v/2)}), F2 swaps the factors,
// F3: (e^{iv} A-bar, e^{-i(sqrt3 u/2 - v/2)} A-bar).
ImmersionChart chart_p_preserving(Family which, std::shared_ptr<const ProfilePath> path);
// Integrates the profile over t in [0, 2] from a0.
ImmersionChart chart_p_preserving(Family which, const ProfileSpec& profile, const APair& a0 = {1.0, 0.0});

// The chart with P D1 = D2; A and E of norm 1/2 multiply from the left. Throws WrongCoefficientNorm.
ImmersionChart chart_p_to_d2(const Quaternion& A, const Quaternion& E);

// The three charts with P D1 = D3 in exponential coordinates u = exp(x1 i + x2 j + x3 k) on [-0.6, 0.6]^3.
ImmersionChart chart_p_to_d3(Family which);

// Composition with an isometry. F1 and F2 reverse the chart orientation (they anticommute with J).
ImmersionChart transform_chart(const ImmersionChart& chart, const Isometry& iso);

// Exponential chart (p exp(sum x_m alpha_m), q exp(sum x_m beta_m)) through a random CR 3-plane
// (E1, J E1, E3). CR at the origin only.
ImmersionChart cr_plane_chart(std::uint64_t seed);

// Registry ids: thm42.f1..f3 (f = 0), thm42.fN.linear (f = t), thm42.fN.sine (f = sin t),
// thm52, thm52.r1..r5 (seeded A, E), cor.f1..f3. With a custom profile also thm42.fN.custom.
std::vector<std::string> chart_ids(bool with_custom = false);
// Throws UnknownChart.
ImmersionChart make_chart(const std::string& id, const std::optional<ProfileSpec>& custom = std::nullopt);

}  // namespace s3nk
