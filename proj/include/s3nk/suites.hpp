#pragma once

#include <string>

#include "s3nk/catalog.hpp"
#include "s3nk/config.hpp"
#include "s3nk/report.hpp"

namespace s3nk {

// All suites validate cfg first (InvalidConfig) and never throw on a failing check.

CheckReport run_identity_suite(const RunConfig& cfg);
// Throws UnknownChart.
CheckReport run_chart_suite(const RunConfig& cfg, const std::string& chart_id);
CheckReport run_chart_suite(const RunConfig& cfg, const ImmersionChart& chart);
CheckReport run_ode_suite(const RunConfig& cfg);
// Angle laws of F1, F2 on seeded CR-plane charts and pointwise identities between catalog charts.
CheckReport run_transform_suite(const RunConfig& cfg);
// identities, ode, transforms, then every selected chart. Record ids are prefixed by the suite.
CheckReport run_all(const RunConfig& cfg);

}  // namespace s3nk
