#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "s3nk/profile.hpp"
#include "s3nk/report.hpp"

namespace s3nk {

struct RunConfig {
  std::uint64_t seed = 42;
  int samples = 100;
  double tol_algebraic = 1e-12;
  double tol_derivative = 1e-6;
  // Empty means every registered chart.
  std::vector<std::string> charts;
  int grid = 5;
  ReportFormat format = ReportFormat::Json;
  std::string out;
  std::optional<ProfileSpec> profile;
  bool timing = false;

  // Throws InvalidConfig.
  void validate() const;
  // Echo used in reports. Leaves out the output path and format so reports compare across destinations.
  Json to_json() const;
};

// Keys: seed, samples, tol_algebraic, tol_derivative, chart (comma list), grid, format, out, profile, timing.
// Throws InvalidConfig.
void set_config_value(RunConfig& cfg, const std::string& key, const std::string& value);

// Reads a flat `key = value` file ('#' starts a comment) on top of `cfg`. Throws IoFailure, InvalidConfig.
RunConfig load_config_file(const std::string& path, RunConfig cfg = {});

std::vector<std::string> split_list(const std::string& text);

}  // namespace s3nk
