#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace s3nk {

using Json = nlohmann::ordered_json;

enum class ReportFormat { Json, Text };

struct CheckRecord {
  std::string id;
  std::string anchor;
  double residual = 0;
  double tol = 0;
  bool pass = false;
  Json sample = Json::object();
};

bool operator==(const CheckRecord& a, const CheckRecord& b);

struct Summary {
  int pass = 0;
  int fail = 0;
};

struct CheckReport {
  std::string suite;
  std::uint64_t seed = 0;
  Json config = Json::object();
  std::vector<CheckRecord> checks;
  std::optional<double> duration_ms;

  // pass is residual <= tol; a NaN residual fails.
  CheckRecord& add(std::string id, std::string anchor, double residual, double tol, Json sample = Json::object());
  void append(const CheckReport& other, const std::string& prefix = "");
  Summary summary() const;
  bool all_pass() const { return summary().fail == 0; }
  const CheckRecord* find(const std::string& id) const;
};

bool operator==(const CheckReport& a, const CheckReport& b);

inline constexpr const char* kReportVersion = "report_v1";

Json to_json(const CheckReport& rep);
// Throws InvalidConfig on schema mismatch.
CheckReport report_from_json(const Json& j);

std::string render_json(const CheckReport& rep);
std::string render_text(const CheckReport& rep);

// Writes to `path`, or to stdout when path is empty or "-". Throws IoFailure.
void emit_report(const CheckReport& rep, ReportFormat format, const std::string& path);

}  // namespace s3nk
