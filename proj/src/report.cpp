#include "s3nk/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "s3nk/errors.hpp"

namespace s3nk {

namespace {

bool same_number(double a, double b) { return (std::isnan(a) && std::isnan(b)) || a == b; }

Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

double number_from(const Json& j) {
  if (j.is_null()) return std::nan("");
  return j.get<double>();
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

}  // namespace

bool operator==(const CheckRecord& a, const CheckRecord& b) {
  return a.id == b.id && a.anchor == b.anchor && same_number(a.residual, b.residual) && a.tol == b.tol &&
         a.pass == b.pass && a.sample == b.sample;
}

bool operator==(const CheckReport& a, const CheckReport& b) {
  return a.suite == b.suite && a.seed == b.seed && a.config == b.config && a.checks == b.checks &&
         a.duration_ms == b.duration_ms;
}

CheckRecord& CheckReport::add(std::string id, std::string anchor, double residual, double tol, Json sample) {
  CheckRecord r;
  r.id = std::move(id);
  r.anchor = std::move(anchor);
  r.residual = residual;
  r.tol = tol;
  r.pass = residual <= tol;
  r.sample = std::move(sample);
  checks.push_back(std::move(r));
  return checks.back();
}

void CheckReport::append(const CheckReport& other, const std::string& prefix) {
  for (auto r : other.checks) {
    r.id = prefix + r.id;
    checks.push_back(std::move(r));
  }
}

Summary CheckReport::summary() const {
  Summary s;
  for (const auto& r : checks) (r.pass ? s.pass : s.fail)++;
  return s;
}

const CheckRecord* CheckReport::find(const std::string& id) const {
  for (const auto& r : checks)
    if (r.id == id) return &r;
  return nullptr;
}

Json to_json(const CheckReport& rep) {
  Json j;
  j["version"] = kReportVersion;
  j["suite"] = rep.suite;
  j["seed"] = rep.seed;
  j["config"] = rep.config;
  Json checks = Json::array();
  for (const auto& r : rep.checks) {
    Json c;
    c["id"] = r.id;
    c["anchor"] = r.anchor;
    c["residual"] = number_or_null(r.residual);
    c["tol"] = r.tol;
    c["pass"] = r.pass;
    c["sample"] = r.sample;
    checks.push_back(std::move(c));
  }
  j["checks"] = std::move(checks);
  const auto s = rep.summary();
  j["summary"] = {{"pass", s.pass}, {"fail", s.fail}};
  j["duration_ms"] = rep.duration_ms ? Json(*rep.duration_ms) : Json(nullptr);
  return j;
}

CheckReport report_from_json(const Json& j) {
  try {
    if (j.at("version").get<std::string>() != kReportVersion)
      throw Error(ErrorKind::InvalidConfig, "unsupported report version");
    CheckReport rep;
    rep.suite = j.at("suite").get<std::string>();
    rep.seed = j.at("seed").get<std::uint64_t>();
    rep.config = j.at("config");
    for (const auto& c : j.at("checks")) {
      CheckRecord r;
      r.id = c.at("id").get<std::string>();
      r.anchor = c.at("anchor").get<std::string>();
      r.residual = number_from(c.at("residual"));
      r.tol = c.at("tol").get<double>();
      r.pass = c.at("pass").get<bool>();
      r.sample = c.at("sample");
      rep.checks.push_back(std::move(r));
    }
    if (!j.at("duration_ms").is_null()) rep.duration_ms = j.at("duration_ms").get<double>();
    return rep;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidConfig, std::string("malformed report: ") + e.what());
  }
}

std::string render_json(const CheckReport& rep) { return to_json(rep).dump(2) + "\n"; }

std::string render_text(const CheckReport& rep) {
  std::ostringstream os;
  os << "suite " << rep.suite << "  seed " << rep.seed << "\n";
  for (const auto& r : rep.checks) {
    os << (r.pass ? "PASS  " : "FAIL  ") << r.id << "  residual " << format_number(r.residual) << "  tol "
       << format_number(r.tol) << "  [" << r.anchor << "]\n";
  }
  const auto s = rep.summary();
  os << "summary: " << s.pass << " passed, " << s.fail << " failed\n";
  if (rep.duration_ms) os << "duration: " << *rep.duration_ms << " ms\n";
  return os.str();
}

void emit_report(const CheckReport& rep, ReportFormat format, const std::string& path) {
  const std::string body = format == ReportFormat::Json ? render_json(rep) : render_text(rep);
  if (path.empty() || path == "-") {
    std::cout << body << std::flush;
    if (!std::cout) throw Error(ErrorKind::IoFailure, "cannot write report to stdout");
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::IoFailure, "cannot open " + path);
  out << body;
  out.close();
  if (!out) throw Error(ErrorKind::IoFailure, "cannot write " + path);
}

}  // namespace s3nk
