#include "s3nk/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "s3nk/errors.hpp"

namespace s3nk {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename T>
T parse_integer(const std::string& key, const std::string& v) {
  T out{};
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size())
    throw Error(ErrorKind::InvalidConfig, key + ": expected an integer, got '" + v + "'");
  return out;
}

double parse_real(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double out = 0;
  try {
    out = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != v.size()) throw Error(ErrorKind::InvalidConfig, key + ": expected a number, got '" + v + "'");
  return out;
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  throw Error(ErrorKind::InvalidConfig, key + ": expected a boolean, got '" + v + "'");
}

}  // namespace

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void RunConfig::validate() const {
  if (samples < 1) throw Error(ErrorKind::InvalidConfig, "samples must be >= 1");
  if (grid < 1) throw Error(ErrorKind::InvalidConfig, "grid must be >= 1");
  if (!(tol_algebraic > 0) || !(tol_derivative > 0))
    throw Error(ErrorKind::InvalidConfig, "tolerances must be strictly positive");
}

Json RunConfig::to_json() const {
  Json j;
  j["samples"] = samples;
  j["tol_algebraic"] = tol_algebraic;
  j["tol_derivative"] = tol_derivative;
  j["charts"] = charts;
  j["grid"] = grid;
  j["profile"] = profile ? Json(profile->id()) : Json(nullptr);
  return j;
}

void set_config_value(RunConfig& cfg, const std::string& key, const std::string& raw) {
  const std::string v = trim(raw);
  if (key == "seed")
    cfg.seed = parse_integer<std::uint64_t>(key, v);
  else if (key == "samples")
    cfg.samples = parse_integer<int>(key, v);
  else if (key == "tol_algebraic")
    cfg.tol_algebraic = parse_real(key, v);
  else if (key == "tol_derivative")
    cfg.tol_derivative = parse_real(key, v);
  else if (key == "chart")
    cfg.charts = split_list(v);
  else if (key == "grid")
    cfg.grid = parse_integer<int>(key, v);
  else if (key == "format") {
    if (v == "json")
      cfg.format = ReportFormat::Json;
    else if (v == "text")
      cfg.format = ReportFormat::Text;
    else
      throw Error(ErrorKind::InvalidConfig, "format must be json or text");
  } else if (key == "out")
    cfg.out = v;
  else if (key == "profile")
    cfg.profile = ProfileSpec::parse(v);
  else if (key == "timing")
    cfg.timing = parse_bool(key, v);
  else
    throw Error(ErrorKind::InvalidConfig, "unknown config key '" + key + "'");
}

RunConfig load_config_file(const std::string& path, RunConfig cfg) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoFailure, "cannot read config " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorKind::InvalidConfig, path + ":" + std::to_string(lineno) + ": expected key = value");
    set_config_value(cfg, trim(line.substr(0, eq)), line.substr(eq + 1));
  }
  return cfg;
}

}  // namespace s3nk
