#include "racahlab/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <json.hpp>
#include <sstream>

namespace racahlab {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Info: return "INFO";
  }
  return "?";
}

Check make_check(std::string name, std::string anchor, double tolerance, double residual, std::string details) {
  Check c;
  c.name = std::move(name);
  c.anchor = std::move(anchor);
  c.tolerance = tolerance;
  c.residual = residual;
  c.details = std::move(details);
  c.status = std::isfinite(residual) && std::abs(residual) <= tolerance ? CheckStatus::Pass : CheckStatus::Fail;
  return c;
}

Check make_info(std::string name, std::string anchor, double residual, std::string details) {
  Check c;
  c.name = std::move(name);
  c.anchor = std::move(anchor);
  c.residual = residual;
  c.details = std::move(details);
  c.status = CheckStatus::Info;
  return c;
}

void MaxTracker::add(double r, const std::string& at) {
  if (!std::isfinite(r)) {
    if (finite) where = at;
    finite = false;
    value = r;
    return;
  }
  if (finite && std::abs(r) >= value) {
    value = std::abs(r);
    where = at;
  }
}

void Report::sort() {
  std::stable_sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) { return a.name < b.name; });
}

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass(); });
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  std::replace(s.begin(), s.end(), ',', '.');
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

namespace {

Report sorted_copy(const Report& r) {
  Report s = r;
  s.sort();
  return s;
}

nlohmann::ordered_json number(double v) {
  if (std::isfinite(v)) return v;
  return format_double(v);
}

}  // namespace

std::string to_json(const Report& r, bool with_metadata) {
  Report s = sorted_copy(r);
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["command"] = s.command;
  j["config"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : s.config) j["config"][key] = value;
  j["all_pass"] = s.all_pass();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : s.checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["anchor"] = c.anchor;
    e["tolerance"] = number(c.tolerance);
    e["residual"] = number(c.residual);
    e["status"] = to_string(c.status);
    e["details"] = c.details;
    j["checks"].push_back(e);
  }
  if (with_metadata) {
    nlohmann::ordered_json meta;
    auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char ts[32];
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::strftime(ts, sizeof ts, "%Y-%m-%dT%H:%M:%SZ", &tm);
    meta["generated_at"] = ts;
    meta["timings_seconds"] = nlohmann::ordered_json::object();
    for (const auto& c : s.checks) meta["timings_seconds"][c.name] = c.seconds;
    j["metadata"] = meta;
  }
  return j.dump(2) + "\n";
}

std::string to_text(const Report& r) {
  Report s = sorted_copy(r);
  std::ostringstream os;
  for (const auto& c : s.checks) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-4s %-40s residual %.3e  tol %.1e", to_string(c.status), c.name.c_str(),
                  c.residual, c.tolerance);
    os << buf;
    if (!c.details.empty()) os << "  " << c.details;
    os << "\n";
  }
  os << (s.all_pass() ? "ALL PASS" : "FAILURES PRESENT") << "\n";
  return os.str();
}

std::string to_csv(const Report& r) {
  Report s = sorted_copy(r);
  std::ostringstream os;
  os << "name,status,residual,tolerance,anchor\n";
  for (const auto& c : s.checks)
    os << csv_escape(c.name) << ',' << to_string(c.status) << ',' << format_double(c.residual) << ','
       << format_double(c.tolerance) << ',' << csv_escape(c.anchor) << "\n";
  return os.str();
}

}  // namespace racahlab
