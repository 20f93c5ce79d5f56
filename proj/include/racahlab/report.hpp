#pragma once

#include <map>
#include <string>
#include <vector>

namespace racahlab {

inline constexpr int kReportSchemaVersion = 1;

enum class CheckStatus { Pass, Fail, Info };
const char* to_string(CheckStatus s);

struct Check {
  std::string name;
  std::string anchor;  // the identity being checked, as formula text
  double tolerance = 0;
  double residual = 0;
  CheckStatus status = CheckStatus::Pass;
  std::string details;
  double seconds = 0;  // wall time; emitted only in the metadata block
  bool pass() const { return status != CheckStatus::Fail; }
};

// PASS iff residual is finite and |residual| <= tolerance.
Check make_check(std::string name, std::string anchor, double tolerance, double residual, std::string details = {});
// Recorded but never counted as a failure.
Check make_info(std::string name, std::string anchor, double residual, std::string details = {});

// Running max of |residual| with the argument that produced it.
struct MaxTracker {
  double value = 0;
  std::string where;
  bool finite = true;
  void add(double r, const std::string& at);
};

struct Report {
  std::string command;
  std::map<std::string, std::string> config;
  std::vector<Check> checks;

  void add(Check c) { checks.push_back(std::move(c)); }
  void append(const std::vector<Check>& cs) { checks.insert(checks.end(), cs.begin(), cs.end()); }
  // Stable sort by check name.
  void sort();
  bool all_pass() const;
};

// Checks ordered by name; wall times and the timestamp live in "metadata".
std::string to_json(const Report& r, bool with_metadata = true);
std::string to_text(const Report& r);
// name,status,residual,tolerance,anchor
std::string to_csv(const Report& r);

// printf("%.17g") with the C locale decimal point, and a trailing ".0" for integral values.
std::string format_double(double v);
std::string csv_escape(const std::string& s);

}  // namespace racahlab
