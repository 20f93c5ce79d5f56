#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "racahlab/sphere_basis.hpp"
#include "racahlab/wilson_racah.hpp"

namespace racahlab {

enum class Command { Eval, VerifyAlgebra, VerifyOrthogonality, Expand, Wilson, WilsonFn, ReportAll };
enum class OutputFormat { Json, Csv, Text };
enum class EvalTarget { Wilson, WilsonFunction, Psi, Lambda };

struct RunConfig {
  Command command = Command::ReportAll;
  std::optional<Params3> k;
  std::optional<WilsonParams> w;
  std::optional<int> N;
  std::optional<double> n;
  std::optional<int> q;
  std::optional<double> t, x, y;
  EvalTarget eval_target = EvalTarget::Wilson;
  int grid_order = 48;
  std::uint64_t seed = 0;
  std::string output;  // empty: stdout
  OutputFormat format = OutputFormat::Json;
  bool metadata = true;
};

// Precedence: flag, then RACAHLAB_GRID_ORDER, then the default. Throws ConfigError on bad values.
int resolve_grid_order(std::optional<int> flag, const char* env_value);

// "a,b,c" with '.' decimals regardless of locale. Throws ConfigError.
std::vector<double> parse_list(const std::string& s, std::size_t expected);

// Checks every field against the preconditions of the command. Throws ConfigError.
void validate(const RunConfig& c);

// Writes the artifact to c.output or to out; returns 0 if every check passes, 1 otherwise.
int run(const RunConfig& c, std::ostream& out);

// Full command line entry point; 2 on configuration errors.
int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace racahlab
