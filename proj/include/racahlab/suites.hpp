#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "racahlab/expansion.hpp"
#include "racahlab/panels.hpp"
#include "racahlab/report.hpp"

namespace racahlab {

struct SuiteOptions {
  std::uint64_t seed = kDefaultSeed;
  int grid_order = kDefaultGridOrder;
};

// Each suite draws its panel from seed + tag * 0x9E3779B97F4A7C15 so that suites are independent.
std::uint64_t suite_seed(std::uint64_t seed, int tag);

std::vector<Check> suite_closure(const SuiteOptions& o);
std::vector<Check> suite_casimir(const SuiteOptions& o);
std::vector<Check> suite_expansion(const SuiteOptions& o);
std::vector<Check> suite_racah(const SuiteOptions& o);
std::vector<Check> suite_difference(const SuiteOptions& o);
std::vector<Check> suite_intertwining(const SuiteOptions& o);
std::vector<Check> suite_permutation(const SuiteOptions& o);
std::vector<Check> suite_wilson_functions(const SuiteOptions& o);
std::vector<Check> suite_wilson_sum(const SuiteOptions& o);
std::vector<Check> suite_disambiguation(const SuiteOptions& o);

// Single-configuration variants used by the CLI.
std::vector<Check> algebra_checks(int N, const Params3& k);
std::vector<Check> orthogonality_checks(int N, const Params3& k, int grid_order);
std::vector<Check> wilson_sum_checks(const WilsonParams& w);
std::vector<Check> wilson_function_checks(double n, const WilsonParams& w, double t);

struct Criterion {
  int id = 0;
  std::string title;
  double budget_seconds = 0;  // 0 means no runtime bound
  std::vector<Check> (*suite)(const SuiteOptions&) = nullptr;
};

const std::vector<Criterion>& acceptance_criteria();

// Runs every suite, with wall times attached to the checks.
std::vector<Check> run_all_suites(const SuiteOptions& o);

}  // namespace racahlab
