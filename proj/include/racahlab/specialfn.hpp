#pragma once

#include <limits>
#include <vector>

namespace racahlab {

// log|value| with the sign carried separately; sign 0 encodes an exact zero.
struct SignedLog {
  double log_abs = 0.0;
  int sign = 1;

  double value() const;
  SignedLog operator*(const SignedLog& o) const;
  SignedLog operator/(const SignedLog& o) const;
};

bool is_nonpositive_integer(double x);

SignedLog log_gamma(double x);
double gamma_fn(double x);

double pochhammer(double a, int k);
SignedLog log_pochhammer(double a, int k);

struct HypSeriesSpec {
  std::vector<double> numerator_params;
  std::vector<double> denominator_params;
  double argument = 1.0;
  int max_terms = 100000;
  double tail_tolerance = 1e-14;
};

struct HypSeriesResult {
  double value = 0.0;
  int terms_used = 0;
  bool truncated = false;
  double error_estimate = 0.0;
};

// Terminating series are summed exactly in extended precision. A nonterminating
// series at unit argument with p = q+1 converges only algebraically; its partial
// sums are accelerated by Richardson extrapolation in the known tail exponents.
HypSeriesResult hyp_pfq(const HypSeriesSpec& spec);

double jacobi_p(int n, double alpha, double beta, double y);
double jacobi_p_dy(int n, double alpha, double beta, double y);

}  // namespace racahlab
