#include "racahlab/wilson_functions.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>

#include "racahlab/errors.hpp"

namespace racahlab {

namespace {

// prod Gamma(num) / prod Gamma(den); zero when a denominator sits on a pole.
double gamma_ratio(std::initializer_list<double> num, std::initializer_list<double> den) {
  for (double x : den)
    if (is_nonpositive_integer(x)) return 0.0;
  SignedLog r{0.0, 1};
  for (double x : num) r = r * log_gamma(x);
  for (double x : den) r = r / log_gamma(x);
  return r.value();
}

SeriesValue run_series(const HypSeriesSpec& s) {
  HypSeriesResult r = hyp_pfq(s);
  SeriesValue out;
  out.value = r.value;
  out.trunc.K = r.terms_used;
  out.trunc.tail_estimate = r.error_estimate;
  out.trunc.converged = !r.truncated;
  return out;
}

HypSeriesSpec spec_from(const TruncationPolicy& p) {
  HypSeriesSpec s;
  s.max_terms = p.max_terms;
  s.tail_tolerance = p.tolerance;
  return s;
}

double second_difference(const TFunction& f, const WilsonParams& w, double t) {
  TFunction g = [&](double u) { return tau_apply(f, u); };
  return tau_star_apply(g, w, t);
}

}  // namespace

double q_prefactor(const WilsonParams& w, double t) {
  return gamma_ratio({1 - w.beta + t, 1 - w.beta - t}, {w.alpha + t, w.alpha - t});
}

double q_basis(int k, const WilsonParams& w, double t) {
  if (k < 0) throw DomainError("q_basis: negative index");
  return q_prefactor(w, t) * pochhammer(1 - w.beta + t, k) * pochhammer(1 - w.beta - t, k);
}

double q_tau_residual(int k, const WilsonParams& w, double t) {
  const WilsonParams up = w.shifted(0.5, 0.5, 0, 0);
  const double lhs = tau_apply([&](double u) { return q_basis(k, w, u); }, t);
  const double rhs = (w.alpha + w.beta - k - 1) * q_basis(k, up, t);
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  return scale > 0 ? (lhs - rhs) / scale : 0.0;
}

double q_tau_star_residual(int k, const WilsonParams& w, double t) {
  const WilsonParams up = w.shifted(0.5, 0.5, 0, 0);
  const double lhs = tau_star_apply([&](double u) { return q_basis(k, up, u); }, w, t);
  const double t1 = -(w.gamma + w.delta + k) * q_basis(k, w, t);
  const double t2 = k == 0 ? 0.0 : k * (k - w.beta + w.delta) * (k - w.beta + w.gamma) * q_basis(k - 1, w, t);
  const double scale = std::max({std::abs(lhs), std::abs(t1), std::abs(t2)});
  return scale > 0 ? (lhs - t1 - t2) / scale : 0.0;
}

SeriesValue phi_general(double n, const WilsonParams& w, double t, const TruncationPolicy& policy) {
  HypSeriesSpec s = spec_from(policy);
  s.numerator_params = {-n, n + w.sum() - 1, w.alpha - t, w.alpha + t};
  s.denominator_params = {w.alpha + w.beta, w.alpha + w.gamma, w.alpha + w.delta};
  return run_series(s);
}

SeriesValue psi_second(double n, const WilsonParams& w, double t, const TruncationPolicy& policy) {
  const double pre = q_prefactor(w, t);
  HypSeriesSpec s = spec_from(policy);
  s.numerator_params = {1 - n - w.alpha - w.beta, n + w.gamma + w.delta, 1 - w.beta + t, 1 - w.beta - t};
  s.denominator_params = {2 - w.alpha - w.beta, 1 - w.beta + w.gamma, 1 - w.beta + w.delta};
  SeriesValue v = run_series(s);
  v.value *= pre;
  v.trunc.tail_estimate *= std::abs(pre);
  return v;
}

double eigenvalue(double n, const WilsonParams& w, EigenConstant c) {
  return c == EigenConstant::Shifted ? n * (n + w.sum() - 1) : n * (n + w.sum());
}

double phi_residual_rhs(double n, const WilsonParams& w, double t) {
  const double a = w.alpha;
  return gamma_ratio({a + w.beta, a + w.gamma, a + w.delta}, {-n, n + w.sum() - 1, a + t, a - t});
}

double psi_residual_rhs(double n, const WilsonParams& w, double t) {
  const double a = w.alpha, b = w.beta;
  return gamma_ratio({2 - a - b, 1 - b + w.gamma, 1 - b + w.delta},
                     {1 - n - a - b, n + w.gamma + w.delta, a + t, a - t});
}

namespace {

ResidualBreakdown residual_detail(const TFunction& f, double n, const WilsonParams& w, double t, EigenConstant c,
                                  double rhs) {
  ResidualBreakdown r;
  r.eigenvalue = eigenvalue(n, w, c);
  const double tt = second_difference(f, w, t);
  const double ft = f(t);
  r.lhs = tt - r.eigenvalue * ft;
  r.rhs = rhs;
  if (rhs != 0.0) {
    r.relative = (r.lhs - rhs) / std::abs(rhs);
  } else {
    const double scale = std::abs(tt) + std::abs(r.eigenvalue * ft) + std::abs(ft);
    r.relative = scale > 0 ? r.lhs / scale : 0.0;
  }
  return r;
}

}  // namespace

ResidualBreakdown phi_residual_detail(double n, const WilsonParams& w, double t, EigenConstant c) {
  TFunction f = [&](double u) { return phi_general(n, w, u).value; };
  return residual_detail(f, n, w, t, c, phi_residual_rhs(n, w, t));
}

ResidualBreakdown psi_residual_detail(double n, const WilsonParams& w, double t, EigenConstant c) {
  TFunction f = [&](double u) { return psi_second(n, w, u).value; };
  return residual_detail(f, n, w, t, c, psi_residual_rhs(n, w, t));
}

double phi_residual(double n, const WilsonParams& w, double t) { return phi_residual_detail(n, w, t).relative; }
double psi_residual(double n, const WilsonParams& w, double t) { return psi_residual_detail(n, w, t).relative; }

double mixing_coefficient(double n, const WilsonParams& w, bool allow_near_integer) {
  const double dist = std::abs(n - std::round(n));
  if (dist < kPoleGuard && !allow_near_integer)
    throw PoleError("mixing coefficient: n is within the pole guard of an integer");
  const double a = w.alpha, b = w.beta, g = w.gamma, d = w.delta;
  return gamma_ratio({a + b, a + g, a + d, 1 - n - a - b, n + g + d},
                     {-n, n + w.sum() - 1, 2 - a - b, 1 - b + g, 1 - b + d});
}

SeriesValue wilson_function(double n, const WilsonParams& w, double t, const TruncationPolicy& policy,
                            bool allow_near_integer) {
  const double coef = mixing_coefficient(n, w, allow_near_integer);
  SeriesValue out = phi_general(n, w, t, policy);
  if (coef == 0.0) return out;
  SeriesValue p = psi_second(n, w, t, policy);
  out.value -= coef * p.value;
  out.trunc.K = std::max(out.trunc.K, p.trunc.K);
  out.trunc.tail_estimate += std::abs(coef) * p.trunc.tail_estimate;
  out.trunc.converged = out.trunc.converged && p.trunc.converged;
  return out;
}

FamilyFn wilson_function_family(double n) {
  return [n](const WilsonParams& w, double t) { return wilson_function(n, w, t).value; };
}

double wilson_eigen_residual(double n, const WilsonParams& w, double t) {
  TFunction f = [&](double u) { return wilson_function(n, w, u).value; };
  const double tt = second_difference(f, w, t);
  const double lam = eigenvalue(n, w);
  const double ft = f(t);
  const double scale = std::abs(tt) + std::abs(lam * ft);
  return scale > 0 ? (tt - lam * ft) / scale : 0.0;
}

double wilson_recurrence_residual(double n, const WilsonParams& w, double t) {
  const double a = w.alpha, b = w.beta, g = w.gamma, d = w.delta, s = w.sum();
  const double A = (n + s - 1) * (n + a + b) * (n + a + g) * (n + a + d) / ((2 * n + s - 1) * (2 * n + s));
  const double C = n * (n + b + g - 1) * (n + b + d - 1) * (n + g + d - 1) / ((2 * n + s - 2) * (2 * n + s - 1));
  const double fm = wilson_function(n - 1, w, t).value;
  const double f0 = wilson_function(n, w, t).value;
  const double fp = wilson_function(n + 1, w, t).value;
  const double lhs = -(a * a - t * t) * f0;
  const double rhs = A * fp - (A + C) * f0 + C * fm;
  const double scale = std::abs(A * fp) + std::abs((A + C) * f0) + std::abs(C * fm) + std::abs(lhs);
  return scale > 0 ? (lhs - rhs) / scale : 0.0;
}

LimitCheck integer_limit(int m, const WilsonParams& w, double t, const std::vector<double>& eps) {
  if (eps.empty()) throw DomainError("integer_limit: no eps values");
  LimitCheck r;
  r.target = phi_n(m, w, t);
  r.eps = eps;
  for (double e : eps) r.values.push_back(wilson_function(m + e, w, t).value);
  std::vector<double> p = r.values;
  for (std::size_t lvl = 1; lvl < eps.size(); ++lvl)
    for (std::size_t i = 0; i + lvl < eps.size(); ++i)
      p[i] = (eps[i] * p[i + 1] - eps[i + lvl] * p[i]) / (eps[i] - eps[i + lvl]);
  r.extrapolated = p[0];
  r.relative = std::abs(r.extrapolated - r.target) / std::max(std::abs(r.target), 1.0);
  return r;
}

bool in_convergence_window(const WilsonParams& w) {
  const double a = w.alpha, b = w.beta, g = w.gamma, d = w.delta;
  for (double v : {a + b, a + g, a + d, g + d, 1 - b + g, 1 - b + d, 2 - a - b})
    if (!(v > 0)) return false;
  return true;
}

}  // namespace racahlab
