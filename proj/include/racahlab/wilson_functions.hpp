#pragma once

#include <vector>

#include "racahlab/wilson_racah.hpp"

namespace racahlab {

struct SeriesTruncation {
  int K = 0;
  double tail_estimate = 0;
  bool converged = true;
};

struct TruncationPolicy {
  int max_terms = 100000;
  double tolerance = 1e-14;
};

struct SeriesValue {
  double value = 0;
  SeriesTruncation trunc;
};

// Gamma(1-beta+t) Gamma(1-beta-t) / (Gamma(alpha+t) Gamma(alpha-t)) (1-beta+t)_k (1-beta-t)_k
double q_basis(int k, const WilsonParams& w, double t);
// The Gamma prefactor of q_basis; zero on the lattice t = alpha + q.
double q_prefactor(const WilsonParams& w, double t);

// tau Q(alpha,beta)_k - (alpha+beta-k-1) Q(alpha+1/2,beta+1/2)_k, relative.
double q_tau_residual(int k, const WilsonParams& w, double t);
// tau* Q(alpha+1/2,beta+1/2)_k + (gamma+delta+k) Q_k - k(k-beta+delta)(k-beta+gamma) Q_{k-1}, relative.
double q_tau_star_residual(int k, const WilsonParams& w, double t);

// 4F3(-n, n+s-1, alpha-t, alpha+t; alpha+beta, alpha+gamma, alpha+delta; 1) for real n.
SeriesValue phi_general(double n, const WilsonParams& w, double t, const TruncationPolicy& policy = {});
// q_prefactor * 4F3(1-n-alpha-beta, n+gamma+delta, 1-beta+t, 1-beta-t; 2-alpha-beta, 1-beta+gamma, 1-beta+delta; 1).
SeriesValue psi_second(double n, const WilsonParams& w, double t, const TruncationPolicy& policy = {});

enum class EigenConstant { Shifted, Printed };  // n(n+s-1) or n(n+s)
double eigenvalue(double n, const WilsonParams& w, EigenConstant c = EigenConstant::Shifted);

struct ResidualBreakdown {
  double lhs = 0;  // (tau* tau - eigenvalue) f at t
  double rhs = 0;  // closed Gamma ratio
  double relative = 0;
  double eigenvalue = 0;
};

// Gamma(a+b)Gamma(a+c)Gamma(a+d) / (Gamma(-n)Gamma(n+s-1)Gamma(a+t)Gamma(a-t))
double phi_residual_rhs(double n, const WilsonParams& w, double t);
// Gamma(2-a-b)Gamma(1-b+c)Gamma(1-b+d) / (Gamma(1-n-a-b)Gamma(n+c+d)Gamma(a+t)Gamma(a-t))
double psi_residual_rhs(double n, const WilsonParams& w, double t);

ResidualBreakdown phi_residual_detail(double n, const WilsonParams& w, double t,
                                      EigenConstant c = EigenConstant::Shifted);
ResidualBreakdown psi_residual_detail(double n, const WilsonParams& w, double t,
                                      EigenConstant c = EigenConstant::Shifted);
double phi_residual(double n, const WilsonParams& w, double t);
double psi_residual(double n, const WilsonParams& w, double t);

inline constexpr double kPoleGuard = 1e-8;

// Coefficient of psi_second in the Wilson function. Throws PoleError when n is within
// kPoleGuard of an integer unless allow_near_integer is set.
double mixing_coefficient(double n, const WilsonParams& w, bool allow_near_integer = false);

SeriesValue wilson_function(double n, const WilsonParams& w, double t, const TruncationPolicy& policy = {},
                            bool allow_near_integer = false);
FamilyFn wilson_function_family(double n);

// (tau* tau - n(n+s-1)) wilson_function, relative to the magnitude of the two sides.
double wilson_eigen_residual(double n, const WilsonParams& w, double t);
// Three-term recurrence in n: -(alpha^2 - t^2) f_n = A_n f_{n+1} - (A_n + C_n) f_n + C_n f_{n-1}.
double wilson_recurrence_residual(double n, const WilsonParams& w, double t);

struct LimitCheck {
  double target = 0;  // Phi_m(t)
  std::vector<double> eps, values;
  double extrapolated = 0;  // polynomial extrapolation in eps to eps = 0
  double relative = 0;      // |extrapolated - target| / max(|target|, 1)
};

// wilson_function at n = m + eps, extrapolated back to the integer m through all eps values (Neville).
LimitCheck integer_limit(int m, const WilsonParams& w, double t, const std::vector<double>& eps = {1e-3, 1e-4, 1e-5});

// alpha+beta, alpha+gamma, alpha+delta, gamma+delta, 1-beta+gamma, 1-beta+delta, 2-alpha-beta > 0.
bool in_convergence_window(const WilsonParams& w);

}  // namespace racahlab
