#pragma once

#include <Eigen/Dense>
#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "racahlab/specialfn.hpp"
#include "racahlab/sphere_basis.hpp"

namespace racahlab {

struct RacahProvenance {
  Params3 k;
  double N = 0;
};

struct WilsonParams {
  double alpha = 0, beta = 0, gamma = 0, delta = 0;
  std::optional<RacahProvenance> provenance;
  double t0 = 0;  // first spectral point, alpha

  static WilsonParams make(double alpha, double beta, double gamma, double delta);
  // alpha = (k2+k3+1)/2, beta = -N-alpha, gamma = (k2-k3+1)/2, delta = N+k1+(k2+k3+3)/2.
  static WilsonParams from_sphere(const Params3& k, int N);

  double sum() const { return alpha + beta + gamma + delta; }
  // k1 = delta+beta-1, k2 = alpha+gamma-1, k3 = alpha-gamma, N = -alpha-beta.
  std::array<double, 4> to_sphere() const;
  WilsonParams shifted(double da, double db, double dc, double dd) const;
  // Parameter in slot perm[i] moves to slot i.
  WilsonParams permuted(const std::array<int, 4>& perm) const;
  double get(int slot) const;
};

enum class ParamSlot { Alpha = 0, Beta = 1, Gamma = 2, Delta = 3 };

double lattice_t(int q, const Params3& k);

double phi_n(int n, const WilsonParams& w, double t);
double wilson_poly(int n, const WilsonParams& w, double t);
// Phi_n at t = alpha + q with the numerator alpha - t entered exactly as -q.
double phi_lattice(int n, const WilsonParams& w, int q);

double pk_basis(int k, double alpha, double t);
std::vector<double> solve_wk(int n, const WilsonParams& w);
// w_{k+1} from w_k by the two-term recurrence.
double wk_step(int n, int k, const WilsonParams& w, double wk);

double racah_weight(int q, const WilsonParams& w);
// log of Gamma(t-a+1)...Gamma(t)/(Gamma(t+a)...Gamma(t+1)) over a in {alpha,beta,gamma,delta}.
SignedLog norm_lambda_gamma_ratio(const WilsonParams& w, double t);

using TFunction = std::function<double(double t)>;

double tau_apply(const TFunction& f, double t);
// tau* carrying the parameters of w: [prod(p+t) f(t+1/2) - prod(p-t) f(t-1/2)] / (2t).
double tau_star_apply(const TFunction& f, const WilsonParams& w, double t);
double mu_apply(ParamSlot p1, ParamSlot p2, const WilsonParams& w, const TFunction& f, double t);

// (tau* tau - n(n+s-1)) Phi_n(t), relative to |tau* tau Phi| + |n(n+s-1) Phi| + |Phi|.
double eigen_residual(int n, const WilsonParams& w, double t);
// tau* P_k(alpha+1/2) - [-(s+k) P_{k+1}(alpha) + (alpha+beta+k)(alpha+gamma+k)(alpha+delta+k) P_k(alpha)].
double tau_star_pk_residual(int k, const WilsonParams& w, double t);
// tau P_k(alpha) + k P_{k-1}(alpha+1/2).
double tau_pk_residual(int k, double alpha, double t);

// (lhs - rhs) / max(|lhs|, |rhs|) of the three mu-family identities
//   mu^(beta,delta)  Phi^(alpha-1/2,beta+1/2,gamma-1/2,delta+1/2) = (n+beta+delta)(n+alpha+gamma-1)/(alpha+gamma-1) Phi
//   mu^(alpha,beta)  Phi^(alpha+1/2,beta+1/2,gamma-1/2,delta-1/2) = (alpha+beta) Phi
//   mu^(alpha,delta) Phi^(alpha+1/2,beta-1/2,gamma-1/2,delta+1/2) = (alpha+delta) Phi
// for any function family phi(params, t).
using FamilyFn = std::function<double(const WilsonParams&, double)>;
double mu_beta_delta_residual(double n, const WilsonParams& w, double t, const FamilyFn& phi);
double mu_alpha_beta_residual(const WilsonParams& w, double t, const FamilyFn& phi);
double mu_alpha_delta_residual(const WilsonParams& w, double t, const FamilyFn& phi);
FamilyFn polynomial_family(int n);

double permutation_invariant(int n, const WilsonParams& w, double t);
double permutation_ratio(int n, const WilsonParams& w, const std::array<int, 4>& perm, double t);
std::vector<std::array<int, 4>> all_permutations();

// Racah case: ||(M'^T - lambda_q) v_q||_inf / (max(|M'|_max, |lambda_q|) ||v_q||_inf), v_q = (Phi_n(t_q))_n.
double recurrence_residual(int q, int N, const Params3& k);
// Dual: v_n = (Phi_n(t_q))_q against the k1<->k3 matrix and mu_n.
double duality_residual(int n, int N, const Params3& k);

struct GramResult {
  Eigen::MatrixXd gram;
  int terms = 0;
  double tail_estimate = 0;
  double max_offdiag_ratio() const;
  bool diagonal_positive() const;
};

GramResult racah_gram(int N, const Params3& k);

struct WilsonSumPolicy {
  int n_max = 5;
  double tail_tolerance = 1e-14;
  int q_cap = 100000;
};

// Truncated infinite orthogonality sum over t = alpha + q, q = 0, 1, ...
GramResult wilson_gram(const WilsonParams& w, const WilsonSumPolicy& policy = {});
// Default parameter window for that sum: positive weight, fast algebraic decay.
bool in_wilson_sum_window(const WilsonParams& w, int n_max = 5);

}  // namespace racahlab
