#include "racahlab/wilson_racah.hpp"

#include <algorithm>
#include <cmath>

#include "racahlab/errors.hpp"
#include "racahlab/quadalg.hpp"

namespace racahlab {

namespace {

void require_t(double t) {
  if (t == 0.0) throw DomainError("difference operators divide by 2t; t = 0 is excluded");
}

double rel(double lhs, double rhs) {
  double s = std::max(std::abs(lhs), std::abs(rhs));
  return s > 0 ? (lhs - rhs) / s : 0.0;
}

}  // namespace

WilsonParams WilsonParams::make(double alpha, double beta, double gamma, double delta) {
  if (!std::isfinite(alpha + beta + gamma + delta)) throw ParameterError("Wilson parameters must be finite");
  WilsonParams w;
  w.alpha = alpha;
  w.beta = beta;
  w.gamma = gamma;
  w.delta = delta;
  w.t0 = alpha;
  return w;
}

WilsonParams WilsonParams::from_sphere(const Params3& k, int N) {
  if (N < 0) throw DomainError("N must be nonnegative");
  const double a = (k.k2 + k.k3 + 1) / 2;
  WilsonParams w = make(a, -N - a, (k.k2 - k.k3 + 1) / 2, N + k.k1 + (k.k2 + k.k3 + 3) / 2);
  w.provenance = RacahProvenance{k, static_cast<double>(N)};
  return w;
}

std::array<double, 4> WilsonParams::to_sphere() const {
  return {delta + beta - 1, alpha + gamma - 1, alpha - gamma, -alpha - beta};
}

WilsonParams WilsonParams::shifted(double da, double db, double dc, double dd) const {
  return make(alpha + da, beta + db, gamma + dc, delta + dd);
}

double WilsonParams::get(int slot) const {
  switch (slot) {
    case 0: return alpha;
    case 1: return beta;
    case 2: return gamma;
    case 3: return delta;
  }
  throw DomainError("parameter slot out of range");
}

WilsonParams WilsonParams::permuted(const std::array<int, 4>& perm) const {
  return make(get(perm[0]), get(perm[1]), get(perm[2]), get(perm[3]));
}

double lattice_t(int q, const Params3& k) { return q + (k.k2 + k.k3 + 1) / 2; }

double phi_n(int n, const WilsonParams& w, double t) {
  if (n < 0) throw DomainError("phi_n: negative degree");
  HypSeriesSpec s;
  s.numerator_params = {-static_cast<double>(n), n + w.sum() - 1, w.alpha - t, w.alpha + t};
  s.denominator_params = {w.alpha + w.beta, w.alpha + w.gamma, w.alpha + w.delta};
  return hyp_pfq(s).value;
}

double wilson_poly(int n, const WilsonParams& w, double t) { return phi_n(n, w, t); }

double phi_lattice(int n, const WilsonParams& w, int q) {
  if (n < 0 || q < 0) throw DomainError("phi_lattice: negative index");
  HypSeriesSpec s;
  s.numerator_params = {-static_cast<double>(n), n + w.sum() - 1, -static_cast<double>(q), 2 * w.alpha + q};
  s.denominator_params = {w.alpha + w.beta, w.alpha + w.gamma, w.alpha + w.delta};
  return hyp_pfq(s).value;
}

double pk_basis(int k, double alpha, double t) { return pochhammer(alpha + t, k) * pochhammer(alpha - t, k); }

double wk_step(int n, int k, const WilsonParams& w, double wk) {
  const double den = (k + 1.0) * (w.alpha + w.beta + k) * (w.alpha + w.gamma + k) * (w.alpha + w.delta + k);
  if (den == 0.0) throw PoleError("w_k recurrence hits a zero denominator");
  return wk * (k - n) * (n + w.sum() - 1 + k) / den;
}

std::vector<double> solve_wk(int n, const WilsonParams& w) {
  if (n < 0) throw DomainError("solve_wk: negative degree");
  std::vector<double> out;
  for (int k = 0; k <= n; ++k) {
    double den = pochhammer(1.0, k) * pochhammer(w.alpha + w.beta, k) * pochhammer(w.alpha + w.gamma, k) *
                 pochhammer(w.alpha + w.delta, k);
    if (den == 0.0) throw PoleError("w_k denominator vanishes");
    out.push_back(pochhammer(-n, k) * pochhammer(n + w.sum() - 1, k) / den);
  }
  return out;
}

double racah_weight(int q, const WilsonParams& w) {
  const double a = w.alpha, b = w.beta, c = w.gamma, d = w.delta;
  SignedLog num = log_pochhammer(2 * a, q) * log_pochhammer(a + 1, q) * log_pochhammer(a + b, q) *
                  log_pochhammer(a + c, q) * log_pochhammer(a + d, q);
  SignedLog den = log_pochhammer(a, q) * log_pochhammer(a - b + 1, q) * log_pochhammer(a - c + 1, q) *
                  log_pochhammer(a - d + 1, q) * log_pochhammer(1.0, q);
  if (den.sign == 0) throw PoleError("racah_weight: vanishing denominator");
  return (num / den).value();
}

SignedLog norm_lambda_gamma_ratio(const WilsonParams& w, double t) {
  SignedLog r = log_gamma(t) / log_gamma(t + 1);
  for (int i = 0; i < 4; ++i) {
    double p = w.get(i);
    r = r * log_gamma(t - p + 1) / log_gamma(t + p);
  }
  return r;
}

double tau_apply(const TFunction& f, double t) {
  require_t(t);
  return (f(t + 0.5) - f(t - 0.5)) / (2 * t);
}

double tau_star_apply(const TFunction& f, const WilsonParams& w, double t) {
  require_t(t);
  double up = 1, dn = 1;
  for (int i = 0; i < 4; ++i) {
    up *= w.get(i) + t;
    dn *= w.get(i) - t;
  }
  return (up * f(t + 0.5) - dn * f(t - 0.5)) / (2 * t);
}

double mu_apply(ParamSlot p1, ParamSlot p2, const WilsonParams& w, const TFunction& f, double t) {
  require_t(t);
  const double a = w.get(static_cast<int>(p1)), b = w.get(static_cast<int>(p2));
  return ((a + t) * (b + t) * f(t + 0.5) - (a - t) * (b - t) * f(t - 0.5)) / (2 * t);
}

double eigen_residual(int n, const WilsonParams& w, double t) {
  TFunction f = [&](double u) { return phi_n(n, w, u); };
  TFunction g = [&](double u) { return tau_apply(f, u); };
  const double lhs = tau_star_apply(g, w, t);
  const double phi = f(t);
  const double lam = n * (n + w.sum() - 1);
  const double scale = std::abs(lhs) + std::abs(lam * phi) + std::abs(phi);
  return scale > 0 ? (lhs - lam * phi) / scale : 0.0;
}

double tau_pk_residual(int k, double alpha, double t) {
  double lhs = tau_apply([&](double u) { return pk_basis(k, alpha, u); }, t);
  double rhs = k == 0 ? 0.0 : -k * pk_basis(k - 1, alpha + 0.5, t);
  return rel(lhs, rhs);
}

double tau_star_pk_residual(int k, const WilsonParams& w, double t) {
  const double a = w.alpha;
  double lhs = tau_star_apply([&](double u) { return pk_basis(k, a + 0.5, u); }, w, t);
  double rhs = -(w.sum() + k) * pk_basis(k + 1, a, t) +
               (a + w.beta + k) * (a + w.gamma + k) * (a + w.delta + k) * pk_basis(k, a, t);
  return rel(lhs, rhs);
}

FamilyFn polynomial_family(int n) {
  return [n](const WilsonParams& w, double t) { return phi_n(n, w, t); };
}

double mu_beta_delta_residual(double n, const WilsonParams& w, double t, const FamilyFn& phi) {
  WilsonParams src = w.shifted(-0.5, 0.5, -0.5, 0.5);
  double lhs = mu_apply(ParamSlot::Beta, ParamSlot::Delta, w, [&](double u) { return phi(src, u); }, t);
  double c = (n + w.beta + w.delta) * (n + w.alpha + w.gamma - 1) / (w.alpha + w.gamma - 1);
  return rel(lhs, c * phi(w, t));
}

double mu_alpha_beta_residual(const WilsonParams& w, double t, const FamilyFn& phi) {
  WilsonParams src = w.shifted(0.5, 0.5, -0.5, -0.5);
  double lhs = mu_apply(ParamSlot::Alpha, ParamSlot::Beta, w, [&](double u) { return phi(src, u); }, t);
  return rel(lhs, (w.alpha + w.beta) * phi(w, t));
}

double mu_alpha_delta_residual(const WilsonParams& w, double t, const FamilyFn& phi) {
  WilsonParams src = w.shifted(0.5, -0.5, -0.5, 0.5);
  double lhs = mu_apply(ParamSlot::Alpha, ParamSlot::Delta, w, [&](double u) { return phi(src, u); }, t);
  return rel(lhs, (w.alpha + w.delta) * phi(w, t));
}

double permutation_invariant(int n, const WilsonParams& w, double t) {
  return pochhammer(w.alpha + w.beta, n) * pochhammer(w.alpha + w.gamma, n) * pochhammer(w.alpha + w.delta, n) *
         phi_n(n, w, t);
}

double permutation_ratio(int n, const WilsonParams& w, const std::array<int, 4>& perm, double t) {
  return permutation_invariant(n, w.permuted(perm), t) / permutation_invariant(n, w, t);
}

std::vector<std::array<int, 4>> all_permutations() {
  std::array<int, 4> p{0, 1, 2, 3};
  std::vector<std::array<int, 4>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

namespace {
double eigvec_residual(const Eigen::MatrixXd& m, double lambda, const Eigen::VectorXd& v) {
  Eigen::VectorXd r = m.transpose() * v - lambda * v;
  double scale = std::max(m.cwiseAbs().maxCoeff(), std::abs(lambda)) * v.cwiseAbs().maxCoeff();
  return scale > 0 ? r.cwiseAbs().maxCoeff() / scale : 0.0;
}
}  // namespace

double recurrence_residual(int q, int N, const Params3& k) {
  if (q < 0 || q > N) throw DomainError("recurrence_residual: q outside 0..N");
  WilsonParams w = WilsonParams::from_sphere(k, N);
  Eigen::VectorXd v(N + 1);
  for (int n = 0; n <= N; ++n) v(n) = phi_lattice(n, w, q);
  return eigvec_residual(l2_matrix(N, k, BasisTag::PsiPrime).entries, l2_eigenvalue(q, k), v);
}

double duality_residual(int n, int N, const Params3& k) {
  if (n < 0 || n > N) throw DomainError("duality_residual: n outside 0..N");
  WilsonParams w = WilsonParams::from_sphere(k, N);
  Eigen::VectorXd v(N + 1);
  for (int q = 0; q <= N; ++q) v(q) = phi_lattice(n, w, q);
  return eigvec_residual(l2_matrix(N, k.swapped13(), BasisTag::PsiPrime).entries, l1_eigenvalue(n, k), v);
}

double GramResult::max_offdiag_ratio() const {
  double r = 0;
  for (int i = 0; i < gram.rows(); ++i)
    for (int j = 0; j < gram.cols(); ++j)
      if (i != j) r = std::max(r, std::abs(gram(i, j)) / std::sqrt(std::abs(gram(i, i) * gram(j, j))));
  return r;
}

bool GramResult::diagonal_positive() const {
  for (int i = 0; i < gram.rows(); ++i)
    if (!(gram(i, i) > 0)) return false;
  return true;
}

GramResult racah_gram(int N, const Params3& k) {
  WilsonParams w = WilsonParams::from_sphere(k, N);
  GramResult r;
  r.gram = Eigen::MatrixXd::Zero(N + 1, N + 1);
  Eigen::MatrixXd phi(N + 1, N + 1);
  for (int q = 0; q <= N; ++q)
    for (int n = 0; n <= N; ++n) phi(n, q) = phi_lattice(n, w, q);
  for (int q = 0; q <= N; ++q) {
    const double wq = racah_weight(q, w);
    r.gram += wq * phi.col(q) * phi.col(q).transpose();
  }
  r.terms = N + 1;
  return r;
}

bool in_wilson_sum_window(const WilsonParams& w, int n_max) {
  const double ab = w.alpha + w.beta, ac = w.alpha + w.gamma, ad = w.alpha + w.delta;
  if (!(w.alpha > 0 && w.alpha < 1 && ab > 0 && ab < 1)) return false;
  if (!(ac < 0 && ad < 0) || ac == std::floor(ac) || ad == std::floor(ad)) return false;
  if (std::floor(ac) != std::floor(ad)) return false;
  // Summand decays like q^(2s-3+4 n_max); keep the exponent below -3.
  return 2 * w.sum() - 3 + 4 * n_max < -3;
}

GramResult wilson_gram(const WilsonParams& w, const WilsonSumPolicy& policy) {
  const int nm = policy.n_max;
  const double a = w.alpha, b = w.beta, c = w.gamma, d = w.delta;
  std::vector<std::vector<long double>> acc(nm + 1, std::vector<long double>(nm + 1, 0.0L));
  std::vector<double> phi(nm + 1);
  long double wq = 1.0L;
  GramResult r;
  int quiet = 0;
  int q = 0;
  for (; q < policy.q_cap; ++q) {
    if (q > 0) {
      const double p = q - 1.0;
      long double num = (2 * a + p) * (a + 1 + p) * (a + b + p) * (a + c + p) * (a + d + p);
      long double den = (a + p) * (a - b + 1 + p) * (a - c + 1 + p) * (a - d + 1 + p) * (p + 1);
      if (den == 0) throw PoleError("wilson_gram: weight denominator vanishes");
      wq *= num / den;
    }
    double term_max = 0;
    for (int n = 0; n <= nm; ++n) {
      phi[n] = phi_lattice(n, w, q);
      term_max = std::max(term_max, static_cast<double>(fabsl(wq * phi[n] * phi[n])));
    }
    for (int i = 0; i <= nm; ++i)
      for (int j = 0; j <= i; ++j) acc[i][j] += wq * phi[i] * phi[j];
    double diag_min = std::numeric_limits<double>::infinity();
    for (int n = 0; n <= nm; ++n) diag_min = std::min(diag_min, static_cast<double>(fabsl(acc[n][n])));
    r.tail_estimate = diag_min > 0 ? term_max * (q + 1) / diag_min : std::numeric_limits<double>::infinity();
    if (q >= 16 && r.tail_estimate < policy.tail_tolerance) {
      if (++quiet >= 4) {
        ++q;
        break;
      }
    } else {
      quiet = 0;
    }
  }
  r.terms = q;
  r.gram = Eigen::MatrixXd(nm + 1, nm + 1);
  for (int i = 0; i <= nm; ++i)
    for (int j = 0; j <= i; ++j) r.gram(i, j) = r.gram(j, i) = static_cast<double>(acc[i][j]);
  return r;
}

}  // namespace racahlab
