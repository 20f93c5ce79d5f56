#include "racahlab/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "racahlab/errors.hpp"
#include "racahlab/specialfn.hpp"

namespace racahlab {

namespace {

constexpr double kLn2 = 0.69314718055994530942;

// Jacobi P_n^{(a,b)} and its derivative by the three-term recurrence.
void jacobi_recurrence(int n, double a, double b, double x, double& p, double& dp) {
  double p0 = 1.0;
  double p1 = 0.5 * (a - b + (a + b + 2) * x);
  if (n == 0) {
    p = p0;
    dp = 0;
    return;
  }
  for (int m = 2; m <= n; ++m) {
    const double c = 2 * m + a + b;
    const double p2 = ((c - 1) * (c * (c - 2) * x + a * a - b * b) * p1 - 2 * (m + a - 1) * (m + b - 1) * c * p0) /
                      (2 * m * (m + a + b) * (c - 2));
    p0 = p1;
    p1 = p2;
  }
  p = p1;
  const double c = 2 * n + a + b;
  dp = (n * (a - b - c * x) * p1 + 2 * (n + a) * (n + b) * p0) / (c * (1 - x * x));
}

double log_beta_measure(double a, double b) {
  return (a + b + 1) * kLn2 + log_gamma(a + 1).log_abs + log_gamma(b + 1).log_abs - log_gamma(a + b + 2).log_abs;
}

// Relative error, with the reference floored at 1e-3 of the natural entry scale
// so accidental near-zeros of the polynomial do not dominate.
double guarded_relative(double value, double ref, double scale) {
  return std::abs(value - ref) / std::max(std::abs(ref), 1e-3 * scale);
}

double rho(const Params3& k, double x, double y) {
  const double s1 = (1 - y) * (1 + x) / 4, s2 = (1 - y) * (1 - x) / 4, s3 = (1 + y) / 2;
  return std::pow(s1, k.k1 + 0.5) * std::pow(s2, k.k2 + 0.5) * std::pow(s3, k.k3 + 0.5);
}

}  // namespace

GaussRule gauss_jacobi(int n, double a, double b) {
  if (n < 1) throw DomainError("gauss_jacobi: order must be positive");
  if (!(a > -1 && b > -1)) throw DomainError("gauss_jacobi: exponent <= -1 is not integrable");
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const double c = 2 * i + a + b;
    J(i, i) = i == 0 ? (b - a) / (a + b + 2) : (b * b - a * a) / (c * (c + 2));
    if (i >= 1) {
      const double e = std::sqrt(4.0 * i * (i + a) * (i + b) * (i + a + b) / (c * c * (c + 1) * (c - 1)));
      J(i, i - 1) = J(i - 1, i) = e;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J, Eigen::EigenvaluesOnly);
  GaussRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  const double logc = log_gamma(n + a + 1).log_abs + log_gamma(n + b + 1).log_abs -
                      log_gamma(n + a + b + 1).log_abs - log_gamma(n + 1.0).log_abs + (a + b + 1) * kLn2;
  for (int i = 0; i < n; ++i) {
    double x = es.eigenvalues()(i);
    double p = 0, dp = 0;
    for (int it = 0; it < 8; ++it) {
      jacobi_recurrence(n, a, b, x, p, dp);
      double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16 * std::max(1.0, std::abs(x))) break;
    }
    jacobi_recurrence(n, a, b, x, p, dp);
    r.nodes[i] = x;
    r.weights[i] = std::exp(logc - std::log(1 - x * x) - 2 * std::log(std::abs(dp)));
  }
  return r;
}

QuadratureGrid build_grid(const Params3& k, int order) {
  if (order < 8) throw DomainError("build_grid: order must be at least 8");
  QuadratureGrid g;
  g.k = k;
  g.order = order;
  g.exponents = {k.k2, k.k1, k.k1 + k.k2 + 1, k.k3};
  g.constant = std::exp(-(2 * k.k1 + 2 * k.k2 + k.k3 + 5) * kLn2);
  GaussRule rx = gauss_jacobi(order, g.exponents.x_minus, g.exponents.x_plus);
  GaussRule ry = gauss_jacobi(order, g.exponents.y_minus, g.exponents.y_plus);
  g.xs = rx.nodes;
  g.ys = ry.nodes;
  g.weights.resize(static_cast<std::size_t>(order) * order);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) g.weights[i * order + j] = g.constant * rx.weights[i] * ry.weights[j];
  return g;
}

double grid_measure_exact(const QuadratureGrid& g) {
  const auto& e = g.exponents;
  return g.constant * std::exp(log_beta_measure(e.x_minus, e.x_plus) + log_beta_measure(e.y_minus, e.y_plus));
}

double grid_measure_sum(const QuadratureGrid& g) { return pairwise_sum(g.weights); }

double pairwise_sum(const std::vector<double>& v) {
  std::vector<double> buf(v);
  std::size_t n = buf.size();
  if (n == 0) return 0.0;
  while (n > 1) {
    std::size_t half = (n + 1) / 2;
    for (std::size_t i = 0; i < n / 2; ++i) buf[i] = buf[2 * i] + buf[2 * i + 1];
    if (n % 2) buf[n / 2] = buf[n - 1];
    n = half;
  }
  return buf[0];
}

double inner_product(const ScalarField& f, const ScalarField& g, const QuadratureGrid& grid) {
  std::vector<double> terms(grid.size());
  for (int i = 0; i < grid.order; ++i) {
    for (int j = 0; j < grid.order; ++j) {
      const double x = grid.xs[i], y = grid.ys[j];
      const std::size_t idx = static_cast<std::size_t>(i) * grid.order + j;
      terms[idx] = grid.weights[idx] * f(x, y) * g(x, y) / rho(grid.k, x, y);
    }
  }
  return pairwise_sum(terms);
}

Eigen::MatrixXd psi_reduced_table(int N, const Params3& k, const QuadratureGrid& grid) {
  const int m = grid.order;
  Eigen::MatrixXd A(N + 1, m), B(N + 1, m);
  for (int n = 0; n <= N; ++n) {
    for (int i = 0; i < m; ++i) A(n, i) = jacobi_p(n, k.k2, k.k1, grid.xs[i]);
    for (int j = 0; j < m; ++j)
      B(n, j) = std::pow((1 - grid.ys[j]) / 2, n) * jacobi_p(N - n, 2.0 * n + k.k1 + k.k2 + 1, k.k3, grid.ys[j]);
  }
  Eigen::MatrixXd t(static_cast<Eigen::Index>(m) * m, N + 1);
  for (int n = 0; n <= N; ++n)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) t(i * m + j, n) = A(n, i) * B(n, j);
  return t;
}

Eigen::MatrixXd lambda_reduced_table(int N, const Params3& k, const QuadratureGrid& grid) {
  const int m = grid.order;
  Eigen::MatrixXd t(static_cast<Eigen::Index>(m) * m, N + 1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int q = 0; q <= N; ++q) t(i * m + j, q) = lambda_reduced({N, q}, k, grid.xs[i], grid.ys[j]);
  return t;
}

Eigen::MatrixXd xi_quadrature_matrix(int N, const Params3& k, const QuadratureGrid& grid) {
  if (N < 0) throw DomainError("N must be nonnegative");
  Eigen::MatrixXd P = psi_reduced_table(N, k, grid);
  Eigen::MatrixXd L = lambda_reduced_table(N, k, grid);
  Eigen::MatrixXd xi(N + 1, N + 1);
  std::vector<double> terms(grid.size());
  for (int n = 0; n <= N; ++n) {
    const double fn = rescale_factor({N, n}, k);
    for (int q = 0; q <= N; ++q) {
      for (std::size_t i = 0; i < grid.size(); ++i) terms[i] = grid.weights[i] * P(i, n) * L(i, q);
      xi(n, q) = fn * lambda_rescale_factor({N, q}, k) * pairwise_sum(terms);
    }
  }
  return xi;
}

double xi_quadrature(int N, int n, int q, const Params3& k, const QuadratureGrid& grid) {
  BasisIndex::make(N, n);
  BasisIndex::make(N, q);
  return xi_quadrature_matrix(N, k, grid)(n, q);
}

double expansion_coeff(int N, int n, int q, const Params3& k, const QuadratureGrid& grid) {
  return xi_quadrature(N, n, q, k, grid) / norm_psi_prime_sq({N, n}, k);
}

CheckedValue expansion_coeff_checked(int N, int n, int q, const Params3& k, const QuadratureGrid& grid) {
  CheckedValue c;
  c.value = expansion_coeff(N, n, q, k, grid);
  c.refined = expansion_coeff(N, n, q, k, build_grid(k, 2 * grid.order));
  c.delta = std::abs(c.refined - c.value);
  c.converged = c.delta <= 1e-8 * std::max(1.0, std::abs(c.refined));
  return c;
}

double xi_prefactor(int N, const Params3& k, double c) {
  const double K = k.sum();
  SignedLog g = log_gamma(N + 1.0) / log_gamma(N + K + 2) / log_gamma(k.k2 + 1);
  return 4 * c * (N % 2 ? -1.0 : 1.0) * g.value() / (2 * N + K + 2);
}

double xi_prefactor_printed(int N, const Params3& k, double c) {
  const double K = k.sum();
  SignedLog g = log_gamma(N + 1.0) / log_gamma(N + K + 2) / log_gamma(k.k2 + 1);
  return 4 * c * (2 * N + K + 2) * g.value();
}

double xi_closed_form(int N, int n, int q, const Params3& k) {
  BasisIndex::make(N, n);
  BasisIndex::make(N, q);
  const double K = k.sum();
  HypSeriesSpec s;
  s.numerator_params = {-static_cast<double>(n), k.k1 + k.k2 + n + 1, -static_cast<double>(q), k.k3 + k.k2 + q + 1};
  s.denominator_params = {-static_cast<double>(N), k.k2 + 1, N + K + 2};
  return xi_prefactor(N, k) * hyp_pfq(s).value;
}

ScaleConstant scale_constant_c(const Params3& k, const QuadratureGrid& grid, int N, int n, int q) {
  const double unit = xi_closed_form(N, n, q, k) / kXiScale;
  const double c1 = xi_quadrature(N, n, q, k, grid) / unit;
  const double c2 = xi_quadrature(N, n, q, k, build_grid(k, 2 * grid.order)) / unit;
  return {c2, std::abs(c2 - c1)};
}

bool OrthogonalMatrixReport::pass() const {
  return ortho_defect < tolerance && row_identity < tolerance && column_identity < tolerance;
}

OrthogonalMatrixReport verify_orthogonal_matrix(int N, const Params3& k, const QuadratureGrid& grid) {
  OrthogonalMatrixReport rep;
  rep.N = N;
  Eigen::MatrixXd xi = xi_quadrature_matrix(N, k, grid);
  Eigen::VectorXd np(N + 1), nl(N + 1);
  for (int i = 0; i <= N; ++i) {
    np(i) = norm_psi_prime_sq({N, i}, k);
    nl(i) = norm_lambda_prime_sq({N, i}, k);
  }
  rep.O = np.cwiseSqrt().cwiseInverse().asDiagonal() * xi * nl.cwiseSqrt().cwiseInverse().asDiagonal();
  const auto I = Eigen::MatrixXd::Identity(N + 1, N + 1);
  rep.ortho_defect = std::max((rep.O.transpose() * rep.O - I).cwiseAbs().maxCoeff(),
                              (rep.O * rep.O.transpose() - I).cwiseAbs().maxCoeff());
  Eigen::MatrixXd rows = xi * nl.cwiseInverse().asDiagonal() * xi.transpose();
  Eigen::MatrixXd cols = xi.transpose() * np.cwiseInverse().asDiagonal() * xi;
  for (int a = 0; a <= N; ++a) {
    for (int b = 0; b <= N; ++b) {
      const double sr = std::sqrt(np(a) * np(b)), sc = std::sqrt(nl(a) * nl(b));
      rep.row_identity = std::max(rep.row_identity, std::abs(rows(a, b) - (a == b ? np(a) : 0.0)) / sr);
      rep.column_identity = std::max(rep.column_identity, std::abs(cols(a, b) - (a == b ? nl(a) : 0.0)) / sc);
      const double cf = xi_closed_form(N, a, b, k);
      rep.closed_form_defect =
          std::max(rep.closed_form_defect, guarded_relative(xi(a, b), cf, std::sqrt(np(a) * nl(b))));
    }
  }
  return rep;
}

std::vector<CoefficientRow> coefficient_table(int N, const Params3& k, const QuadratureGrid& grid) {
  Eigen::MatrixXd xi = xi_quadrature_matrix(N, k, grid);
  std::vector<CoefficientRow> rows;
  for (int n = 0; n <= N; ++n) {
    const double np = norm_psi_prime_sq({N, n}, k);
    for (int q = 0; q <= N; ++q) {
      CoefficientRow r;
      r.N = N;
      r.n = n;
      r.q = q;
      r.k = k;
      r.value = xi(n, q) / np;
      r.closed_form = xi_closed_form(N, n, q, k) / np;
      r.rel_error = guarded_relative(xi(n, q), r.closed_form * np, std::sqrt(np * norm_lambda_prime_sq({N, q}, k)));
      rows.push_back(r);
    }
  }
  return rows;
}

namespace {
std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}
}  // namespace

std::string coefficient_table_csv(const std::vector<CoefficientRow>& rows) {
  std::ostringstream os;
  os << "N,n,q,k1,k2,k3,value,closed_form,rel_error\n";
  for (const auto& r : rows) {
    os << r.N << ',' << r.n << ',' << r.q << ',' << fmt(r.k.k1) << ',' << fmt(r.k.k2) << ',' << fmt(r.k.k3) << ','
       << fmt(r.value) << ',' << fmt(r.closed_form) << ',' << fmt(r.rel_error) << '\n';
  }
  return os.str();
}

}  // namespace racahlab
