#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "racahlab/sphere_basis.hpp"

namespace racahlab {

inline constexpr int kDefaultGridOrder = 48;

struct GaussRule {
  std::vector<double> nodes, weights;
};

// Nodes and weights for the weight (1-x)^a (1+x)^b on [-1, 1].
GaussRule gauss_jacobi(int order, double a, double b);

struct ExponentProfile {
  double x_minus = 0;  // exponent of (1-x)
  double x_plus = 0;   // exponent of (1+x)
  double y_minus = 0;  // exponent of (1-y)
  double y_plus = 0;   // exponent of (1+y)
};

// Tensor-product rule carrying rho dA with rho = (s1 s2 s3)^(2k+1), so that
// sum_i weight_i g(node_i) = integral of rho g dA.
struct QuadratureGrid {
  Params3 k;
  int order = 0;
  ExponentProfile exponents;
  double constant = 1;  // dA rho = constant (1+x)^k1 (1-x)^k2 (1-y)^(k1+k2+1) (1+y)^k3 dx dy
  std::vector<double> xs, ys;
  std::vector<double> weights;  // row-major, index i * order + j for (xs[i], ys[j])
  std::size_t size() const { return weights.size(); }
};

QuadratureGrid build_grid(const Params3& k, int order = kDefaultGridOrder);
double grid_measure_exact(const QuadratureGrid& grid);
double grid_measure_sum(const QuadratureGrid& grid);

// Pairwise summation in a fixed tree, independent of any threading.
double pairwise_sum(const std::vector<double>& v);

// Integral of f g over the octant with the area measure dA.
double inner_product(const ScalarField& f, const ScalarField& g, const QuadratureGrid& grid);

// Values of the reduced basis functions at the grid nodes, one column per n (or q).
Eigen::MatrixXd psi_reduced_table(int N, const Params3& k, const QuadratureGrid& grid);
Eigen::MatrixXd lambda_reduced_table(int N, const Params3& k, const QuadratureGrid& grid);

// Xi'(n, N, q) = <Lambda'_{N-q,q}, Psi'_{N-n,n}>; entry (n, q).
Eigen::MatrixXd xi_quadrature_matrix(int N, const Params3& k, const QuadratureGrid& grid);
double xi_quadrature(int N, int n, int q, const Params3& k, const QuadratureGrid& grid);

// R'^n_q = Xi' / ||Psi'_{N-n,n}||^2 with the closed-form norm.
double expansion_coeff(int N, int n, int q, const Params3& k, const QuadratureGrid& grid);

struct CheckedValue {
  double value = 0;
  double refined = 0;
  double delta = 0;
  bool converged = true;
};

// expansion_coeff at grid.order and at twice the order; flagged when they differ by > 1e-8.
CheckedValue expansion_coeff_checked(int N, int n, int q, const Params3& k, const QuadratureGrid& grid);

inline constexpr double kXiScale = 1.0 / 16.0;

// G(N, k) = 4c (-1)^N N! / ((2N+K+2) Gamma(N+K+2) Gamma(k2+1)).
double xi_prefactor(int N, const Params3& k, double c = kXiScale);
// 4c (2N+K+2) Gamma(N+1) / (Gamma(N+K+2) Gamma(k2+1)), the prefactor as originally displayed.
double xi_prefactor_printed(int N, const Params3& k, double c = kXiScale);
double xi_closed_form(int N, int n, int q, const Params3& k);

struct ScaleConstant {
  double c = 0;
  double error_estimate = 0;
};

// c matched at (n, q, N) = (0, 0, 0) by default; the error is the order-doubling difference.
ScaleConstant scale_constant_c(const Params3& k, const QuadratureGrid& grid, int N = 0, int n = 0, int q = 0);

struct OrthogonalMatrixReport {
  int N = 0;
  Eigen::MatrixXd O;
  double ortho_defect = 0;       // max |O^T O - I|, |O O^T - I|
  double row_identity = 0;       // sum_q Xi'(n1) Xi'(n2) / |Lambda'|^2 vs |Psi'|^2 delta
  double column_identity = 0;    // sum_l Xi'(q1) Xi'(q2) / |Psi'|^2 vs |Lambda'|^2 delta
  double closed_form_defect = 0; // max relative |Xi'_quad - Xi'_closed|
  double tolerance = 1e-8;
  bool pass() const;
};

OrthogonalMatrixReport verify_orthogonal_matrix(int N, const Params3& k, const QuadratureGrid& grid);

struct CoefficientRow {
  int N = 0, n = 0, q = 0;
  Params3 k;
  double value = 0;        // R'^n_q by quadrature
  double closed_form = 0;  // xi_closed_form / ||Psi'||^2
  double rel_error = 0;
};

std::vector<CoefficientRow> coefficient_table(int N, const Params3& k, const QuadratureGrid& grid);
std::string coefficient_table_csv(const std::vector<CoefficientRow>& rows);

}  // namespace racahlab
