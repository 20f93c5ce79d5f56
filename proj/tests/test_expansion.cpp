#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "racahlab/errors.hpp"
#include "racahlab/expansion.hpp"
#include "racahlab/specialfn.hpp"

using namespace racahlab;

namespace {
const Params3 kK = Params3::make(0.5, 0.8, 1.2);
}

TEST_CASE("Gauss-Jacobi rule is exact on polynomials") {
  const double a = 0.7, b = 1.9;
  GaussRule r = gauss_jacobi(12, a, b);
  for (int n = 0; n <= 23; ++n) {
    double s = 0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * std::pow((1 + r.nodes[i]) / 2, n);
    const double m = std::exp((a + b + 1) * std::log(2.0) + std::lgamma(a + 1) + std::lgamma(b + n + 1) -
                              std::lgamma(a + b + n + 2));
    CHECK(std::abs(s - m) < 1e-12 * std::max(1.0, std::abs(m)));
  }
  CHECK_THROWS_AS(gauss_jacobi(0, a, b), DomainError);
  CHECK_THROWS_AS(gauss_jacobi(4, -1.0, b), DomainError);
}

TEST_CASE("grid self-calibration") {
  QuadratureGrid g = build_grid(kK, 24);
  CHECK(g.size() == 24u * 24u);
  CHECK(std::abs(grid_measure_sum(g) / grid_measure_exact(g) - 1) < 1e-12);
  std::vector<double> v(1000, 0.1);
  CHECK(pairwise_sum(v) == doctest::Approx(100.0).epsilon(1e-15));
}

TEST_CASE("basis norms and orthogonality on the grid") {
  QuadratureGrid g = build_grid(kK, kDefaultGridOrder);
  for (int N = 0; N <= 3; ++N)
    for (int n = 0; n <= N; ++n) {
      BasisIndex a = BasisIndex::make(N, n);
      ScalarField fa = [&](double x, double y) { return psi(a, kK, SpherePoint::from_xy(x, y)); };
      CHECK(std::abs(inner_product(fa, fa, g) / norm_psi_sq(a, kK) - 1) < 1e-10);
      for (int m = 0; m < n; ++m) {
        BasisIndex b = BasisIndex::make(N, m);
        ScalarField fb = [&](double x, double y) { return psi(b, kK, SpherePoint::from_xy(x, y)); };
        CHECK(std::abs(inner_product(fa, fb, g)) < 1e-10 * norm_psi_sq(a, kK));
      }
    }
}

TEST_CASE("Xi' by quadrature and in closed form") {
  QuadratureGrid g = build_grid(kK, kDefaultGridOrder);
  for (int N = 0; N <= 4; ++N) {
    Eigen::MatrixXd X = xi_quadrature_matrix(N, kK, g);
    for (int n = 0; n <= N; ++n)
      for (int q = 0; q <= N; ++q) {
        double c = xi_closed_form(N, n, q, kK);
        CHECK(std::abs(X(n, q) - c) < 1e-10 * std::max(std::abs(c), X.cwiseAbs().maxCoeff()));
      }
  }
  CheckedValue v = expansion_coeff_checked(3, 1, 2, kK, g);
  CHECK(v.converged);
  CHECK(v.delta < 1e-10);
}

TEST_CASE("scale constant and prefactor forms") {
  QuadratureGrid g = build_grid(kK, kDefaultGridOrder);
  ScaleConstant c = scale_constant_c(kK, g);
  CHECK(c.c == doctest::Approx(1.0 / 16).epsilon(1e-10));
  CHECK(c.error_estimate < 1e-10);
  CHECK(scale_constant_c(kK, g, 3, 1, 2).c == doctest::Approx(1.0 / 16).epsilon(1e-10));
  for (int N = 0; N <= 4; ++N) {
    double K = kK.sum();
    double ratio = xi_prefactor_printed(N, kK) / xi_prefactor(N, kK);
    CHECK(ratio == doctest::Approx(std::pow(-1.0, N) * (2 * N + K + 2) * (2 * N + K + 2)).epsilon(1e-12));
  }
}

TEST_CASE("orthogonal coefficient matrix") {
  QuadratureGrid g = build_grid(kK, kDefaultGridOrder);
  for (int N = 0; N <= 6; ++N) {
    OrthogonalMatrixReport r = verify_orthogonal_matrix(N, kK, g);
    CHECK(r.pass());
    CHECK(r.ortho_defect < 1e-8);
    CHECK(r.closed_form_defect < 1e-6);
  }
}

TEST_CASE("coefficient table CSV") {
  QuadratureGrid g = build_grid(kK, kDefaultGridOrder);
  auto rows = coefficient_table(3, kK, g);
  CHECK(rows.size() == 16);
  std::string csv = coefficient_table_csv(rows);
  std::istringstream is(csv);
  std::string line;
  std::getline(is, line);
  CHECK(line == "N,n,q,k1,k2,k3,value,closed_form,rel_error");
  int count = 0;
  while (std::getline(is, line)) {
    ++count;
    CHECK(line.rfind("3,", 0) == 0);
  }
  CHECK(count == 16);
  for (const auto& r : rows) CHECK(r.rel_error < 1e-6);
}
