#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "racahlab/errors.hpp"
#include "racahlab/quadalg.hpp"
#include "racahlab/wilson_racah.hpp"

using namespace racahlab;

namespace {
const Params3 kK = Params3::make(0.7, 1.1, 0.4);
const WilsonParams kW = WilsonParams::make(0.9, 0.3, 0.7, 1.2);
}  // namespace

TEST_CASE("dictionary") {
  WilsonParams w = WilsonParams::from_sphere(kK, 5);
  CHECK(w.alpha == doctest::Approx((1.1 + 0.4 + 1) / 2));
  CHECK(w.provenance.has_value());
  auto b = w.to_sphere();
  CHECK(b[0] == doctest::Approx(0.7).epsilon(1e-14));
  CHECK(b[1] == doctest::Approx(1.1).epsilon(1e-14));
  CHECK(b[2] == doctest::Approx(0.4).epsilon(1e-14));
  CHECK(b[3] == doctest::Approx(5.0).epsilon(1e-14));
  CHECK(lattice_t(2, kK) == doctest::Approx(w.alpha + 2));
  CHECK(w.t0 == w.alpha);
  CHECK_THROWS(WilsonParams::make(NAN, 0, 0, 0));
}

TEST_CASE("Phi_n basics") {
  CHECK(phi_n(0, kW, 0.37) == 1.0);
  for (int n = 1; n <= 6; ++n) {
    CHECK(phi_n(n, kW, 0.37) == doctest::Approx(phi_n(n, kW, -0.37)).epsilon(1e-12));
    CHECK(wilson_poly(n, kW, 1.3) == phi_n(n, kW, 1.3));
  }
  WilsonParams w = WilsonParams::from_sphere(kK, 4);
  for (int n = 0; n <= 4; ++n)
    for (int q = 0; q <= 4; ++q)
      CHECK(phi_lattice(n, w, q) == doctest::Approx(phi_n(n, w, lattice_t(q, kK))).epsilon(1e-10));
}

TEST_CASE("Phi_n is a polynomial of degree n in t^2") {
  // Divided differences in u = t^2: order n is constant, order n+1 vanishes.
  for (int n = 0; n <= 5; ++n) {
    std::vector<double> u, f;
    for (int i = 0; i <= n + 1; ++i) {
      double t = 0.3 + 0.37 * i;
      u.push_back(t * t);
      f.push_back(phi_n(n, kW, t));
    }
    for (int lvl = 1; lvl <= n + 1; ++lvl)
      for (int i = n + 1; i >= lvl; --i) f[i] = (f[i] - f[i - 1]) / (u[i] - u[i - lvl]);
    CHECK(std::abs(f[n + 1]) < 1e-9 * std::max(1.0, std::abs(f[n])));
    CHECK(std::abs(f[n]) > 1e-12);
  }
}

TEST_CASE("w_k expansion and step") {
  for (int n = 0; n <= 6; ++n) {
    auto w = solve_wk(n, kW);
    CHECK(w[0] == 1.0);
    double s = 0, t = 0.81;
    for (int k = 0; k <= n; ++k) s += w[k] * pk_basis(k, kW.alpha, t);
    CHECK(s == doctest::Approx(phi_n(n, kW, t)).epsilon(1e-12));
    for (int k = 0; k < n; ++k) CHECK(wk_step(n, k, kW, w[k]) == doctest::Approx(w[k + 1]).epsilon(1e-13));
  }
}

TEST_CASE("difference operators") {
  CHECK_THROWS_AS(tau_apply([](double) { return 1.0; }, 0.0), DomainError);
  for (int n = 0; n <= 8; ++n) CHECK(std::abs(eigen_residual(n, kW, 0.83)) < 1e-10);
  for (int k = 0; k <= 6; ++k) {
    CHECK(std::abs(tau_pk_residual(k, kW.alpha, 0.83)) < 1e-12);
    CHECK(std::abs(tau_star_pk_residual(k, kW, 0.83)) < 1e-12);
  }
  for (int n = 0; n <= 5; ++n) {
    CHECK(std::abs(mu_alpha_beta_residual(kW, 0.83, polynomial_family(n))) < 1e-10);
    CHECK(std::abs(mu_alpha_delta_residual(kW, 0.83, polynomial_family(n))) < 1e-10);
    CHECK(std::abs(mu_beta_delta_residual(n, kW, 0.83, polynomial_family(n))) < 1e-10);
  }
}

TEST_CASE("permutation invariance") {
  auto perms = all_permutations();
  CHECK(perms.size() == 24);
  for (const auto& p : perms)
    for (int n = 0; n <= 6; ++n) CHECK(permutation_ratio(n, kW, p, 0.61) == doctest::Approx(1.0).epsilon(1e-10));
  WilsonParams q = kW.permuted({1, 0, 3, 2});
  CHECK(q.alpha == kW.beta);
  CHECK(q.delta == kW.gamma);
}

TEST_CASE("recurrence: N = 1 by hand") {
  // For N = 1 the eigenvector of the 2x2 transposed matrix with eigenvalue lambda_q
  // is (1, (lambda_q - M00) / M10); compare with (Phi_0, Phi_1)(t_q).
  Eigen::MatrixXd M = l2_matrix(1, kK, BasisTag::PsiPrime).entries;
  WilsonParams w = WilsonParams::from_sphere(kK, 1);
  for (int q = 0; q <= 1; ++q) {
    double lam = l2_eigenvalue(q, kK);
    double v1 = (lam - M(0, 0)) / M(1, 0);
    CHECK(phi_lattice(1, w, q) == doctest::Approx(v1).epsilon(1e-10));
    CHECK(recurrence_residual(q, 1, kK) < 1e-10);
  }
  for (int q = 0; q <= 5; ++q) CHECK(recurrence_residual(q, 5, kK) < 1e-9);
  for (int n = 0; n <= 5; ++n) CHECK(duality_residual(n, 5, kK) < 1e-9);
}

TEST_CASE("Racah orthogonality and weights") {
  WilsonParams w = WilsonParams::from_sphere(kK, 6);
  for (int q = 0; q <= 6; ++q) CHECK(racah_weight(q, w) > 0);
  CHECK(racah_weight(0, w) == 1.0);
  for (int N = 0; N <= 10; ++N) {
    GramResult g = racah_gram(N, kK);
    CHECK(g.diagonal_positive());
    CHECK(g.max_offdiag_ratio() < 1e-9);
  }
}

TEST_CASE("infinite Wilson sum in the documented window") {
  WilsonParams w = WilsonParams::make(0.6, 0.2, -11.1, -10.85);
  CHECK(in_wilson_sum_window(w));
  CHECK_FALSE(in_wilson_sum_window(kW));
  GramResult g = wilson_gram(w);
  CHECK(g.diagonal_positive());
  CHECK(g.max_offdiag_ratio() < 1e-8);
  CHECK(g.tail_estimate < 1e-12);
}
