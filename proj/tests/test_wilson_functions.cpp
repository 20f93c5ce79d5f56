#include <doctest.h>

#include <cmath>

#include "racahlab/errors.hpp"
#include "racahlab/wilson_functions.hpp"

using namespace racahlab;

namespace {
const WilsonParams kW = WilsonParams::make(0.9, 0.3, 0.7, 1.2);
const double kT = 0.37;
}  // namespace

TEST_CASE("series values against frozen high-precision values") {
  SeriesValue p = phi_general(1.3, kW, kT);
  CHECK(p.value == doctest::Approx(0.406752242327806748817433642228).epsilon(1e-12));
  CHECK(p.trunc.converged);
  SeriesValue s = psi_second(1.3, kW, kT);
  CHECK(s.value == doctest::Approx(0.783827052117841107571529695287).epsilon(1e-12));
  CHECK(s.trunc.converged);
  CHECK(s.trunc.tail_estimate < 1e-12);
}

TEST_CASE("phi_general reduces to the polynomial at integer n") {
  for (int n = 0; n <= 4; ++n) CHECK(phi_general(n, kW, kT).value == doctest::Approx(phi_n(n, kW, kT)).epsilon(1e-13));
}

TEST_CASE("psi_second terminates when 1-n-alpha-beta is a nonpositive integer") {
  // n = 3 - alpha - beta gives 1-n-alpha-beta = -2.
  double n = 3 - kW.alpha - kW.beta;
  SeriesValue s = psi_second(n, kW, kT);
  CHECK(s.trunc.converged);
  CHECK(s.trunc.K <= 3);
  double direct = 0;
  for (int k = 0; k <= 2; ++k)
    direct += pochhammer(-2, k) * pochhammer(n + kW.gamma + kW.delta, k) * pochhammer(1 - kW.beta + kT, k) *
              pochhammer(1 - kW.beta - kT, k) /
              (pochhammer(1, k) * pochhammer(2 - kW.alpha - kW.beta, k) * pochhammer(1 - kW.beta + kW.gamma, k) *
               pochhammer(1 - kW.beta + kW.delta, k));
  CHECK(s.value == doctest::Approx(q_prefactor(kW, kT) * direct).epsilon(1e-13));
}

TEST_CASE("Q basis") {
  CHECK(q_basis(0, kW, kT) == q_prefactor(kW, kT));
  CHECK(q_prefactor(kW, kW.alpha + 2) == 0.0);
  for (int k = 0; k <= 4; ++k) {
    CHECK(std::abs(q_tau_residual(k, kW, kT)) < 1e-11);
    CHECK(std::abs(q_tau_star_residual(k, kW, kT)) < 1e-11);
  }
}

TEST_CASE("residual identities") {
  for (double n : {0.7, 1.3, 2.3, -0.7}) {
    CHECK(std::abs(phi_residual(n, kW, kT)) < 1e-6);
    CHECK(std::abs(psi_residual(n, kW, kT)) < 1e-6);
  }
  // Integer n: the right side vanishes through 1/Gamma(-n).
  for (int n = 0; n <= 3; ++n) {
    ResidualBreakdown r = phi_residual_detail(n, kW, kT);
    CHECK(r.rhs == 0.0);
    CHECK(std::abs(r.relative) < 1e-10);
  }
  // With the constant n(n+s) in place of n(n+s-1) the identity fails.
  CHECK(std::abs(phi_residual_detail(0.7, kW, kT, EigenConstant::Printed).relative) > 1e-2);
  CHECK(eigenvalue(2, kW, EigenConstant::Printed) - eigenvalue(2, kW) == doctest::Approx(2.0));
}

TEST_CASE("Wilson function") {
  for (double n : {-1.7, -0.7, 0.3, 1.3, 2.3}) CHECK(std::abs(wilson_eigen_residual(n, kW, kT)) < 1e-7);
  for (double n : {0.3, 1.3, 2.3}) CHECK(std::abs(wilson_recurrence_residual(n, kW, kT)) < 1e-6);
  FamilyFn f = wilson_function_family(1.3);
  WilsonParams w = WilsonParams::make(1.2, 0.1, 1.3, 1.1);
  CHECK(std::abs(mu_alpha_beta_residual(w, kT, f)) < 1e-7);
  CHECK(std::abs(mu_alpha_delta_residual(w, kT, f)) < 1e-7);
  CHECK(std::abs(mu_beta_delta_residual(1.3, w, kT, f)) < 1e-7);
}

TEST_CASE("the mixing coefficient near integers") {
  CHECK_THROWS_AS(mixing_coefficient(2.0, kW), PoleError);
  CHECK_THROWS_AS(mixing_coefficient(2.0 + 1e-9, kW), PoleError);
  CHECK(mixing_coefficient(2.0, kW, true) == 0.0);
  CHECK(wilson_function(2.0, kW, kT, {}, true).value == doctest::Approx(phi_n(2, kW, kT)).epsilon(1e-14));
  CHECK(std::isfinite(mixing_coefficient(2.0 + 1e-7, kW)));
  for (int m = 0; m <= 2; ++m) {
    LimitCheck l = integer_limit(m, kW, kT);
    CHECK(l.relative < 1e-5);
    CHECK(l.values.size() == 3);
  }
}

TEST_CASE("convergence window") {
  CHECK(in_convergence_window(kW));
  CHECK_FALSE(in_convergence_window(WilsonParams::make(0.9, 1.3, 0.7, 1.2)));
  CHECK_FALSE(in_convergence_window(WilsonParams::make(0.5, -0.6, 0.7, 1.2)));
}
