#include <doctest.h>

#include <cmath>

#include "racahlab/errors.hpp"
#include "racahlab/specialfn.hpp"
#include "racahlab/sphere_basis.hpp"

using namespace racahlab;

namespace {

const Params3 kK = Params3::make(0.7, 1.1, 0.4);

double jacobi_norm(int n, double a, double b) {
  return std::pow(2.0, a + b + 1) * std::tgamma(n + a + 1) * std::tgamma(n + b + 1) /
         ((2 * n + a + b + 1) * std::tgamma(n + 1.0) * std::tgamma(n + a + b + 1));
}

ScalarField psi_field(const BasisIndex& idx, const Params3& k) {
  return [idx, k](double x, double y) { return psi(idx, k, SpherePoint::from_xy(x, y)); };
}

}  // namespace

TEST_CASE("parameters") {
  CHECK_THROWS_AS(Params3::make(0.0, 1.0, 1.0), ParameterError);
  CHECK_THROWS_AS(Params3::make(1.0, -0.2, 1.0), ParameterError);
  CHECK(kK.in_default_domain());
  CHECK_FALSE(Params3::make(3.5, 1, 1).in_default_domain());
  CHECK(kK.a1() == doctest::Approx(0.25 - 0.49));
  CHECK_THROWS_AS(BasisIndex::make(2, 3), DomainError);
}

TEST_CASE("coordinates") {
  for (double x : {-0.9, -0.3, 0.0, 0.55, 0.97})
    for (double y : {-0.95, -0.1, 0.4, 0.9}) {
      SpherePoint p = SpherePoint::from_xy(x, y);
      CHECK(std::abs(p.s1 * p.s1 + p.s2 * p.s2 + p.s3 * p.s3 - 1) < 1e-14);
      CHECK(p.s1 > 0);
      CHECK(p.s2 > 0);
      CHECK(p.s3 > 0);
      auto XY = swap_map(x, y);
      auto back = swap_map(XY[0], XY[1]);
      CHECK(std::abs(back[0] - x) < 1e-12);
      CHECK(std::abs(back[1] - y) < 1e-12);
      SpherePoint q = p.swapped13();
      CHECK(std::abs(q.x - XY[0]) < 1e-12);
      CHECK(std::abs(q.y - XY[1]) < 1e-12);
    }
  CHECK_THROWS(SpherePoint::from_ambient(0.5, 0.5, 0.5));
  CHECK_THROWS(SpherePoint::from_xy(1.0, 0.2));
}

TEST_CASE("norm formula against the Jacobi-product form") {
  for (int N = 0; N <= 5; ++N)
    for (int n = 0; n <= N; ++n) {
      BasisIndex idx = BasisIndex::make(N, n);
      const double C = std::pow(2.0, -2 * kK.k1 - 2 * kK.k2 - kK.k3 - 5);
      double oracle = C * jacobi_norm(n, kK.k2, kK.k1) * std::pow(2.0, -2 * n) *
                      jacobi_norm(N - n, 2 * n + kK.k1 + kK.k2 + 1, kK.k3);
      CHECK(std::abs(norm_psi_sq(idx, kK) / oracle - 1) < 1e-12);
      double r = rescale_factor(idx, kK);
      CHECK(std::abs(norm_psi_prime_sq(idx, kK) / (r * r * oracle) - 1) < 1e-12);
    }
}

TEST_CASE("primed functions are rescaled copies") {
  SpherePoint p = SpherePoint::from_xy(0.3, -0.2);
  for (int N = 0; N <= 4; ++N)
    for (int n = 0; n <= N; ++n) {
      BasisIndex idx = BasisIndex::make(N, n);
      double ratio = psi_prime(idx, kK, p) / psi(idx, kK, p);
      double oracle = std::pow(-1.0, n) * std::tgamma(n + 1.0) * std::tgamma(N - n + 1.0) /
                      (std::tgamma(N - n + kK.k3 + 1) * std::tgamma(n + kK.k2 + 1));
      CHECK(std::abs(ratio / oracle - 1) < 1e-12);
      CHECK(std::abs(lambda_basis(idx, kK, p) - psi(idx, kK.swapped13(), p.swapped13())) < 1e-15);
    }
}

TEST_CASE("analytic jets match finite differences") {
  SpherePoint p = SpherePoint::from_xy(-0.35, 0.25);
  for (int N = 0; N <= 4; ++N)
    for (int n = 0; n <= N; ++n) {
      BasisIndex idx = BasisIndex::make(N, n);
      Jet1 j = psi_jet(idx, kK, p);
      ScalarField f = psi_field(idx, kK);
      CHECK(std::abs(j.v - f(p.x, p.y)) < 1e-15);
      CHECK(std::abs(j.dx - fd_dx(f, p.x, p.y)) < 1e-9 * (1 + std::abs(j.dx)));
      CHECK(std::abs(j.dy - fd_dy(f, p.x, p.y)) < 1e-9 * (1 + std::abs(j.dy)));
    }
}

TEST_CASE("fd_jet on Chebyshev test fields") {
  TestField t{3, 2};
  ScalarField f = t.field();
  Jet2 a = t.jet(0.2, -0.4), b = fd_jet(f, 0.2, -0.4);
  CHECK(std::abs(a.dxx - b.dxx) < 1e-7);
  CHECK(std::abs(a.dxy - b.dxy) < 1e-7);
  CHECK(std::abs(a.dyy - b.dyy) < 1e-7);
  CHECK_THROWS_AS(fd_jet(f, 0.9995, 0.0), DomainError);
}

TEST_CASE("eigenfunctions of H, L1 and L2") {
  for (int N = 0; N <= 3; ++N)
    for (int n = 0; n <= N; ++n) {
      BasisIndex idx = BasisIndex::make(N, n);
      SpherePoint p = SpherePoint::from_xy(0.15 * n - 0.2, 0.1 * N - 0.3);
      ScalarField f = psi_field(idx, kK);
      double v = f(p.x, p.y);
      double h = apply_diffop(SymOp::H, kK, f, p);
      CHECK(std::abs(h - energy(N, kK) * v) < 1e-6 * std::abs(energy(N, kK) * v));
      double l1 = apply_diffop(SymOp::L1, kK, f, p);
      CHECK(std::abs(l1 - l1_eigenvalue(n, kK) * v) < 1e-6 * (std::abs(l1) + std::abs(v)));
      CHECK(std::abs(l1 - l1_eigenvalue_alt(n, kK) * v) > 1e-3 * std::abs(l1));
      ScalarField g = [&](double x, double y) { return lambda_basis(idx, kK, SpherePoint::from_xy(x, y)); };
      double l2 = apply_diffop(SymOp::L2, kK, g, p);
      double u = g(p.x, p.y);
      CHECK(std::abs(l2 - l2_eigenvalue(n, kK) * u) < 1e-6 * (std::abs(l2) + std::abs(u)));
    }
}

TEST_CASE("ladder targets and zero images") {
  CHECK_THROWS_AS(ladder_target(Ladder::T, kK), ParameterError);
  Params3 big = Params3::make(1.6, 1.3, 0.7);
  Params3 t = ladder_target(Ladder::T, big);
  CHECK(t.k1 == doctest::Approx(0.6));
  CHECK(ladder_action(Ladder::TStar, BasisIndex::make(3, 0), big).empty());
  CHECK(ladder_action(Ladder::UPlusPlusMinusMinus, BasisIndex::make(3, 3), big).empty());
  CHECK(ladder_action(Ladder::V, BasisIndex::make(3, 1), big).size() == 2);
  SpherePoint p = SpherePoint::from_xy(0.23, -0.41);
  BasisIndex idx = BasisIndex::make(2, 0);
  double z = apply_ladder(Ladder::TStar, big, 2, psi_field(idx, big), p);
  CHECK(std::abs(z) < 1e-10 * std::abs(psi(idx, big, p)));
}

TEST_CASE("ladder actions pointwise with analytic jets") {
  Params3 k = Params3::make(1.6, 1.3, 0.7);
  SpherePoint p = SpherePoint::from_xy(0.23, -0.41);
  for (Ladder l : {Ladder::T, Ladder::TStar, Ladder::UPlusPlusMinusMinus, Ladder::UPlusMinusMinusPlus, Ladder::V}) {
    Params3 kt = ladder_target(l, k);
    for (int N = 1; N <= 3; ++N)
      for (int n = 0; n <= N; ++n) {
        BasisIndex idx = BasisIndex::make(N, n);
        double lhs = apply_ladder_jet(l, k, N, psi_jet(idx, k, p), p);
        double rhs = 0;
        for (const auto& t : ladder_action(l, idx, k)) rhs += t.coefficient * psi(t.target, kt, p);
        CHECK(std::abs(lhs - rhs) < 1e-12 * std::max(std::abs(rhs), std::abs(psi(idx, k, p))));
      }
  }
}

TEST_CASE("displayed U(+,-,-,+) potential sign is wrong") {
  Params3 k = Params3::make(1.6, 1.3, 0.7);
  SpherePoint p = SpherePoint::from_xy(0.23, -0.41);
  BasisIndex idx = BasisIndex::make(2, 1);
  Jet1 j = psi_jet(idx, k, p);
  double good = ladder_coeffs(Ladder::UPlusMinusMinusPlus, k, 2, p.x, p.y).apply(j);
  double shown = u_pmmp_printed_coeffs(k, 2, p.x, p.y).apply(j);
  double expect = (1 + 2 + k.sum() + 2) * psi(idx, ladder_target(Ladder::V, k), p);
  CHECK(std::abs(good - expect) < 1e-12 * std::abs(expect));
  CHECK(std::abs(shown - expect) > 1e-3 * std::abs(expect));
}

TEST_CASE("V is not a strict intertwiner") {
  // The image of an H eigenfunction spans two energy levels at k3+1; pinned as an O(1) defect.
  Params3 k = Params3::make(0.9, 0.6, 1.2);
  Params3 kt = ladder_target(Ladder::V, k);
  BasisIndex idx = BasisIndex::make(2, 0);
  ScalarField vf = apply_V(k, psi_field(idx, k));
  SpherePoint p = SpherePoint::from_xy(0.1, -0.2);
  double hv = apply_diffop(SymOp::H, kt, vf, p);
  double vh = energy(2, k) * vf(p.x, p.y);
  CHECK(std::abs(hv - vh) > 0.1 * std::abs(vh));
}
