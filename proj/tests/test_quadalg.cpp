#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "racahlab/quadalg.hpp"

using namespace racahlab;

namespace {
const Params3 kK = Params3::make(0.7, 1.1, 0.4);
}

TEST_CASE("L1 is diagonal and L2 tridiagonal") {
  for (int N = 0; N <= 5; ++N) {
    Eigen::MatrixXd l1 = l1_matrix(N, kK).entries, l2 = l2_matrix(N, kK).entries;
    for (int i = 0; i <= N; ++i)
      for (int j = 0; j <= N; ++j) {
        if (i != j) CHECK(l1(i, j) == 0.0);
        if (std::abs(i - j) > 1) CHECK(l2(i, j) == 0.0);
      }
    for (int n = 0; n <= N; ++n) {
      CHECK(l1(n, n) == doctest::Approx(l1_eigenvalue(n, kK)).epsilon(1e-14));
      L2Coefficients c = l2_coefficients(N, n, kK);
      CHECK(l2(n, n) == doctest::Approx(c.B).epsilon(1e-14));
      if (n < N) CHECK(l2(n + 1, n) == doctest::Approx(c.A).epsilon(1e-14));
      if (n > 0) CHECK(l2(n - 1, n) == doctest::Approx(c.C).epsilon(1e-14));
    }
  }
}

TEST_CASE("displayed middle coefficient differs by a constant") {
  double off = b_printed(3, 1, kK) - l2_coefficients(3, 1, kK).B;
  CHECK(off == doctest::Approx(-0.5 * (kK.k2 * kK.k2 - kK.k1 * kK.k1) + 0.25 - kK.k1 * kK.k1));
  for (int N = 0; N <= 4; ++N)
    for (int n = 0; n <= N; ++n)
      CHECK(b_printed(N, n, kK) - l2_coefficients(N, n, kK).B == doctest::Approx(off).epsilon(1e-12));
}

TEST_CASE("L2 spectrum and symmetry") {
  for (int N = 0; N <= 8; ++N) {
    CHECK(l2_spectrum_defect(N, kK) < 1e-10);
    CHECK(l2_symmetry_defect(N, kK) < 1e-10);
  }
}

TEST_CASE("primed basis is a diagonal similarity") {
  for (int N = 1; N <= 5; ++N) {
    Eigen::MatrixXd a = l2_matrix(N, kK).entries, b = l2_matrix(N, kK, BasisTag::PsiPrime).entries;
    Eigen::VectorXd ea = a.eigenvalues().real(), eb = b.eigenvalues().real();
    std::sort(ea.data(), ea.data() + ea.size());
    std::sort(eb.data(), eb.data() + eb.size());
    CHECK((ea - eb).cwiseAbs().maxCoeff() < 1e-10 * ea.cwiseAbs().maxCoeff());
    CHECK(h_matrix(N, kK).entries(0, 0) == doctest::Approx(energy(N, kK)));
  }
}

TEST_CASE("closure: cyclic orders pass, anticyclic orders flip R") {
  for (int N : {1, 3, 6}) {
    AlgebraMatrices m = algebra_matrices(N, kK);
    auto a = structure_constants(kK);
    CHECK(a[0] == doctest::Approx(kK.a3()));
    for (int i = 0; i < 3; ++i) {
      CHECK(closure_residual(m, a, i).relative() < 1e-10);
      CHECK(closure_residual_anticyclic(m, a, i).relative() > 1e-2);
    }
    CHECK(commutator_consistency(m).relative() < 1e-12);
    AlgebraMatrices mp = algebra_matrices(N, kK, BasisTag::PsiPrime);
    CHECK(closure_residual(mp, a, 0).relative() < 1e-10);
  }
  CHECK(verify_closure(4, kK).pass());
}

TEST_CASE("Casimir: six-term symmetrizer is the consistent convention") {
  for (int N : {0, 2, 5}) {
    AlgebraMatrices m = algebra_matrices(N, kK);
    auto a = structure_constants(kK);
    CHECK(casimir_residual(m, a, Symmetrizer::SixTermSum).relative() < 1e-10);
    if (N > 0) CHECK(casimir_residual(m, a, Symmetrizer::Normalized).relative() > 1e-4);
  }
  CasimirReport r = verify_casimir(4, kK);
  CHECK(r.pass());
  CHECK(r.selected == Symmetrizer::SixTermSum);
}

TEST_CASE("Casimir detects a perturbed structure constant") {
  AlgebraMatrices m = algebra_matrices(4, kK);
  auto a = structure_constants(kK);
  a[1] += 1e-3;
  CHECK(casimir_residual(m, a, Symmetrizer::SixTermSum).relative() > 1e-7);
}
