#include "racahlab/quadalg.hpp"

#include <algorithm>
#include <cmath>

#include "racahlab/errors.hpp"

namespace racahlab {

namespace {

using Eigen::MatrixXd;

void require_level(int N) {
  if (N < 0) throw DomainError("energy level N must be nonnegative");
}

double maxabs(const MatrixXd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

MatrixXd anti(const MatrixXd& a, const MatrixXd& b) { return a * b + b * a; }

OperatorMatrix to_basis(MatrixXd m, int N, const Params3& k, BasisTag tag) {
  if (tag == BasisTag::PsiPrime) {
    for (int r = 0; r <= N; ++r) {
      double fr = rescale_factor({N, r}, k);
      for (int c = 0; c <= N; ++c) {
        if (m(r, c) != 0.0) m(r, c) *= rescale_factor({N, c}, k) / fr;
      }
    }
  }
  return {std::move(m), tag};
}

Residual residual_of(const MatrixXd& lhs, const MatrixXd& rhs, std::initializer_list<double> terms) {
  Residual r;
  r.absolute = maxabs(lhs - rhs);
  r.scale = std::max(maxabs(lhs), maxabs(rhs));
  for (double t : terms) r.scale = std::max(r.scale, t);
  return r;
}

Residual closure_for(const AlgebraMatrices& m, const std::array<double, 3>& a, int i, int j, int kk) {
  const MatrixXd* L[3] = {&m.L1, &m.L2, &m.L3};
  const MatrixXd& Li = *L[i];
  const MatrixXd& Lj = *L[j];
  const MatrixXd& Lk = *L[kk];
  const auto n = Li.rows();
  MatrixXd lhs = Li * m.R - m.R * Li;
  MatrixXd t1 = 4 * anti(Li, Lk);
  MatrixXd t2 = 4 * anti(Li, Lj);
  MatrixXd t3 = (8 + 16 * a[j]) * Lj;
  MatrixXd t4 = (8 + 16 * a[kk]) * Lk;
  MatrixXd t5 = 8 * (a[j] - a[kk]) * MatrixXd::Identity(n, n);
  MatrixXd rhs = t1 - t2 - t3 + t4 + t5;
  return residual_of(lhs, rhs, {maxabs(t1), maxabs(t2), maxabs(t3), maxabs(t4), maxabs(t5)});
}

}  // namespace

L2Coefficients l2_coefficients(int N, int n, const Params3& k) {
  require_level(N);
  const double k1 = k.k1, k2 = k.k2, k3 = k.k3, K = k.sum();
  const double s = 2.0 * n + k1 + k2;
  const double E = 2.0 * N + K + 2.0;
  L2Coefficients c;
  c.A = -4.0 * (N + k3 - n) * (N + n + K + 2.0) * (n + 1.0) * (n + k1 + k2 + 1.0) / ((s + 2) * (s + 1));
  c.C = -4.0 * (N - n + 1.0) * (N + n + k1 + k2 + 1.0) * (n + k1) * (n + k2) / (s * (s + 1));
  c.B = -(k1 * k1 - k2 * k2) * (k3 * k3 - E * E) / (2 * (s + 2) * s) + 0.5 * (s + 1) * (s + 1) +
        0.5 * (k2 * k2 - k1 * k1) - 0.5 * E * E + 0.5 * k3 * k3;
  return c;
}

double b_printed(int N, int n, const Params3& k) {
  return l2_coefficients(N, n, k).B - 0.5 * (k.k2 * k.k2 - k.k1 * k.k1) + 0.25 - k.k1 * k.k1;
}

OperatorMatrix l1_matrix(int N, const Params3& k, BasisTag tag) {
  require_level(N);
  MatrixXd m = MatrixXd::Zero(N + 1, N + 1);
  for (int n = 0; n <= N; ++n) m(n, n) = l1_eigenvalue(n, k);
  return {std::move(m), tag};
}

OperatorMatrix l2_matrix(int N, const Params3& k, BasisTag tag) {
  require_level(N);
  MatrixXd m = MatrixXd::Zero(N + 1, N + 1);
  for (int n = 0; n <= N; ++n) {
    L2Coefficients c = l2_coefficients(N, n, k);
    m(n, n) = c.B;
    if (n + 1 <= N) m(n + 1, n) = c.A;
    if (n >= 1) m(n - 1, n) = c.C;
  }
  return to_basis(std::move(m), N, k, tag);
}

OperatorMatrix l3_matrix(int N, const Params3& k, BasisTag tag) {
  MatrixXd m = (energy(N, k) - k.a1() - k.a2() - k.a3()) * MatrixXd::Identity(N + 1, N + 1) -
               l1_matrix(N, k, tag).entries - l2_matrix(N, k, tag).entries;
  return {std::move(m), tag};
}

OperatorMatrix h_matrix(int N, const Params3& k, BasisTag tag) {
  require_level(N);
  return {energy(N, k) * MatrixXd::Identity(N + 1, N + 1), tag};
}

std::array<double, 3> structure_constants(const Params3& k) { return {k.a3(), k.a1(), k.a2()}; }

AlgebraMatrices algebra_matrices(int N, const Params3& k, BasisTag tag) {
  AlgebraMatrices m;
  m.L1 = l1_matrix(N, k, tag).entries;
  m.L2 = l2_matrix(N, k, tag).entries;
  m.L3 = l3_matrix(N, k, tag).entries;
  m.R = m.L1 * m.L2 - m.L2 * m.L1;
  return m;
}

Residual closure_residual(const AlgebraMatrices& m, const std::array<double, 3>& a, int i) {
  return closure_for(m, a, i, (i + 1) % 3, (i + 2) % 3);
}

Residual closure_residual_anticyclic(const AlgebraMatrices& m, const std::array<double, 3>& a, int i) {
  return closure_for(m, a, i, (i + 2) % 3, (i + 1) % 3);
}

Residual casimir_residual(const AlgebraMatrices& m, const std::array<double, 3>& a, Symmetrizer s) {
  const MatrixXd &A = m.L1, &B = m.L2, &C = m.L3;
  const auto n = A.rows();
  MatrixXd sym = A * B * C + A * C * B + B * A * C + B * C * A + C * A * B + C * B * A;
  if (s == Symmetrizer::Normalized) sym /= 6.0;
  MatrixXd t1 = (8.0 / 3.0) * sym;
  MatrixXd t2 = (16 * a[0] + 12) * A * A + (16 * a[1] + 12) * B * B + (16 * a[2] + 12) * C * C;
  MatrixXd t3 = (52.0 / 3.0) * (anti(A, B) + anti(B, C) + anti(C, A));
  MatrixXd t4 = ((16 + 176 * a[0]) * A + (16 + 176 * a[1]) * B + (16 + 176 * a[2]) * C) / 3.0;
  double c0 = 32.0 / 3.0 * (a[0] + a[1] + a[2]) + 48 * (a[0] * a[1] + a[1] * a[2] + a[2] * a[0]) +
              64 * a[0] * a[1] * a[2];
  MatrixXd rhs = t1 - t2 + t3 + t4 + c0 * MatrixXd::Identity(n, n);
  MatrixXd lhs = m.R * m.R;
  return residual_of(lhs, rhs, {maxabs(t1), maxabs(t2), maxabs(t3), maxabs(t4), std::abs(c0)});
}

Residual commutator_consistency(const AlgebraMatrices& m) {
  MatrixXd r23 = m.L2 * m.L3 - m.L3 * m.L2;
  MatrixXd r31 = m.L3 * m.L1 - m.L1 * m.L3;
  Residual r;
  r.absolute = std::max(maxabs(r23 - m.R), maxabs(r31 - m.R));
  double lscale = std::max({maxabs(m.L1), maxabs(m.L2), maxabs(m.L3)});
  r.scale = std::max(maxabs(m.R), lscale * lscale);
  return r;
}

bool ClosureReport::pass() const {
  for (const auto& r : assignments)
    if (!(r.relative() < tolerance)) return false;
  return r_consistency.relative() < tolerance;
}

ClosureReport verify_closure(int N, const Params3& k) {
  ClosureReport rep;
  rep.N = N;
  rep.k = k;
  AlgebraMatrices m = algebra_matrices(N, k);
  auto a = structure_constants(k);
  for (int i = 0; i < 3; ++i) rep.assignments[i] = closure_residual(m, a, i);
  rep.r_consistency = commutator_consistency(m);
  return rep;
}

bool CasimirReport::pass() const {
  const Residual& r = selected == Symmetrizer::SixTermSum ? six_term : normalized;
  return r.relative() < tolerance;
}

CasimirReport verify_casimir(int N, const Params3& k) {
  CasimirReport rep;
  rep.N = N;
  rep.k = k;
  AlgebraMatrices m = algebra_matrices(N, k);
  auto a = structure_constants(k);
  rep.six_term = casimir_residual(m, a, Symmetrizer::SixTermSum);
  rep.normalized = casimir_residual(m, a, Symmetrizer::Normalized);
  if (!(rep.six_term.relative() < rep.tolerance) && rep.normalized.relative() < rep.tolerance)
    rep.selected = Symmetrizer::Normalized;
  return rep;
}

double l2_symmetry_defect(int N, const Params3& k) {
  MatrixXd m = l2_matrix(N, k).entries;
  Eigen::VectorXd nr(N + 1);
  for (int n = 0; n <= N; ++n) nr(n) = std::sqrt(norm_psi_sq({N, n}, k));
  // <Psi_m, L2 Psi_n> / (|Psi_m||Psi_n|) = M(m,n) |Psi_m| / |Psi_n|
  MatrixXd s = nr.asDiagonal() * m * nr.cwiseInverse().asDiagonal();
  return maxabs(s - s.transpose()) / std::max(1.0, maxabs(s));
}

double l2_spectrum_defect(int N, const Params3& k) {
  MatrixXd m = l2_matrix(N, k).entries;
  Eigen::EigenSolver<MatrixXd> es(m, false);
  std::vector<double> got, want;
  double imag = 0;
  for (int i = 0; i <= N; ++i) {
    got.push_back(es.eigenvalues()(i).real());
    imag = std::max(imag, std::abs(es.eigenvalues()(i).imag()));
    want.push_back(l2_eigenvalue(i, k));
  }
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  double d = imag;
  double scale = 1.0;
  for (int i = 0; i <= N; ++i) {
    d = std::max(d, std::abs(got[i] - want[i]));
    scale = std::max(scale, std::abs(want[i]));
  }
  return d / scale;
}

}  // namespace racahlab
