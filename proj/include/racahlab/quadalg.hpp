#pragma once

#include <Eigen/Dense>
#include <array>
#include <string>
#include <vector>

#include "racahlab/sphere_basis.hpp"

namespace racahlab {

enum class BasisTag { Psi, PsiPrime };

struct OperatorMatrix {
  Eigen::MatrixXd entries;
  BasisTag basis = BasisTag::Psi;
  int dim() const { return static_cast<int>(entries.rows()); }
};

// Column convention: L Psi_n = sum_m M(m, n) Psi_m.
struct L2Coefficients {
  double A = 0;  // coefficient of Psi_{N-n-1,n+1}
  double B = 0;
  double C = 0;  // coefficient of Psi_{N-n+1,n-1}
};

L2Coefficients l2_coefficients(int N, int n, const Params3& k);
// Middle coefficient exactly as originally displayed; differs from B by a constant.
double b_printed(int N, int n, const Params3& k);

OperatorMatrix l1_matrix(int N, const Params3& k, BasisTag tag = BasisTag::Psi);
OperatorMatrix l2_matrix(int N, const Params3& k, BasisTag tag = BasisTag::Psi);
OperatorMatrix l3_matrix(int N, const Params3& k, BasisTag tag = BasisTag::Psi);
OperatorMatrix h_matrix(int N, const Params3& k, BasisTag tag = BasisTag::Psi);

// The structure constant multiplying L_i in the closure and Casimir relations.
// L1 pairs with a3, L2 with a1, L3 with a2.
std::array<double, 3> structure_constants(const Params3& k);

enum class Symmetrizer { SixTermSum, Normalized };

struct AlgebraMatrices {
  Eigen::MatrixXd L1, L2, L3, R;
};

AlgebraMatrices algebra_matrices(int N, const Params3& k, BasisTag tag = BasisTag::Psi);

// Maximum-abs residual divided by the largest term of the identity.
struct Residual {
  double absolute = 0;
  double scale = 0;
  double relative() const { return scale > 0 ? absolute / scale : absolute; }
};

// Residual of [L_i, R] = 4{L_i,L_k} - 4{L_i,L_j} - (8+16a_j)L_j + (8+16a_k)L_k + 8(a_j-a_k)
// for the cyclic assignment starting at i (0-based).
Residual closure_residual(const AlgebraMatrices& m, const std::array<double, 3>& a, int i);
// Anticyclic ordering of the same identity, for which the sign of R flips.
Residual closure_residual_anticyclic(const AlgebraMatrices& m, const std::array<double, 3>& a, int i);
Residual casimir_residual(const AlgebraMatrices& m, const std::array<double, 3>& a, Symmetrizer s);
// max |[L2,L3] - R| and |[L3,L1] - R| relative to |R|.
Residual commutator_consistency(const AlgebraMatrices& m);

struct ClosureReport {
  int N = 0;
  Params3 k;
  std::array<Residual, 3> assignments;
  Residual r_consistency;
  double tolerance = 1e-8;
  bool pass() const;
};

ClosureReport verify_closure(int N, const Params3& k);

struct CasimirReport {
  int N = 0;
  Params3 k;
  Residual six_term;
  Residual normalized;
  Symmetrizer selected = Symmetrizer::SixTermSum;
  double tolerance = 1e-8;
  bool pass() const;
};

CasimirReport verify_casimir(int N, const Params3& k);

// Element-wise max |L2_sym - L2_sym^T| in the orthonormalized basis.
double l2_symmetry_defect(int N, const Params3& k);
// Sorted eigenvalues of the L2 matrix versus l2_eigenvalue(q), q = 0..N.
double l2_spectrum_defect(int N, const Params3& k);

}  // namespace racahlab
