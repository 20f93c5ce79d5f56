#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace racahlab {

inline constexpr double kMaxK = 3.0;

struct Params3 {
  double k1 = 0.5, k2 = 0.5, k3 = 0.5;

  // Throws ParameterError unless every k_j > 0.
  static Params3 make(double k1, double k2, double k3);

  double a1() const { return 0.25 - k1 * k1; }
  double a2() const { return 0.25 - k2 * k2; }
  double a3() const { return 0.25 - k3 * k3; }
  double sum() const { return k1 + k2 + k3; }
  bool in_default_domain() const;
  Params3 swapped13() const { return {k3, k2, k1}; }
  Params3 shifted(double d1, double d2, double d3) const;
  std::string str() const;
};

struct SpherePoint {
  double s1 = 0, s2 = 0, s3 = 0;
  double theta = 0, phi = 0;
  double x = 0, y = 0;
  double X = 0, Y = 0;

  static SpherePoint from_xy(double x, double y);
  static SpherePoint from_ambient(double s1, double s2, double s3);
  SpherePoint swapped13() const { return from_ambient(s3, s2, s1); }
  double boundary_distance() const;
};

// (x, y) -> (X, Y) of the 1<->3 permuted coordinates. The map is an involution.
std::array<double, 2> swap_map(double x, double y);

struct BasisIndex {
  int N = 0;
  int n = 0;  // q for the Lambda basis

  static BasisIndex make(int N, int n);
};

double energy(int N, const Params3& k);

struct Jet1 {
  double v = 0, dx = 0, dy = 0;
};

struct Jet2 {
  double v = 0, dx = 0, dy = 0, dxx = 0, dxy = 0, dyy = 0;
};

using ScalarField = std::function<double(double x, double y)>;

double psi(const BasisIndex& idx, const Params3& k, const SpherePoint& p);
Jet1 psi_jet(const BasisIndex& idx, const Params3& k, const SpherePoint& p);
// Psi divided by s1^{k1+1/2} s2^{k2+1/2} s3^{k3+1/2}; a polynomial in (x, y).
double psi_reduced(const BasisIndex& idx, const Params3& k, double x, double y);

double lambda_basis(const BasisIndex& idx, const Params3& k, const SpherePoint& p);
double lambda_reduced(const BasisIndex& idx, const Params3& k, double x, double y);

double rescale_factor(const BasisIndex& idx, const Params3& k);
double lambda_rescale_factor(const BasisIndex& idx, const Params3& k);
double psi_prime(const BasisIndex& idx, const Params3& k, const SpherePoint& p);
double lambda_prime(const BasisIndex& idx, const Params3& k, const SpherePoint& p);

double norm_psi_sq(const BasisIndex& idx, const Params3& k);
double norm_lambda_sq(const BasisIndex& idx, const Params3& k);
double norm_psi_prime_sq(const BasisIndex& idx, const Params3& k);
double norm_lambda_prime_sq(const BasisIndex& idx, const Params3& k);

// Eigenvalue of L1 on Psi and of L2 on Lambda.
double l1_eigenvalue(int n, const Params3& k);
double l2_eigenvalue(int q, const Params3& k);
// The alternative forms with the opposite sign on the k1k2 (k2k3) term.
double l1_eigenvalue_alt(int n, const Params3& k);
double l2_eigenvalue_alt(int q, const Params3& k);

enum class SymOp { H, L1, L2, L3 };
const char* to_string(SymOp op);

struct SecondOrderCoeffs {
  double cxx = 0, cxy = 0, cyy = 0, cx = 0, cy = 0, c0 = 0;
  double apply(const Jet2& j) const {
    return cxx * j.dxx + cxy * j.dxy + cyy * j.dyy + cx * j.dx + cy * j.dy + c0 * j.v;
  }
};

SecondOrderCoeffs diffop_coeffs(SymOp op, const Params3& k, double x, double y);

inline constexpr double kFdStep = 1e-4;

// 4th-order central differences; throws DomainError closer than 10 h to the boundary.
Jet2 fd_jet(const ScalarField& f, double x, double y, double h = kFdStep);
double fd_dx(const ScalarField& f, double x, double y, double h = kFdStep);
double fd_dy(const ScalarField& f, double x, double y, double h = kFdStep);

double apply_diffop(SymOp op, const Params3& k, const ScalarField& f, const SpherePoint& p);
double apply_diffop_jet(SymOp op, const Params3& k, const Jet2& j, const SpherePoint& p);

enum class Ladder { T, TStar, UPlusPlusMinusMinus, UPlusMinusMinusPlus, V };
const char* to_string(Ladder l);

struct FirstOrderCoeffs {
  double cx = 0, cy = 0, c0 = 0;
  double apply(const Jet1& j) const { return cx * j.dx + cy * j.dy + c0 * j.v; }
};

FirstOrderCoeffs ladder_coeffs(Ladder l, const Params3& k, int N, double x, double y);
// The potential term of U_(+,-,-,+) with the sign as originally displayed.
FirstOrderCoeffs u_pmmp_printed_coeffs(const Params3& k, int N, double x, double y);
// sqrt((1+y)/2)[2(y-1)d_y + k3 + 1], the closed form of V as originally displayed.
FirstOrderCoeffs v_printed_coeffs(const Params3& k, double x, double y);

// Parameters of the image space; throws ParameterError when a k leaves (0, inf).
Params3 ladder_target(Ladder l, const Params3& k);

// Basis action X Psi^{(k)}_{N-n,n} = sum of coefficient * Psi^{(k')}_{target}; empty for a zero image.
struct LadderTerm {
  double coefficient = 0;
  BasisIndex target;
};
std::vector<LadderTerm> ladder_action(Ladder l, const BasisIndex& idx, const Params3& k);

double apply_ladder(Ladder l, const Params3& k, int N, const ScalarField& f, const SpherePoint& p);
double apply_ladder_jet(Ladder l, const Params3& k, int N, const Jet1& j, const SpherePoint& p);

ScalarField apply_T(const Params3& k, ScalarField f);
ScalarField apply_Tstar(const Params3& k, ScalarField f);
ScalarField apply_U_ppmm(const Params3& k, int N, ScalarField f);
ScalarField apply_U_pmmp(const Params3& k, int N, ScalarField f);
ScalarField apply_V(const Params3& k, ScalarField f);

// T_i(x) T_j(y) Chebyshev products with analytic derivatives.
struct TestField {
  int i = 0, j = 0;
  double value(double x, double y) const;
  Jet2 jet(double x, double y) const;
  ScalarField field() const;
};

}  // namespace racahlab
