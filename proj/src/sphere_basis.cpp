#include "racahlab/sphere_basis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "racahlab/errors.hpp"
#include "racahlab/specialfn.hpp"

namespace racahlab {

namespace {

constexpr double kLn2 = 0.69314718055994530942;

double prefactor(const Params3& k, const SpherePoint& p) {
  return std::pow(p.s1, k.k1 + 0.5) * std::pow(p.s2, k.k2 + 0.5) * std::pow(p.s3, k.k3 + 0.5);
}

void require_interior(const SpherePoint& p) {
  if (!(std::abs(p.x) < 1.0 && std::abs(p.y) < 1.0))
    throw DomainError("point is not in the open first octant");
}

void require_index(const BasisIndex& idx) {
  if (idx.N < 0 || idx.n < 0 || idx.n > idx.N) throw DomainError("basis index outside 0 <= n <= N");
}

// Stencil weights for the 4th-order first derivative at offsets -2..2.
constexpr double kD1[5] = {1.0, -8.0, 0.0, 8.0, -1.0};
constexpr double kD2[5] = {-1.0, 16.0, -30.0, 16.0, -1.0};

void require_fd_room(double x, double y, double h) {
  double dist = std::min(1.0 - std::abs(x), 1.0 - std::abs(y));
  if (dist < 10.0 * h) throw DomainError("finite-difference stencil too close to the boundary");
}

void chebyshev(int n, double x, double& t, double& dt, double& ddt) {
  double t0 = 1, d0 = 0, dd0 = 0;
  double t1 = x, d1 = 1, dd1 = 0;
  if (n == 0) {
    t = t0, dt = d0, ddt = dd0;
    return;
  }
  for (int m = 1; m < n; ++m) {
    double t2 = 2 * x * t1 - t0;
    double d2 = 2 * t1 + 2 * x * d1 - d0;
    double dd2 = 4 * d1 + 2 * x * dd1 - dd0;
    t0 = t1, d0 = d1, dd0 = dd1;
    t1 = t2, d1 = d2, dd1 = dd2;
  }
  t = t1, dt = d1, ddt = dd1;
}

}  // namespace

Params3 Params3::make(double k1, double k2, double k3) {
  if (!(k1 > 0.0 && k2 > 0.0 && k3 > 0.0) || !std::isfinite(k1 + k2 + k3))
    throw ParameterError("k parameters must be positive and finite");
  return {k1, k2, k3};
}

bool Params3::in_default_domain() const {
  auto ok = [](double k) { return k > 0.0 && k <= kMaxK; };
  return ok(k1) && ok(k2) && ok(k3);
}

Params3 Params3::shifted(double d1, double d2, double d3) const {
  return make(k1 + d1, k2 + d2, k3 + d3);
}

std::string Params3::str() const {
  std::ostringstream os;
  os.precision(17);
  os << k1 << "," << k2 << "," << k3;
  return os.str();
}

SpherePoint SpherePoint::from_xy(double x, double y) {
  if (!(std::abs(x) < 1.0 && std::abs(y) < 1.0)) throw DomainError("(x, y) must lie in (-1,1)^2");
  SpherePoint p;
  p.x = x;
  p.y = y;
  p.s1 = 0.5 * std::sqrt((1 - y) * (1 + x));
  p.s2 = 0.5 * std::sqrt((1 - y) * (1 - x));
  p.s3 = std::sqrt((1 + y) / 2);
  p.theta = 0.5 * std::acos(y);
  p.phi = 0.5 * std::acos(x);
  auto XY = swap_map(x, y);
  p.X = XY[0];
  p.Y = XY[1];
  return p;
}

SpherePoint SpherePoint::from_ambient(double s1, double s2, double s3) {
  if (!(s1 > 0 && s2 > 0 && s3 > 0)) throw DomainError("point outside the open first octant");
  double r2 = s1 * s1 + s2 * s2 + s3 * s3;
  if (std::abs(r2 - 1.0) > 1e-14 * 4) throw DomainError("point is not on the unit sphere");
  double x = (s1 * s1 - s2 * s2) / (s1 * s1 + s2 * s2);
  double y = 2 * s3 * s3 - 1;
  SpherePoint p = from_xy(x, y);
  p.s1 = s1;
  p.s2 = s2;
  p.s3 = s3;
  return p;
}

double SpherePoint::boundary_distance() const {
  return std::min(1.0 - std::abs(x), 1.0 - std::abs(y));
}

std::array<double, 2> swap_map(double x, double y) {
  double X = (1 + x + 3 * y - x * y) / (x * y - x + y + 3);
  double Y = (1 - y) * (1 + x) / 2 - 1;
  return {X, Y};
}

BasisIndex BasisIndex::make(int N, int n) {
  BasisIndex idx{N, n};
  require_index(idx);
  return idx;
}

double energy(int N, const Params3& k) {
  double e = 2.0 * N + k.sum() + 2.0;
  return -e * e + 0.25;
}

double psi_reduced(const BasisIndex& idx, const Params3& k, double x, double y) {
  require_index(idx);
  const int n = idx.n;
  double w = std::pow((1 - y) / 2, n);
  return w * jacobi_p(n, k.k2, k.k1, x) *
         jacobi_p(idx.N - n, 2.0 * n + k.k1 + k.k2 + 1.0, k.k3, y);
}

double psi(const BasisIndex& idx, const Params3& k, const SpherePoint& p) {
  require_interior(p);
  return prefactor(k, p) * psi_reduced(idx, k, p.x, p.y);
}

Jet1 psi_jet(const BasisIndex& idx, const Params3& k, const SpherePoint& p) {
  require_interior(p);
  require_index(idx);
  const int n = idx.n;
  const double x = p.x, y = p.y;
  const double pf = prefactor(k, p);
  const double A = jacobi_p(n, k.k2, k.k1, x);
  const double dA = jacobi_p_dy(n, k.k2, k.k1, x);
  const double ay = 2.0 * n + k.k1 + k.k2 + 1.0;
  const double B = jacobi_p(idx.N - n, ay, k.k3, y);
  const double dB = jacobi_p_dy(idx.N - n, ay, k.k3, y);
  const double W = std::pow((1 - y) / 2, n);
  const double dW = n == 0 ? 0.0 : -0.5 * n * std::pow((1 - y) / 2, n - 1);
  const double dlx = (k.k1 + 0.5) / (2 * (1 + x)) - (k.k2 + 0.5) / (2 * (1 - x));
  const double dly = -(k.k1 + k.k2 + 1.0) / (2 * (1 - y)) + (k.k3 + 0.5) / (2 * (1 + y));
  Jet1 j;
  j.v = pf * A * W * B;
  j.dx = pf * W * B * (dlx * A + dA);
  j.dy = pf * A * (dly * W * B + dW * B + W * dB);
  return j;
}

double lambda_reduced(const BasisIndex& idx, const Params3& k, double x, double y) {
  auto XY = swap_map(x, y);
  return psi_reduced(idx, k.swapped13(), XY[0], XY[1]);
}

double lambda_basis(const BasisIndex& idx, const Params3& k, const SpherePoint& p) {
  return psi(idx, k.swapped13(), p.swapped13());
}

double rescale_factor(const BasisIndex& idx, const Params3& k) {
  require_index(idx);
  const int n = idx.n, m = idx.N - idx.n;
  SignedLog f = log_gamma(n + 1.0) * log_gamma(m + 1.0) / log_gamma(m + k.k3 + 1.0) /
                log_gamma(n + k.k2 + 1.0);
  return (n % 2 ? -1.0 : 1.0) * f.value();
}

double lambda_rescale_factor(const BasisIndex& idx, const Params3& k) {
  return rescale_factor(idx, k.swapped13());
}

double psi_prime(const BasisIndex& idx, const Params3& k, const SpherePoint& p) {
  return rescale_factor(idx, k) * psi(idx, k, p);
}

double lambda_prime(const BasisIndex& idx, const Params3& k, const SpherePoint& p) {
  return lambda_rescale_factor(idx, k) * lambda_basis(idx, k, p);
}

double norm_psi_sq(const BasisIndex& idx, const Params3& k) {
  require_index(idx);
  const int n = idx.n, N = idx.N;
  const double k1 = k.k1, k2 = k.k2, k3 = k.k3, K = k.sum();
  double lg = log_gamma(n + k1 + 1).log_abs + log_gamma(n + k2 + 1).log_abs +
              log_gamma(N - n + k3 + 1).log_abs + log_gamma(N + n + k1 + k2 + 2).log_abs -
              2 * kLn2 - log_gamma(n + 1.0).log_abs - log_gamma(N - n + 1.0).log_abs -
              std::log(2.0 * N + K + 2) - std::log(2.0 * n + k1 + k2 + 1) -
              log_gamma(n + k1 + k2 + 1).log_abs - log_gamma(N + n + K + 2).log_abs;
  return std::exp(lg);
}

double norm_lambda_sq(const BasisIndex& idx, const Params3& k) {
  return norm_psi_sq(idx, k.swapped13());
}

double norm_psi_prime_sq(const BasisIndex& idx, const Params3& k) {
  double f = rescale_factor(idx, k);
  return f * f * norm_psi_sq(idx, k);
}

double norm_lambda_prime_sq(const BasisIndex& idx, const Params3& k) {
  return norm_psi_prime_sq(idx, k.swapped13());
}

double l1_eigenvalue(int n, const Params3& k) {
  return -4.0 * n * (n + k.k1 + k.k2 + 1.0) -
         (2 * k.k1 * k.k2 + 2 * k.k1 + 2 * k.k2 + 1.5);
}

double l2_eigenvalue(int q, const Params3& k) {
  return -4.0 * q * (q + k.k2 + k.k3 + 1.0) -
         (2 * k.k2 * k.k3 + 2 * k.k2 + 2 * k.k3 + 1.5);
}

double l1_eigenvalue_alt(int n, const Params3& k) {
  double m = 2.0 * n + 1.0;
  return -m * m - 2 * m * (k.k1 + k.k2) + 2 * k.k1 * k.k2 - 0.5;
}

double l2_eigenvalue_alt(int q, const Params3& k) {
  double m = 2.0 * q + 1.0;
  return -m * m - 2 * m * (k.k2 + k.k3) + 2 * k.k2 * k.k3 - 0.5;
}

const char* to_string(SymOp op) {
  switch (op) {
    case SymOp::H: return "H";
    case SymOp::L1: return "L1";
    case SymOp::L2: return "L2";
    case SymOp::L3: return "L3";
  }
  return "?";
}

SecondOrderCoeffs diffop_coeffs(SymOp op, const Params3& k, double x, double y) {
  SecondOrderCoeffs j1, j2, j3;
  j1.cxx = 2 * (x - 1) * (x + 1) * (x + 1) * (y + 1) / (y - 1);
  j1.cxy = -4 * (x - 1) * (x + 1) * (y + 1);
  j1.cyy = 2 * (x - 1) * (y - 1) * (y + 1);
  j1.cx = (x + 1) * (3 * x * y + 5 * x - y - 3) / (y - 1);
  j1.cy = x * y - x - 3 * y - 1;

  j2.cxx = -2 * (x - 1) * (x - 1) * (x + 1) * (y + 1) / (y - 1);
  j2.cxy = 4 * (x - 1) * (x + 1) * (y + 1);
  j2.cyy = -2 * (x + 1) * (y - 1) * (y + 1);
  j2.cx = -(x - 1) * (3 * x * y + 5 * x + y + 3) / (y - 1);
  j2.cy = -x * y + x - 3 * y - 1;

  j3.cxx = 4 * (1 - x * x);
  j3.cx = -4 * x;

  const double r21 = (1 - x) / (1 + x);                            // s2^2/s1^2
  const double r23 = (1 - x) * (1 - y) / (2 * (1 + y));            // s2^2/s3^2
  const double r13 = (1 + x) * (1 - y) / (2 * (1 + y));            // s1^2/s3^2
  const double a1 = k.a1(), a2 = k.a2(), a3 = k.a3();

  j3.c0 = a1 * r21 + a2 / r21;
  j1.c0 = a3 * r23 + a2 / r23;
  j2.c0 = a1 / r13 + a3 * r13;

  switch (op) {
    case SymOp::L1: return j3;
    case SymOp::L2: return j1;
    case SymOp::L3: return j2;
    case SymOp::H: {
      SecondOrderCoeffs h;
      h.cxx = j1.cxx + j2.cxx + j3.cxx;
      h.cxy = j1.cxy + j2.cxy + j3.cxy;
      h.cyy = j1.cyy + j2.cyy + j3.cyy;
      h.cx = j1.cx + j2.cx + j3.cx;
      h.cy = j1.cy + j2.cy + j3.cy;
      h.c0 = j1.c0 + j2.c0 + j3.c0 + a1 + a2 + a3;
      return h;
    }
  }
  return {};
}

double fd_dx(const ScalarField& f, double x, double y, double h) {
  require_fd_room(x, y, h);
  double s = 0;
  for (int i = 0; i < 5; ++i)
    if (kD1[i] != 0.0) s += kD1[i] * f(x + (i - 2) * h, y);
  return s / (12 * h);
}

double fd_dy(const ScalarField& f, double x, double y, double h) {
  require_fd_room(x, y, h);
  double s = 0;
  for (int i = 0; i < 5; ++i)
    if (kD1[i] != 0.0) s += kD1[i] * f(x, y + (i - 2) * h);
  return s / (12 * h);
}

Jet2 fd_jet(const ScalarField& f, double x, double y, double h) {
  require_fd_room(x, y, h);
  Jet2 j;
  double fx[5], fy[5];
  for (int i = 0; i < 5; ++i) {
    fx[i] = i == 2 ? 0.0 : f(x + (i - 2) * h, y);
    fy[i] = i == 2 ? 0.0 : f(x, y + (i - 2) * h);
  }
  j.v = f(x, y);
  fx[2] = fy[2] = j.v;
  double sx = 0, sy = 0, sxx = 0, syy = 0;
  for (int i = 0; i < 5; ++i) {
    sx += kD1[i] * fx[i];
    sy += kD1[i] * fy[i];
    sxx += kD2[i] * fx[i];
    syy += kD2[i] * fy[i];
  }
  j.dx = sx / (12 * h);
  j.dy = sy / (12 * h);
  j.dxx = sxx / (12 * h * h);
  j.dyy = syy / (12 * h * h);
  double sxy = 0;
  for (int a = 0; a < 5; ++a) {
    if (kD1[a] == 0.0) continue;
    for (int b = 0; b < 5; ++b) {
      if (kD1[b] == 0.0) continue;
      sxy += kD1[a] * kD1[b] * f(x + (a - 2) * h, y + (b - 2) * h);
    }
  }
  j.dxy = sxy / (144 * h * h);
  return j;
}

double apply_diffop_jet(SymOp op, const Params3& k, const Jet2& j, const SpherePoint& p) {
  require_interior(p);
  return diffop_coeffs(op, k, p.x, p.y).apply(j);
}

double apply_diffop(SymOp op, const Params3& k, const ScalarField& f, const SpherePoint& p) {
  return apply_diffop_jet(op, k, fd_jet(f, p.x, p.y), p);
}

const char* to_string(Ladder l) {
  switch (l) {
    case Ladder::T: return "T";
    case Ladder::TStar: return "T*";
    case Ladder::UPlusPlusMinusMinus: return "U(+,+,-,-)";
    case Ladder::UPlusMinusMinusPlus: return "U(+,-,-,+)";
    case Ladder::V: return "V";
  }
  return "?";
}

FirstOrderCoeffs ladder_coeffs(Ladder l, const Params3& k, int N, double x, double y) {
  FirstOrderCoeffs c;
  const double rp = std::sqrt((1 + x) / (1 - x));
  const double s = std::sqrt((1 + y) / 2);
  const double k1 = k.k1, k2 = k.k2, k3 = k.k3;
  switch (l) {
    case Ladder::T:
      c.cx = std::sqrt(1 - x * x);
      c.c0 = -0.5 * (k2 - 0.5) * rp + 0.5 * (k1 - 0.5) / rp;
      break;
    case Ladder::TStar:
      c.cx = -std::sqrt(1 - x * x);
      c.c0 = -0.5 * (k2 + 0.5) * rp + 0.5 * (k1 + 0.5) / rp;
      break;
    case Ladder::UPlusPlusMinusMinus:
      c.cy = -s * (1 - y);
      c.c0 = s * (-N - 0.5 * k1 - 0.5 * k2 - 0.5 + 0.5 * (k3 + 0.5) * (1 - y) / (1 + y));
      break;
    case Ladder::UPlusMinusMinusPlus:
      c.cy = s * (y - 1);
      c.c0 = s * (N + 0.5 * k1 + 0.5 * k2 + k3 + 1.5 - 0.5 * (k3 + 0.5) * (y - 1) / (y + 1));
      break;
    case Ladder::V:
      c.cy = 2 * s * (y - 1);
      c.c0 = s * (k3 + 1 + (k3 + 0.5) * (1 - y) / (1 + y));
      break;
  }
  return c;
}

FirstOrderCoeffs u_pmmp_printed_coeffs(const Params3& k, int N, double x, double y) {
  FirstOrderCoeffs c = ladder_coeffs(Ladder::UPlusMinusMinusPlus, k, N, x, y);
  const double s = std::sqrt((1 + y) / 2);
  c.c0 += s * (k.k3 + 0.5) * (y - 1) / (y + 1);
  return c;
}

FirstOrderCoeffs v_printed_coeffs(const Params3& k, double, double y) {
  const double s = std::sqrt((1 + y) / 2);
  FirstOrderCoeffs c;
  c.cy = 2 * s * (y - 1);
  c.c0 = s * (k.k3 + 1);
  return c;
}

Params3 ladder_target(Ladder l, const Params3& k) {
  switch (l) {
    case Ladder::T: return k.shifted(-1, -1, 0);
    case Ladder::TStar: return k.shifted(1, 1, 0);
    default: return k.shifted(0, 0, 1);
  }
}

std::vector<LadderTerm> ladder_action(Ladder l, const BasisIndex& idx, const Params3& k) {
  require_index(idx);
  const int N = idx.N, n = idx.n;
  const double K = k.sum();
  std::vector<LadderTerm> out;
  auto ppmm = [&] {
    if (n < N) out.push_back({-(n + N + k.k1 + k.k2 + 1.0), {N - 1, n}});
  };
  auto pmmp = [&] { out.push_back({n + N + K + 2.0, {N, n}}); };
  switch (l) {
    case Ladder::T: out.push_back({-(n + 1.0), {N + 1, n + 1}}); break;
    case Ladder::TStar:
      if (n > 0) out.push_back({-(k.k1 + k.k2 + n + 1.0), {N - 1, n - 1}});
      break;
    case Ladder::UPlusPlusMinusMinus: ppmm(); break;
    case Ladder::UPlusMinusMinusPlus: pmmp(); break;
    case Ladder::V:
      pmmp();
      ppmm();
      break;
  }
  return out;
}

double apply_ladder_jet(Ladder l, const Params3& k, int N, const Jet1& j, const SpherePoint& p) {
  require_interior(p);
  return ladder_coeffs(l, k, N, p.x, p.y).apply(j);
}

double apply_ladder(Ladder l, const Params3& k, int N, const ScalarField& f, const SpherePoint& p) {
  Jet1 j;
  j.v = f(p.x, p.y);
  j.dx = fd_dx(f, p.x, p.y);
  j.dy = fd_dy(f, p.x, p.y);
  return apply_ladder_jet(l, k, N, j, p);
}

namespace {
ScalarField ladder_field(Ladder l, const Params3& k, int N, ScalarField f) {
  ladder_target(l, k);
  return [l, k, N, f = std::move(f)](double x, double y) {
    return apply_ladder(l, k, N, f, SpherePoint::from_xy(x, y));
  };
}
}  // namespace

ScalarField apply_T(const Params3& k, ScalarField f) { return ladder_field(Ladder::T, k, 0, std::move(f)); }
ScalarField apply_Tstar(const Params3& k, ScalarField f) {
  return ladder_field(Ladder::TStar, k, 0, std::move(f));
}
ScalarField apply_U_ppmm(const Params3& k, int N, ScalarField f) {
  return ladder_field(Ladder::UPlusPlusMinusMinus, k, N, std::move(f));
}
ScalarField apply_U_pmmp(const Params3& k, int N, ScalarField f) {
  return ladder_field(Ladder::UPlusMinusMinusPlus, k, N, std::move(f));
}
ScalarField apply_V(const Params3& k, ScalarField f) { return ladder_field(Ladder::V, k, 0, std::move(f)); }

double TestField::value(double x, double y) const {
  double tx, dx, ddx, ty, dy, ddy;
  chebyshev(i, x, tx, dx, ddx);
  chebyshev(j, y, ty, dy, ddy);
  return tx * ty;
}

Jet2 TestField::jet(double x, double y) const {
  double tx, dx, ddx, ty, dy, ddy;
  chebyshev(i, x, tx, dx, ddx);
  chebyshev(j, y, ty, dy, ddy);
  return {tx * ty, dx * ty, tx * dy, ddx * ty, dx * dy, tx * ddy};
}

ScalarField TestField::field() const {
  TestField self = *this;
  return [self](double x, double y) { return self.value(x, y); };
}

}  // namespace racahlab
