#include "racahlab/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>

#include "racahlab/errors.hpp"
#include "racahlab/quadalg.hpp"
#include "racahlab/wilson_functions.hpp"
#include "racahlab/wilson_racah.hpp"

namespace racahlab {

namespace {

const char* kClosureAnchor =
    "[L_i,R] = 4{L_i,L_k} - 4{L_i,L_j} - (8+16a_j)L_j + (8+16a_k)L_k + 8(a_j-a_k), R = [L1,L2]";
const char* kCasimirAnchor =
    "R^2 = (8/3){L1,L2,L3} - sum (16a_i+12)L_i^2 + (52/3) sum {L_i,L_j} + (1/3) sum (16+176a_i)L_i + c0";
const char* kXiAnchor = "Xi'(n,N,q) = G(N,k) 4F3(-n, k1+k2+n+1, -q, k2+k3+q+1; -N, k2+1, N+K+2; 1)";
const char* kOrthoAnchor = "O_nq = Xi'(n,N,q) / (|Psi'_n| |Lambda'_q|), O^T O = I";
const char* kRacahAnchor = "sum_q w(q) Phi_n1(t_q) Phi_n2(t_q) = delta_n1n2 h_n1";
const char* kEigenAnchor = "tau* tau Phi_n = n(n+alpha+beta+gamma+delta-1) Phi_n";
const char* kMurecAnchor = "mu^(alpha,beta) Phi_n(alpha+1/2,beta+1/2,gamma-1/2,delta-1/2) = (alpha+beta) Phi_n";
const char* kPermAnchor = "(alpha+beta)_n (alpha+gamma)_n (alpha+delta)_n Phi_n invariant under permutations";

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string at_str(const std::string& what, double v) { return what + "=" + fmt("%.6g", v); }

Check finish(const char* name, const char* anchor, double tol, const MaxTracker& m, std::string extra = {}) {
  std::string d = m.where.empty() ? extra : "worst at " + m.where + (extra.empty() ? "" : "; " + extra);
  return make_check(name, anchor, tol, m.value, d);
}

std::string wstr(const WilsonParams& w) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "(%.6g,%.6g,%.6g,%.6g)", w.alpha, w.beta, w.gamma, w.delta);
  return buf;
}

// Generic t away from 0, +-1/2 and the Gamma poles used by the difference operators.
double draw_t(PanelRng& rng, const WilsonParams& w, double lo, double hi) {
  for (int i = 0; i < 1000; ++i) {
    double t = rng.uniform(lo, hi);
    if (std::abs(t) < 0.05 || std::abs(std::abs(t) - 0.5) < 0.05) continue;
    if (prefactor_pole_distance(w, t) < 0.05) continue;
    return t;
  }
  throw ParameterError("draw_t: no admissible t found");
}

SpherePoint draw_point(PanelRng& rng) {
  double x = rng.uniform(-0.8, 0.8), y = rng.uniform(-0.8, 0.8);
  return SpherePoint::from_xy(x, y);
}

double pole_distance(double x) { return x > 0.5 ? 1.0 : std::abs(x - std::round(x)); }

}  // namespace

std::uint64_t suite_seed(std::uint64_t seed, int tag) {
  return seed + static_cast<std::uint64_t>(tag) * 0x9E3779B97F4A7C15ULL;
}

std::vector<Check> algebra_checks(int N, const Params3& k) {
  std::vector<Check> out;
  ClosureReport c = verify_closure(N, k);
  const char* names[3] = {"algebra.closure.cyclic_1", "algebra.closure.cyclic_2", "algebra.closure.cyclic_3"};
  for (int i = 0; i < 3; ++i)
    out.push_back(make_check(names[i], kClosureAnchor, c.tolerance, c.assignments[i].relative(), k.str()));
  out.push_back(make_check("algebra.commutator_consistency", "[L2,L3] = [L3,L1] = [L1,L2] = R", c.tolerance,
                           c.r_consistency.relative(), k.str()));
  CasimirReport cs = verify_casimir(N, k);
  const Residual& sel = cs.selected == Symmetrizer::SixTermSum ? cs.six_term : cs.normalized;
  out.push_back(make_check("algebra.casimir", kCasimirAnchor, cs.tolerance, sel.relative(),
                           cs.selected == Symmetrizer::SixTermSum ? "symmetrizer: six-term sum"
                                                                  : "symmetrizer: six-term sum / 6"));
  return out;
}

std::vector<Check> suite_closure(const SuiteOptions& o) {
  auto ks = k_panel(suite_seed(o.seed, 1), 5);
  MaxTracker cyc[3], cons, anti;
  for (int N : {0, 2, 4, 6})
    for (const auto& k : ks) {
      AlgebraMatrices m = algebra_matrices(N, k);
      auto a = structure_constants(k);
      std::string at = "N=" + std::to_string(N) + " k=" + k.str();
      for (int i = 0; i < 3; ++i) {
        cyc[i].add(closure_residual(m, a, i).relative(), at);
        if (N > 0) anti.add(closure_residual_anticyclic(m, a, i).relative(), at);
      }
      cons.add(commutator_consistency(m).relative(), at);
    }
  std::vector<Check> out;
  out.push_back(finish("algebra.closure.cyclic_1", kClosureAnchor, 1e-8, cyc[0], "(i,j,k) = (1,2,3)"));
  out.push_back(finish("algebra.closure.cyclic_2", kClosureAnchor, 1e-8, cyc[1], "(i,j,k) = (2,3,1)"));
  out.push_back(finish("algebra.closure.cyclic_3", kClosureAnchor, 1e-8, cyc[2], "(i,j,k) = (3,1,2)"));
  out.push_back(finish("algebra.commutator_consistency", "[L2,L3] = [L3,L1] = [L1,L2] = R", 1e-8, cons));
  out.push_back(make_info("algebra.closure.anticyclic", kClosureAnchor, anti.value,
                          "anticyclic (i,j,k) flips the sign of R; expected O(1)"));
  return out;
}

std::vector<Check> suite_casimir(const SuiteOptions& o) {
  auto ks = k_panel(suite_seed(o.seed, 1), 5);
  MaxTracker six, norm, sym, spec;
  bool six_selected = true;
  for (int N : {0, 2, 4, 6})
    for (const auto& k : ks) {
      std::string at = "N=" + std::to_string(N) + " k=" + k.str();
      CasimirReport r = verify_casimir(N, k);
      six.add(r.six_term.relative(), at);
      norm.add(r.normalized.relative(), at);
      six_selected = six_selected && r.selected == Symmetrizer::SixTermSum;
      sym.add(l2_symmetry_defect(N, k), at);
      spec.add(l2_spectrum_defect(N, k), at);
    }
  std::vector<Check> out;
  out.push_back(finish("algebra.casimir", kCasimirAnchor, 1e-8, six_selected ? six : norm,
                       six_selected ? "symmetrizer: six-term sum" : "symmetrizer: six-term sum / 6"));
  out.push_back(make_info("algebra.casimir.other_symmetrizer", kCasimirAnchor, six_selected ? norm.value : six.value,
                          "residual under the rejected symmetrizer convention"));
  out.push_back(finish("algebra.l2_self_adjoint", "L2 symmetric in the orthonormal Psi basis", 1e-10, sym));
  out.push_back(finish("algebra.l2_spectrum", "spec(L2 matrix) = {lambda_q : q = 0..N}", 1e-10, spec));
  return out;
}

std::vector<Check> orthogonality_checks(int N, const Params3& k, int grid_order) {
  QuadratureGrid grid = build_grid(k, grid_order);
  OrthogonalMatrixReport r = verify_orthogonal_matrix(N, k, grid);
  std::vector<Check> out;
  std::string at = "N=" + std::to_string(N) + " k=" + k.str();
  out.push_back(make_check("expansion.closed_form", kXiAnchor, 1e-6, r.closed_form_defect, at));
  out.push_back(make_check("expansion.orthogonal_matrix", kOrthoAnchor, 1e-8, r.ortho_defect, at));
  out.push_back(make_check("expansion.row_identity",
                           "sum_q Xi'(n1) Xi'(n2) / |Lambda'_q|^2 = |Psi'_n1|^2 delta_n1n2", 1e-8, r.row_identity, at));
  out.push_back(make_check("expansion.column_identity",
                           "sum_n Xi'(q1) Xi'(q2) / |Psi'_n|^2 = |Lambda'_q1|^2 delta_q1q2", 1e-8, r.column_identity,
                           at));
  GramResult g = racah_gram(N, k);
  out.push_back(make_check("racah.orthogonality", kRacahAnchor, 1e-9, g.diagonal_positive() ? g.max_offdiag_ratio() : 1.0,
                           at));
  return out;
}

std::vector<Check> suite_expansion(const SuiteOptions& o) {
  auto ks = k_panel(suite_seed(o.seed, 3), 3);
  MaxTracker closed, ortho, row, col, cdev;
  for (const auto& k : ks) {
    QuadratureGrid grid = build_grid(k, o.grid_order);
    for (int N = 0; N <= 6; ++N) {
      std::string at = "N=" + std::to_string(N) + " k=" + k.str();
      OrthogonalMatrixReport r = verify_orthogonal_matrix(N, k, grid);
      closed.add(r.closed_form_defect, at);
      ortho.add(r.ortho_defect, at);
      row.add(r.row_identity, at);
      col.add(r.column_identity, at);
    }
    ScaleConstant c = scale_constant_c(k, grid);
    cdev.add(std::abs(c.c - kXiScale) / kXiScale, "k=" + k.str());
  }
  std::vector<Check> out;
  std::string ord = "grid order " + std::to_string(o.grid_order);
  out.push_back(finish("expansion.closed_form", kXiAnchor, 1e-6, closed, ord));
  out.push_back(finish("expansion.orthogonal_matrix", kOrthoAnchor, 1e-8, ortho, ord));
  out.push_back(finish("expansion.row_identity", "sum_q Xi'(n1) Xi'(n2) / |Lambda'_q|^2 = |Psi'_n1|^2 delta_n1n2",
                       1e-8, row));
  out.push_back(finish("expansion.column_identity", "sum_n Xi'(q1) Xi'(q2) / |Psi'_n|^2 = |Lambda'_q1|^2 delta_q1q2",
                       1e-8, col));
  out.push_back(finish("expansion.scale_constant", "c = 1/16 in G(N,k) = 4c (-1)^N N! / ((2N+K+2) Gamma(N+K+2) Gamma(k2+1))",
                       1e-8, cdev, "relative deviation of the fitted c from 1/16"));
  return out;
}

std::vector<Check> suite_racah(const SuiteOptions& o) {
  auto ks = k_panel(suite_seed(o.seed, 4), 10);
  MaxTracker ortho, rec, dual, dict;
  bool positive = true;
  for (const auto& k : ks)
    for (int N = 0; N <= 10; ++N) {
      std::string at = "N=" + std::to_string(N) + " k=" + k.str();
      GramResult g = racah_gram(N, k);
      ortho.add(g.max_offdiag_ratio(), at);
      positive = positive && g.diagonal_positive();
      for (int q = 0; q <= N; ++q) rec.add(recurrence_residual(q, N, k), at + " q=" + std::to_string(q));
      for (int n = 0; n <= N; ++n) dual.add(duality_residual(n, N, k), at + " n=" + std::to_string(n));
      auto back = WilsonParams::from_sphere(k, N).to_sphere();
      dict.add(std::max({std::abs(back[0] - k.k1), std::abs(back[1] - k.k2), std::abs(back[2] - k.k3),
                         std::abs(back[3] - N)}),
               at);
    }
  std::vector<Check> out;
  out.push_back(finish("racah.orthogonality", kRacahAnchor, 1e-9, ortho, positive ? "h_n > 0" : "nonpositive h_n"));
  if (!positive) out.back().status = CheckStatus::Fail;
  out.push_back(finish("racah.recurrence", "(M'^T - lambda_q) (Phi_n(t_q))_n = 0", 1e-10, rec));
  out.push_back(finish("racah.duality", "(M'(k3,k2,k1)^T - mu_n) (Phi_n(t_q))_q = 0", 1e-10, dual));
  out.push_back(finish("racah.dictionary_roundtrip", "(k,N) -> (alpha,beta,gamma,delta) -> (k,N)", 1e-13, dict));
  return out;
}

std::vector<Check> suite_difference(const SuiteOptions& o) {
  PanelRng rng(suite_seed(o.seed, 5));
  auto ws = wilson_function_panel(suite_seed(o.seed, 50), 10);
  auto ks = k_panel(suite_seed(o.seed, 51), 10);
  for (int i = 0; i < 10; ++i) ws.push_back(WilsonParams::from_sphere(ks[i], 8 + i % 3));
  MaxTracker eig, tau, taus, wk, wstep;
  for (const auto& w : ws) {
    if (w.provenance)
      for (int n = 0; n <= 8; ++n) eig.add(eigen_residual(n, w, w.alpha + 1), "lattice w=" + wstr(w) + " q=1");
    for (double t : {draw_t(rng, w, 0.1, 2.5), draw_t(rng, w, 0.1, 2.5)}) {
      std::string at = "w=" + wstr(w) + " " + at_str("t", t);
      for (int n = 0; n <= 8; ++n) eig.add(eigen_residual(n, w, t), at + " n=" + std::to_string(n));
      for (int k = 0; k <= 6; ++k) {
        tau.add(tau_pk_residual(k, w.alpha, t), at + " k=" + std::to_string(k));
        taus.add(tau_star_pk_residual(k, w, t), at + " k=" + std::to_string(k));
      }
      for (int n = 0; n <= 6; ++n) {
        auto c = solve_wk(n, w);
        double sum = 0, scale = 0, chain = 1, chain_err = 0;
        for (int k = 0; k <= n; ++k) {
          double term = c[k] * pk_basis(k, w.alpha, t);
          sum += term;
          scale += std::abs(term);
          chain_err = std::max(chain_err, std::abs(chain - c[k]) / std::max(std::abs(c[k]), 1e-300));
          chain = wk_step(n, k, w, chain);
        }
        wk.add((sum - phi_n(n, w, t)) / std::max(scale, 1e-300), at + " n=" + std::to_string(n));
        wstep.add(chain_err, at + " n=" + std::to_string(n));
      }
    }
  }
  std::vector<Check> out;
  out.push_back(finish("difference.eigenvalue", kEigenAnchor, 1e-10, eig, "integer n <= 8"));
  out.push_back(finish("difference.tau_pk", "tau P_k(alpha,t) = -k P_{k-1}(alpha+1/2,t)", 1e-12, tau));
  out.push_back(finish("difference.tau_star_pk",
                       "tau* P_k(alpha+1/2,t) = -(s+k) P_{k+1}(alpha,t) + (alpha+beta+k)(alpha+gamma+k)(alpha+delta+k) "
                       "P_k(alpha,t)",
                       1e-12, taus));
  out.push_back(finish("difference.wk_expansion", "Phi_n(t) = sum_k w_k (alpha+t)_k (alpha-t)_k", 1e-12, wk));
  out.push_back(finish("difference.wk_recurrence",
                       "w_{k+1} = w_k (k-n)(n+s-1+k) / ((k+1)(alpha+beta+k)(alpha+gamma+k)(alpha+delta+k))", 1e-12,
                       wstep));
  return out;
}

std::vector<Check> suite_intertwining(const SuiteOptions& o) {
  PanelRng rng(suite_seed(o.seed, 6));
  auto ws = wilson_function_panel(suite_seed(o.seed, 60), 8);
  MaxTracker ab, ad, bd;
  for (const auto& w : ws) {
    double t = draw_t(rng, w, 0.1, 2.5);
    std::string at = "w=" + wstr(w) + " " + at_str("t", t);
    for (int n = 0; n <= 6; ++n) {
      FamilyFn f = polynomial_family(n);
      ab.add(mu_alpha_beta_residual(w, t, f), at + " n=" + std::to_string(n));
      ad.add(mu_alpha_delta_residual(w, t, f), at + " n=" + std::to_string(n));
      bd.add(mu_beta_delta_residual(n, w, t, f), at + " n=" + std::to_string(n));
    }
  }
  std::vector<Check> out;
  out.push_back(finish("intertwining.mu_alpha_beta", kMurecAnchor, 1e-10, ab));
  out.push_back(finish("intertwining.mu_alpha_delta",
                       "mu^(alpha,delta) Phi_n(alpha+1/2,beta-1/2,gamma-1/2,delta+1/2) = (alpha+delta) Phi_n", 1e-10, ad));
  out.push_back(finish("intertwining.mu_beta_delta",
                       "mu^(beta,delta) Phi_n(alpha-1/2,beta+1/2,gamma-1/2,delta+1/2) = "
                       "(n+beta+delta)(n+alpha+gamma-1)/(alpha+gamma-1) Phi_n",
                       1e-10, bd));

  // Differential ladders, pointwise on the basis. T lowers k1 and k2 by one, so k1, k2 > 1.
  auto ks = k_panel(suite_seed(o.seed, 61), 4, 1.0, 2.5);
  struct L {
    Ladder l;
    const char* name;
    const char* anchor;
  };
  const L ladders[] = {
      {Ladder::T, "ladder.T", "T Psi(k)_{N-n,n} = -(n+1) Psi(k1-1,k2-1,k3)_{N-n,n+1}"},
      {Ladder::TStar, "ladder.T_star", "T* Psi(k)_{N-n,n} = -(k1+k2+n+1) Psi(k1+1,k2+1,k3)_{N-n,n-1}"},
      {Ladder::UPlusPlusMinusMinus, "ladder.U_ppmm", "U(+,+,-,-) Psi(k)_{N-n,n} = -(n+N+k1+k2+1) Psi(k3+1)_{N-1-n,n}"},
      {Ladder::UPlusMinusMinusPlus, "ladder.U_pmmp", "U(+,-,-,+) Psi(k)_{N-n,n} = (n+N+K+2) Psi(k3+1)_{N-n,n}"},
      {Ladder::V, "ladder.V", "V = U(+,-,-,+) + U(+,+,-,-) on the basis"},
  };
  MaxTracker act[5], spec[2], vsum, vprinted, vstrict;
  for (const auto& k : ks) {
    for (int i = 0; i < 5; ++i) {
      Params3 kt = ladder_target(ladders[i].l, k);
      for (int N = 0; N <= 4; ++N)
        for (int n = 0; n <= N; ++n) {
          BasisIndex idx = BasisIndex::make(N, n);
          ScalarField f = [&](double x, double y) { return psi(idx, k, SpherePoint::from_xy(x, y)); };
          SpherePoint p = draw_point(rng);
          double lhs = apply_ladder(ladders[i].l, k, N, f, p);
          double rhs = 0;
          auto terms = ladder_action(ladders[i].l, idx, k);
          for (const auto& t : terms) rhs += t.coefficient * psi(t.target, kt, p);
          double scale = std::max(std::abs(rhs), std::abs(psi(idx, k, p)));
          std::string at = "k=" + k.str() + " N=" + std::to_string(N) + " n=" + std::to_string(n);
          act[i].add((lhs - rhs) / scale, at);
          if (i < 2)
            for (const auto& t : terms)
              spec[i].add(std::abs(energy(t.target.N, kt) - energy(N, k)) / std::abs(energy(N, k)), at);
        }
    }
    for (int j = 0; j < 6; ++j) {
      SpherePoint p = draw_point(rng);
      int N = j % 4;
      auto v = ladder_coeffs(Ladder::V, k, N, p.x, p.y);
      auto u1 = ladder_coeffs(Ladder::UPlusMinusMinusPlus, k, N, p.x, p.y);
      auto u2 = ladder_coeffs(Ladder::UPlusPlusMinusMinus, k, N, p.x, p.y);
      double sc = std::max({std::abs(v.cy), std::abs(v.c0), std::abs(u1.c0), std::abs(u2.c0)});
      vsum.add(std::max({std::abs(v.cx - u1.cx - u2.cx), std::abs(v.cy - u1.cy - u2.cy), std::abs(v.c0 - u1.c0 - u2.c0)}) / sc,
               "k=" + k.str());
      auto vp = v_printed_coeffs(k, p.x, p.y);
      auto u1p = u_pmmp_printed_coeffs(k, N, p.x, p.y);
      vprinted.add(std::max({std::abs(vp.cx - u1p.cx - u2.cx), std::abs(vp.cy - u1p.cy - u2.cy),
                             std::abs(vp.c0 - u1p.c0 - u2.c0)}) / sc,
                   "k=" + k.str());
    }
    // Strict V H = H' V, with H' taken at k3+1 and the energy of the leading image.
    Params3 kt = ladder_target(Ladder::V, k);
    for (int N = 1; N <= 2; ++N) {
      BasisIndex idx = BasisIndex::make(N, 0);
      ScalarField f = [&](double x, double y) { return psi(idx, k, SpherePoint::from_xy(x, y)); };
      ScalarField vf = apply_V(k, f);
      SpherePoint p = SpherePoint::from_xy(0.1, -0.2);
      double hv = apply_diffop(SymOp::H, kt, vf, p);
      double vh = energy(N, k) * vf(p.x, p.y);
      vstrict.add((hv - vh) / std::max(std::abs(hv), std::abs(vh)), "k=" + k.str());
    }
  }
  for (int i = 0; i < 5; ++i) out.push_back(finish(ladders[i].name, ladders[i].anchor, 1e-5, act[i], "finite differences"));
  out.push_back(finish("ladder.T.energy", "T H(k) = H(k1-1,k2-1,k3) T: E_N(k) = E_{N+1}(k')", 1e-12, spec[0]));
  out.push_back(finish("ladder.T_star.energy", "T* H(k) = H(k1+1,k2+1,k3) T*: E_N(k) = E_{N-1}(k')", 1e-12, spec[1]));
  out.push_back(finish("ladder.V.sum", "V = U(+,-,-,+) + U(+,+,-,-)", 1e-12, vsum));
  out.push_back(finish("ladder.V.displayed_sum", "sqrt((1+y)/2)[2(y-1)d_y + k3+1] = sum of the displayed U forms",
                       1e-12, vprinted));
  out.push_back(make_info("ladder.V.strict_intertwining", "V H(k) = H(k1,k2,k3+1) V", vstrict.value,
                          "image spans two energy levels; not an intertwiner in the strict sense"));
  return out;
}

std::vector<Check> suite_permutation(const SuiteOptions& o) {
  PanelRng rng(suite_seed(o.seed, 7));
  auto ws = wilson_function_panel(suite_seed(o.seed, 70), 6);
  MaxTracker perm;
  const auto perms = all_permutations();
  for (const auto& w : ws)
    for (int j = 0; j < 5; ++j) {
      double t = draw_t(rng, w, 0.1, 2.5);
      for (int n = 0; n <= 6; ++n)
        for (const auto& p : perms)
          perm.add(permutation_ratio(n, w, p, t) - 1.0,
                   "w=" + wstr(w) + " " + at_str("t", t) + " n=" + std::to_string(n));
    }
  return {finish("permutation.invariance", kPermAnchor, 1e-10, perm, "24 permutations, n <= 6")};
}

std::vector<Check> wilson_function_checks(double n, const WilsonParams& w, double t) {
  std::vector<Check> out;
  std::string at = "n=" + fmt("%.6g", n) + " w=" + wstr(w) + " " + at_str("t", t);
  if (!in_convergence_window(w)) throw ParameterError("parameters outside the Wilson-function convergence window");
  out.push_back(make_check("wilsonfn.phi_residual",
                           "(tau* tau - n(n+s-1)) Phi_n = Gamma(a+b)Gamma(a+c)Gamma(a+d) / "
                           "(Gamma(-n)Gamma(n+s-1)Gamma(a+t)Gamma(a-t))",
                           1e-6, phi_residual(n, w, t), at));
  out.push_back(make_check("wilsonfn.psi_residual",
                           "(tau* tau - n(n+s-1)) Psi_n = Gamma(2-a-b)Gamma(1-b+c)Gamma(1-b+d) / "
                           "(Gamma(1-n-a-b)Gamma(n+c+d)Gamma(a+t)Gamma(a-t))",
                           1e-6, psi_residual(n, w, t), at));
  if (std::abs(n - std::round(n)) >= kPoleGuard) {
    out.push_back(make_check("wilsonfn.eigenvalue", "(tau* tau - n(n+s-1)) (Phi_n - c_n Psi_n) = 0", 1e-7,
                             wilson_eigen_residual(n, w, t), at));
    out.push_back(make_check("wilsonfn.three_term",
                             "-(alpha^2-t^2) f_n = A_n f_{n+1} - (A_n+C_n) f_n + C_n f_{n-1}", 1e-6,
                             wilson_recurrence_residual(n, w, t), at));
  }
  return out;
}

std::vector<Check> suite_wilson_functions(const SuiteOptions& o) {
  PanelRng rng(suite_seed(o.seed, 8));
  auto ws = wilson_function_panel(suite_seed(o.seed, 80), 30);
  MaxTracker phi, psi2, eig, rec, mab, mad, mbd, intphi, lim, qt, qts, chosen_alt;
  int mu_used = 0, draws = 0;
  for (const auto& w : ws) {
    double n = 0, t = 0;
    for (;;) {
      n = rng.integer(0, 2) + rng.uniform(0.1, 0.9);
      t = draw_t(rng, w, 0.1, 0.9);
      const double ab = w.alpha + w.beta;
      if (std::min({pole_distance(-n - ab), pole_distance(1 - n - ab), pole_distance(2 - n - ab)}) > 0.05) break;
    }
    ++draws;
    std::string at = "n=" + fmt("%.6g", n) + " w=" + wstr(w) + " " + at_str("t", t);
    phi.add(phi_residual(n, w, t), at);
    psi2.add(psi_residual(n, w, t), at);
    eig.add(wilson_eigen_residual(n, w, t), at);
    rec.add(wilson_recurrence_residual(n, w, t), at);
    chosen_alt.add(std::abs(phi_residual_detail(n, w, t, EigenConstant::Printed).relative), at);
    FamilyFn f = wilson_function_family(n);
    const WilsonParams srcs[3] = {w.shifted(0.5, 0.5, -0.5, -0.5), w.shifted(0.5, -0.5, -0.5, 0.5),
                                  w.shifted(-0.5, 0.5, -0.5, 0.5)};
    bool ok = true;
    for (const auto& s : srcs) {
      ok = ok && in_convergence_window(s) && prefactor_pole_distance(s, t) > 0.05 &&
           pole_distance(1 - n - s.alpha - s.beta) > 0.05 && std::abs(w.alpha + w.gamma - 1) > 0.05;
    }
    if (ok) {
      ++mu_used;
      mab.add(mu_alpha_beta_residual(w, t, f), at);
      mad.add(mu_alpha_delta_residual(w, t, f), at);
      mbd.add(mu_beta_delta_residual(n, w, t, f), at);
    }
    for (int m = 0; m <= 3; ++m) intphi.add(phi_residual(m, w, t), at + " m=" + std::to_string(m));
    for (int m = 0; m <= 2; ++m) {
      // The extrapolation needs the mixing coefficient smooth on [m, m + 1e-3].
      if (pole_distance(1 - m - w.alpha - w.beta) < 0.1) continue;
      lim.add(integer_limit(m, w, t).relative, at + " m=" + std::to_string(m));
    }
    for (int k = 0; k <= 4; ++k) {
      qt.add(q_tau_residual(k, w, t), at + " k=" + std::to_string(k));
      qts.add(q_tau_star_residual(k, w, t), at + " k=" + std::to_string(k));
    }
  }
  // n = n' + 0.3 on a fixed draw, n' = -2..2.
  const WilsonParams& w0 = ws.front();
  for (int np = -2; np <= 2; ++np) {
    double t = draw_t(rng, w0, 0.1, 0.9);
    eig.add(wilson_eigen_residual(np + 0.3, w0, t), "n=" + fmt("%.6g", np + 0.3) + " w=" + wstr(w0));
  }
  std::vector<Check> out;
  std::string panel = std::to_string(draws) + " draws";
  out.push_back(finish("wilsonfn.phi_residual",
                       "(tau* tau - n(n+s-1)) Phi_n = Gamma(a+b)Gamma(a+c)Gamma(a+d) / "
                       "(Gamma(-n)Gamma(n+s-1)Gamma(a+t)Gamma(a-t))",
                       1e-6, phi, panel));
  out.push_back(finish("wilsonfn.psi_residual",
                       "(tau* tau - n(n+s-1)) Psi_n = Gamma(2-a-b)Gamma(1-b+c)Gamma(1-b+d) / "
                       "(Gamma(1-n-a-b)Gamma(n+c+d)Gamma(a+t)Gamma(a-t))",
                       1e-6, psi2, panel));
  out.push_back(finish("wilsonfn.integer_n", "(tau* tau - n(n+s-1)) Phi_n = 0 for integer n", 1e-10, intphi));
  out.push_back(finish("wilsonfn.eigenvalue", "(tau* tau - n(n+s-1)) (Phi_n - c_n Psi_n) = 0", 1e-7, eig, panel));
  out.push_back(finish("wilsonfn.three_term", "-(alpha^2-t^2) f_n = A_n f_{n+1} - (A_n+C_n) f_n + C_n f_{n-1}", 1e-6,
                       rec, panel));
  std::string mu_note = std::to_string(mu_used) + " draws with shifted parameters in the window";
  out.push_back(finish("wilsonfn.mu_alpha_beta", kMurecAnchor, 1e-7, mab, mu_note));
  out.push_back(finish("wilsonfn.mu_alpha_delta",
                       "mu^(alpha,delta) f(alpha+1/2,beta-1/2,gamma-1/2,delta+1/2) = (alpha+delta) f", 1e-7, mad, mu_note));
  out.push_back(finish("wilsonfn.mu_beta_delta",
                       "mu^(beta,delta) f(alpha-1/2,beta+1/2,gamma-1/2,delta+1/2) = "
                       "(n+beta+delta)(n+alpha+gamma-1)/(alpha+gamma-1) f",
                       1e-7, mbd, mu_note));
  if (mu_used == 0) out.back().status = CheckStatus::Fail;
  out.push_back(finish("wilsonfn.integer_limit", "Phi~_{m+eps} -> Phi_m as eps -> 0", 1e-5, lim,
                       "eps = 1e-3, 1e-4, 1e-5 extrapolated; m with 1-m-alpha-beta within 0.1 of a pole skipped"));
  out.push_back(finish("wilsonfn.q_tau", "tau Q(t,alpha,beta)_k = (alpha+beta-k-1) Q(t,alpha+1/2,beta+1/2)_k", 1e-11, qt));
  out.push_back(finish("wilsonfn.q_tau_star",
                       "tau* Q(t,alpha+1/2,beta+1/2)_k = -(gamma+delta+k) Q_k + k(k-beta+delta)(k-beta+gamma) Q_{k-1}",
                       1e-11, qts));
  out.push_back(make_info("wilsonfn.phi_residual.unshifted_constant",
                          "(tau* tau - n(n+s)) Phi_n against the same Gamma ratio", chosen_alt.value,
                          "eigenvalue constant n(n+s) rejected"));
  return out;
}

std::vector<Check> wilson_sum_checks(const WilsonParams& w) {
  GramResult g = wilson_gram(w);
  std::string d = "w=" + wstr(w) + " terms=" + std::to_string(g.terms) + " tail=" + fmt("%.3g", g.tail_estimate);
  Check c = make_check("wilson.orthogonality", "sum_q w(q) Phi_n1(alpha+q) Phi_n2(alpha+q) = delta_n1n2 h_n1", 1e-8,
                       g.max_offdiag_ratio(), d);
  if (!g.diagonal_positive()) c.status = CheckStatus::Fail;
  return {c};
}

std::vector<Check> suite_wilson_sum(const SuiteOptions& o) {
  auto ws = wilson_sum_panel(suite_seed(o.seed, 9), 5);
  MaxTracker m;
  bool positive = true;
  int terms = 0;
  double tail = 0;
  for (const auto& w : ws) {
    GramResult g = wilson_gram(w);
    m.add(g.max_offdiag_ratio(), "w=" + wstr(w));
    positive = positive && g.diagonal_positive();
    terms = std::max(terms, g.terms);
    tail = std::max(tail, g.tail_estimate);
  }
  Check c = finish("wilson.orthogonality", "sum_q w(q) Phi_n1(alpha+q) Phi_n2(alpha+q) = delta_n1n2 h_n1", 1e-8, m,
                   "n1,n2 <= 5; max terms " + std::to_string(terms) + ", tail " + fmt("%.3g", tail));
  if (!positive) c.status = CheckStatus::Fail;
  return {c};
}

std::vector<Check> suite_disambiguation(const SuiteOptions& o) {
  PanelRng rng(suite_seed(o.seed, 10));
  auto ks = k_panel(suite_seed(o.seed, 100), 3);
  MaxTracker l1r, l1a, l2r, l2a;
  for (const auto& k : ks)
    for (int N = 0; N <= 3; ++N)
      for (int n = 0; n <= N; ++n) {
        BasisIndex idx = BasisIndex::make(N, n);
        SpherePoint p = draw_point(rng);
        std::string at = "k=" + k.str() + " N=" + std::to_string(N) + " n=" + std::to_string(n);
        ScalarField f = [&](double x, double y) { return psi(idx, k, SpherePoint::from_xy(x, y)); };
        double lf = apply_diffop(SymOp::L1, k, f, p), v = f(p.x, p.y);
        double s1 = std::abs(lf) + std::abs(l1_eigenvalue(n, k) * v);
        l1r.add((lf - l1_eigenvalue(n, k) * v) / s1, at);
        l1a.add((lf - l1_eigenvalue_alt(n, k) * v) / s1, at);
        ScalarField g = [&](double x, double y) { return lambda_basis(idx, k, SpherePoint::from_xy(x, y)); };
        double lg = apply_diffop(SymOp::L2, k, g, p), u = g(p.x, p.y);
        double s2 = std::abs(lg) + std::abs(l2_eigenvalue(n, k) * u);
        l2r.add((lg - l2_eigenvalue(n, k) * u) / s2, at);
        l2a.add((lg - l2_eigenvalue_alt(n, k) * u) / s2, at);
      }
  auto ws = wilson_function_panel(suite_seed(o.seed, 101), 5);
  MaxTracker sh, pr;
  for (const auto& w : ws) {
    double t = draw_t(rng, w, 0.1, 0.9);
    double n = 0.7;
    sh.add(phi_residual_detail(n, w, t, EigenConstant::Shifted).relative, "w=" + wstr(w));
    pr.add(phi_residual_detail(n, w, t, EigenConstant::Printed).relative, "w=" + wstr(w));
  }
  std::vector<Check> out;
  const double reject = 1e-3;
  Check a = finish("disambiguation.mu_n_sign", "mu_n = -4n(n+k1+k2+1) - (2k1k2+2k1+2k2+3/2)", 1e-5, l1r,
                   "resolved sign -2k1k2; displayed +2k1k2-1/2 form residual " + fmt("%.3g", l1a.value));
  if (!(l1a.value > reject)) a.status = CheckStatus::Fail;
  out.push_back(a);
  Check b = finish("disambiguation.lambda_q_sign", "lambda_q = -4q(q+k2+k3+1) - (2k2k3+2k2+2k3+3/2)", 1e-5, l2r,
                   "resolved sign -2k2k3; displayed +2k2k3-1/2 form residual " + fmt("%.3g", l2a.value));
  if (!(l2a.value > reject)) b.status = CheckStatus::Fail;
  out.push_back(b);
  Check c = finish("disambiguation.eigen_constant", "(tau* tau - n(n+alpha+beta+gamma+delta-1)) Phi_n = Gamma ratio",
                   1e-6, sh, "resolved constant s-1; constant s gives residual " + fmt("%.3g", pr.value));
  if (!(pr.value > reject)) c.status = CheckStatus::Fail;
  out.push_back(c);
  Params3 k = ks.front();
  out.push_back(make_info("disambiguation.l2_middle_coefficient", "B_n(displayed) - B_n(resolved)",
                          b_printed(2, 1, k) - l2_coefficients(2, 1, k).B, "n- and N-independent offset"));
  out.push_back(make_info("disambiguation.xi_prefactor", "G(N,k) displayed / resolved at N=2",
                          xi_prefactor_printed(2, k) / xi_prefactor(2, k), "ratio (2N+K+2)^2 up to sign"));
  return out;
}

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> c = {
      {1, "quadratic-algebra closure", 5, suite_closure},
      {2, "Casimir relation", 5, suite_casimir},
      {3, "interbasis coefficients two ways", 60, suite_expansion},
      {4, "Racah orthogonality", 5, suite_racah},
      {5, "difference eigenvalue equation", 0, suite_difference},
      {6, "intertwining recurrences", 0, suite_intertwining},
      {7, "permutation symmetry", 0, suite_permutation},
      {8, "Wilson functions", 30, suite_wilson_functions},
      {9, "Wilson orthogonality", 0, suite_wilson_sum},
      {10, "eigenvalue-formula disambiguation", 0, suite_disambiguation},
  };
  return c;
}

std::vector<Check> run_all_suites(const SuiteOptions& o) {
  std::vector<Check> all;
  for (const auto& c : acceptance_criteria()) {
    auto t0 = std::chrono::steady_clock::now();
    auto checks = c.suite(o);
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (auto& ch : checks) ch.seconds = dt;
    all.insert(all.end(), checks.begin(), checks.end());
  }
  return all;
}

}  // namespace racahlab
