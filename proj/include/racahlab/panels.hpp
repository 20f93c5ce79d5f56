#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "racahlab/sphere_basis.hpp"
#include "racahlab/wilson_racah.hpp"

namespace racahlab {

inline constexpr std::uint64_t kDefaultSeed = 20240607;

// Random panels: std::mt19937_64 seeded with the run seed. A uniform draw on [0, 1)
// takes the top 53 bits of the next 64-bit output, u = (x >> 11) * 2^-53.
class PanelRng {
 public:
  explicit PanelRng(std::uint64_t seed) : eng_(seed) {}
  double uniform();
  // lo + (hi - lo) * u
  double uniform(double lo, double hi);
  // lo + floor(u * (hi - lo + 1))
  int integer(int lo, int hi);

 private:
  std::mt19937_64 eng_;
};

// k_j = lo + (hi - lo)(1 - u), in (lo, hi]; drawn in the order k1, k2, k3.
std::vector<Params3> k_panel(std::uint64_t seed, int count, double lo = 0.0, double hi = 2.0);

// Draws with alpha, gamma, delta in [0.2, 1.6) and beta in [-0.8, 0.8), rejected unless every
// sum in the Wilson-function convergence window exceeds 0.1.
std::vector<WilsonParams> wilson_function_panel(std::uint64_t seed, int count);

// alpha in [0.3, 0.9), alpha+beta in [0.2, 0.95), and alpha+gamma, alpha+delta in
// (-m-0.9, -m-0.1) for the same m in {10, 11}.
std::vector<WilsonParams> wilson_sum_panel(std::uint64_t seed, int count);

// Distance from t, t-1 and t+1 to the poles of the Gamma prefactors of q_basis.
double prefactor_pole_distance(const WilsonParams& w, double t);

}  // namespace racahlab
