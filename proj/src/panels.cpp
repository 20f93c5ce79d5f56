#include "racahlab/panels.hpp"

#include <algorithm>
#include <cmath>

#include "racahlab/errors.hpp"
#include "racahlab/wilson_functions.hpp"

namespace racahlab {

double PanelRng::uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

double PanelRng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

int PanelRng::integer(int lo, int hi) {
  int v = lo + static_cast<int>(std::floor(uniform() * (hi - lo + 1)));
  return std::min(v, hi);
}

std::vector<Params3> k_panel(std::uint64_t seed, int count, double lo, double hi) {
  if (!(hi > lo) || lo < 0) throw ParameterError("k_panel: need 0 <= lo < hi");
  PanelRng rng(seed);
  std::vector<Params3> out;
  for (int i = 0; i < count; ++i) {
    double k1 = lo + (hi - lo) * (1 - rng.uniform());
    double k2 = lo + (hi - lo) * (1 - rng.uniform());
    double k3 = lo + (hi - lo) * (1 - rng.uniform());
    out.push_back(Params3::make(k1, k2, k3));
  }
  return out;
}

std::vector<WilsonParams> wilson_function_panel(std::uint64_t seed, int count) {
  PanelRng rng(seed);
  std::vector<WilsonParams> out;
  while (static_cast<int>(out.size()) < count) {
    double a = rng.uniform(0.2, 1.6), b = rng.uniform(-0.8, 0.8);
    double g = rng.uniform(0.2, 1.6), d = rng.uniform(0.2, 1.6);
    WilsonParams w = WilsonParams::make(a, b, g, d);
    if (in_convergence_window(w.shifted(-0.1, -0.1, -0.1, -0.1)) && a + b > 0.1 && 2 - a - b > 0.1 &&
        1 - b + g > 0.1 && 1 - b + d > 0.1)
      out.push_back(w);
  }
  return out;
}

std::vector<WilsonParams> wilson_sum_panel(std::uint64_t seed, int count) {
  PanelRng rng(seed);
  std::vector<WilsonParams> out;
  for (int i = 0; i < count; ++i) {
    double a = rng.uniform(0.3, 0.9);
    double ab = rng.uniform(0.2, 0.95);
    int m = rng.integer(10, 11);
    double ag = -m - rng.uniform(0.1, 0.9);
    double ad = -m - rng.uniform(0.1, 0.9);
    out.push_back(WilsonParams::make(a, ab - a, ag - a, ad - a));
  }
  return out;
}

double prefactor_pole_distance(const WilsonParams& w, double t) {
  auto dist = [](double x) { return x > 0.5 ? 1.0 : std::abs(x - std::round(x)); };
  double d = 1.0;
  for (double s : {t - 1, t, t + 1}) {
    d = std::min({d, dist(1 - w.beta + s), dist(1 - w.beta - s), dist(w.alpha + s), dist(w.alpha - s)});
  }
  return d;
}

}  // namespace racahlab
