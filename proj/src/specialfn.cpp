#include "racahlab/specialfn.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "racahlab/errors.hpp"

namespace racahlab {

namespace {

#if defined(__SIZEOF_FLOAT128__)
using wide = __float128;
#else
using wide = long double;
#endif

struct Neumaier {
  long double sum = 0.0L;
  long double comp = 0.0L;
  void add(long double v) {
    long double t = sum + v;
    if (fabsl(sum) >= fabsl(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  }
  long double total() const { return sum + comp; }
};

int termination_order(const std::vector<double>& num) {
  int m = -1;
  for (double a : num) {
    if (is_nonpositive_integer(a)) {
      int order = static_cast<int>(-a);
      if (m < 0 || order < m) m = order;
    }
  }
  return m;
}

HypSeriesResult sum_terminating(const HypSeriesSpec& s, int m) {
  wide term = 1;
  wide total = 1;
  const wide z = s.argument;
  for (int k = 0; k < m; ++k) {
    wide ratio = z / static_cast<wide>(k + 1);
    for (double a : s.numerator_params) ratio *= static_cast<wide>(a) + k;
    for (double b : s.denominator_params) ratio /= static_cast<wide>(b) + k;
    term *= ratio;
    total += term;
  }
  HypSeriesResult r;
  r.value = static_cast<double>(total);
  r.terms_used = m + 1;
  return r;
}

long double term_ratio(const HypSeriesSpec& s, long double k) {
  long double ratio = static_cast<long double>(s.argument) / (k + 1.0L);
  for (double a : s.numerator_params) ratio *= a + k;
  for (double b : s.denominator_params) ratio /= b + k;
  return ratio;
}

HypSeriesResult sum_geometric(const HypSeriesSpec& s) {
  Neumaier acc;
  long double term = 1.0L;
  acc.add(term);
  HypSeriesResult r;
  for (int k = 0; k + 1 < s.max_terms; ++k) {
    long double ratio = term_ratio(s, k);
    term *= ratio;
    acc.add(term);
    r.terms_used = k + 2;
    if (term == 0.0L) {
      r.value = static_cast<double>(acc.total());
      return r;
    }
    long double rnext = fabsl(term_ratio(s, k + 1));
    if (rnext < 1.0L) {
      long double tail = fabsl(term) * rnext / (1.0L - rnext);
      if (tail <= s.tail_tolerance * fabsl(acc.total())) {
        r.value = static_cast<double>(acc.total());
        r.error_estimate = static_cast<double>(tail);
        return r;
      }
    }
  }
  r.value = static_cast<double>(acc.total());
  r.truncated = true;
  r.error_estimate = static_cast<double>(fabsl(term));
  return r;
}

HypSeriesResult sum_unit_balanced(const HypSeriesSpec& s, double sigma) {
  double scale = 1.0;
  for (double a : s.numerator_params) scale = std::max(scale, std::abs(a));
  for (double b : s.denominator_params) scale = std::max(scale, std::abs(b));
  int k0 = 64;
  while (k0 < 16.0 * (scale + 1.0)) k0 *= 2;

  std::vector<std::vector<long double>> table;
  std::vector<int> checkpoints;
  Neumaier acc;
  long double term = 1.0L;
  acc.add(term);
  int summed = 1;
  int next = k0;

  HypSeriesResult best;
  best.error_estimate = std::numeric_limits<double>::infinity();
  best.truncated = true;
  int worse = 0;

  while (next <= s.max_terms) {
    for (; summed < next; ++summed) {
      term *= term_ratio(s, summed - 1);
      acc.add(term);
    }
    std::vector<long double> row{acc.total()};
    const std::size_t j = table.size();
    for (std::size_t i = 1; i <= j; ++i) {
      long double denom = std::pow(2.0L, static_cast<long double>(sigma) + (i - 1)) - 1.0L;
      row.push_back(row[i - 1] + (row[i - 1] - table[j - 1][i - 1]) / denom);
    }
    table.push_back(row);
    checkpoints.push_back(next);
    next *= 2;
    if (j == 0) continue;

    long double diag = table[j][j];
    long double err = fabsl(diag - table[j - 1][j - 1]);
    if (err < best.error_estimate) {
      best.value = static_cast<double>(diag);
      best.error_estimate = static_cast<double>(err);
      best.terms_used = checkpoints[j];
      worse = 0;
    } else if (++worse >= 2) {
      break;
    }
    if (err <= s.tail_tolerance * fabsl(diag)) break;
  }
  if (table.empty()) {
    best.value = static_cast<double>(acc.total());
    best.terms_used = summed;
    return best;
  }
  best.truncated = !(best.error_estimate <= s.tail_tolerance * std::abs(best.value));
  return best;
}

}  // namespace

double SignedLog::value() const {
  if (sign == 0) return 0.0;
  return sign * std::exp(log_abs);
}

SignedLog SignedLog::operator*(const SignedLog& o) const {
  if (sign == 0 || o.sign == 0) return {-std::numeric_limits<double>::infinity(), 0};
  return {log_abs + o.log_abs, sign * o.sign};
}

SignedLog SignedLog::operator/(const SignedLog& o) const {
  if (o.sign == 0) throw PoleError("division by an exact zero in log space");
  if (sign == 0) return *this;
  return {log_abs - o.log_abs, sign * o.sign};
}

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::nearbyint(x); }

SignedLog log_gamma(double x) {
  if (is_nonpositive_integer(x)) throw PoleError("gamma pole at " + std::to_string(x));
  int sign = 1;
  double v = lgamma_r(x, &sign);
  return {v, sign};
}

double gamma_fn(double x) {
  if (is_nonpositive_integer(x)) throw PoleError("gamma pole at " + std::to_string(x));
  return std::tgamma(x);
}

double pochhammer(double a, int k) {
  if (k < 0) throw DomainError("pochhammer: negative k");
  if (k > 32 && a > 0.0) {
    return std::exp(log_gamma(a + k).log_abs - log_gamma(a).log_abs);
  }
  double p = 1.0;
  for (int i = 0; i < k; ++i) p *= a + i;
  return p;
}

SignedLog log_pochhammer(double a, int k) {
  if (k < 0) throw DomainError("pochhammer: negative k");
  if (k <= 32) {
    double p = 1.0;
    for (int i = 0; i < k; ++i) p *= a + i;
    if (p == 0.0) return {-std::numeric_limits<double>::infinity(), 0};
    if (std::isfinite(p)) return {std::log(std::abs(p)), p > 0 ? 1 : -1};
  }
  if (is_nonpositive_integer(a)) {
    if (k > -a) return {-std::numeric_limits<double>::infinity(), 0};
    // (a)_k = (-1)^k (1-a-k)_k with every factor of the reflected product positive.
    SignedLog r = log_gamma(1.0 - a) / log_gamma(1.0 - a - k);
    if (k % 2) r.sign = -r.sign;
    return r;
  }
  return log_gamma(a + k) / log_gamma(a);
}

HypSeriesResult hyp_pfq(const HypSeriesSpec& s) {
  if (s.max_terms < 1) throw DomainError("hyp_pfq: max_terms must be positive");
  if (s.tail_tolerance < 0.0) throw DomainError("hyp_pfq: negative tail tolerance");
  const int m = termination_order(s.numerator_params);
  for (double b : s.denominator_params) {
    if (is_nonpositive_integer(b) && (m < 0 || static_cast<int>(-b) < m)) {
      throw PoleError("hyp_pfq: denominator parameter " + std::to_string(b) +
                      " reached before termination");
    }
  }
  if (m >= 0) return sum_terminating(s, m);
  if (s.argument == 0.0) return {1.0, 1, false, 0.0};

  const std::size_t p = s.numerator_params.size();
  const std::size_t q = s.denominator_params.size();
  if (p > q + 1) throw DivergenceError("hyp_pfq: p > q+1 with nonzero argument");
  if (p == q + 1) {
    const double z = std::abs(s.argument);
    if (z > 1.0) throw DivergenceError("hyp_pfq: |argument| > 1");
    if (z == 1.0) {
      double sigma = 0.0;
      for (double b : s.denominator_params) sigma += b;
      for (double a : s.numerator_params) sigma -= a;
      if (s.argument == 1.0) {
        if (!(sigma > 0.0)) throw DivergenceError("hyp_pfq: unit argument needs positive balance");
        return sum_unit_balanced(s, sigma);
      }
      if (!(sigma > -1.0)) throw DivergenceError("hyp_pfq: argument -1 needs balance > -1");
    }
  }
  return sum_geometric(s);
}

double jacobi_p(int n, double alpha, double beta, double y) {
  if (n < 0) throw DomainError("jacobi_p: negative degree");
  if (!(alpha > -1.0)) throw DomainError("jacobi_p: alpha must exceed -1");
  const wide z = (1 - static_cast<wide>(y)) / 2;
  wide coef = 1;
  for (int i = 1; i <= n; ++i) coef *= (static_cast<wide>(alpha) + i) / i;
  wide term = coef;
  wide total = coef;
  const wide ab1 = static_cast<wide>(alpha) + beta + 1 + n;
  for (int k = 0; k < n; ++k) {
    term *= static_cast<wide>(k - n) * (ab1 + k) / ((static_cast<wide>(alpha) + 1 + k) * (k + 1)) * z;
    total += term;
  }
  return static_cast<double>(total);
}

double jacobi_p_dy(int n, double alpha, double beta, double y) {
  if (n < 0) throw DomainError("jacobi_p_dy: negative degree");
  if (!(alpha > -1.0)) throw DomainError("jacobi_p_dy: alpha must exceed -1");
  if (n == 0) return 0.0;
  const wide z = (1 - static_cast<wide>(y)) / 2;
  wide coef = 1;
  for (int i = 1; i <= n; ++i) coef *= (static_cast<wide>(alpha) + i) / i;
  // c_k z^k differentiated term by term; c_k carried without the z power.
  wide c = coef;
  wide zpow = 1;
  wide total = 0;
  const wide ab1 = static_cast<wide>(alpha) + beta + 1 + n;
  for (int k = 0; k < n; ++k) {
    c *= static_cast<wide>(k - n) * (ab1 + k) / ((static_cast<wide>(alpha) + 1 + k) * (k + 1));
    total += c * (k + 1) * zpow;
    zpow *= z;
  }
  return static_cast<double>(-total / 2);
}

}  // namespace racahlab
