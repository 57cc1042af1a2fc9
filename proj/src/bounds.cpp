#include "bootperc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bootperc {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Splits the Bin(n,p) mass at m into (P(X < m), P(X >= m)). Terms are taken
// relative to the pmf at the mode and summed in long double; dividing by the
// total renormalizes, so binomial coefficients never appear explicitly and
// the only rounding is the ratio chain itself. Terms below 1e-25 of the
// running total are dropped; past the mode the pmf decays at least
// geometrically there, so the neglected mass is irrelevant at the 1e-12
// scale.
void binomial_split(std::uint64_t n, double p, std::uint64_t m, long double& below,
                    long double& tail) {
  long double q = 1.0L - (long double)p;
  std::uint64_t mode = std::min<std::uint64_t>(n, (std::uint64_t)((n + 1) * (long double)p));

  long double total = 1.0L;
  below = (mode < m) ? 1.0L : 0.0L;
  tail = (mode >= m) ? 1.0L : 0.0L;

  long double r = (long double)p / q;
  long double term = 1.0L;
  for (std::uint64_t k = mode; k < n; ++k) {
    term *= r * (long double)(n - k) / (long double)(k + 1);
    total += term;
    (k + 1 >= m ? tail : below) += term;
    if (term < total * 1e-25L && k > mode) break;
  }
  term = 1.0L;
  for (std::uint64_t k = mode; k > 0; --k) {
    term *= (long double)k / ((long double)(n - k + 1) * r);
    total += term;
    (k - 1 >= m ? tail : below) += term;
    if (term < total * 1e-25L && k < mode) break;
  }
  below /= total;
  tail /= total;
}

}  // namespace

double exact_binomial_tail(std::uint64_t n, double p, std::uint64_t m) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("binomial: p outside [0,1]");
  if (m == 0) return 1.0;
  if (m > n) return 0.0;
  if (p == 0.0) return 0.0;
  if (p == 1.0) return 1.0;
  long double below, tail;
  binomial_split(n, p, m, below, tail);
  return (double)tail;
}

double exact_binomial_cdf(std::uint64_t n, double p, std::uint64_t m) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("binomial: p outside [0,1]");
  if (m >= n) return 1.0;
  if (p == 0.0) return 1.0;
  if (p == 1.0) return 0.0;
  long double below, tail;
  binomial_split(n, p, m + 1, below, tail);
  return (double)below;
}

double chernoff_upper(std::uint64_t n, double t) {
  if (n == 0) throw std::invalid_argument("chernoff: need n >= 1");
  if (t < 0.0) throw std::invalid_argument("chernoff: need t >= 0");
  return std::exp(-2.0 * t * t / double(n));
}

LowerTailBound chernoff_lower(std::uint64_t n, double delta, double C, std::uint64_t n_min) {
  if (n < 3) throw std::invalid_argument("chernoff_lower: need n >= 3");
  if (delta < 0.0 || delta >= 0.5)
    throw std::invalid_argument("chernoff_lower: need 0 <= delta < 1/2");
  if (C < 0.0) throw std::invalid_argument("chernoff_lower: need C >= 0");
  double ln = std::log(double(n));
  LowerTailBound b;
  b.value = std::exp(-2.0 * delta * delta * double(n) - 4.0 * delta * std::sqrt(double(n) / ln) -
                     0.5 * std::log(ln) - 6.0);
  b.delta_regime_ok = 8.0 * delta * delta * delta * delta * double(n) <= 1.0;
  b.n_ok = n >= n_min;
  return b;
}

WeightedTailBound weighted_layer_tail(const WeightedLayerSpec& spec, double t) {
  if (spec.d.empty()) throw std::invalid_argument("weighted tail: need k >= 1 layers");
  if (!(spec.p > 0.0 && spec.p < 1.0))
    throw std::invalid_argument("weighted tail: p outside (0,1)");
  if (!(t > 0.0)) throw std::invalid_argument("weighted tail: need t > 0");
  std::size_t k = spec.d.size();
  WeightedTailBound b;
  for (std::size_t i = 1; i <= k; ++i) {
    if (spec.d[i - 1] == 0) throw std::invalid_argument("weighted tail: layer sizes must be >= 1");
    b.mean += double(i) * double(spec.d[i - 1]);
    b.weight_sum += double(i) * double(i) * double(spec.d[i - 1]);
  }
  b.mean *= spec.p;
  double log_value = double(k - 1) * std::log(2.0 * t) - 2.0 * t * t / b.weight_sum;
  b.value = std::exp(log_value);
  return b;
}

SmallPTailBound small_p_tail(std::uint64_t n, double p, std::uint64_t m) {
  if (!(p >= 0.0 && p < 1.0)) throw std::invalid_argument("small_p tail: p outside [0,1)");
  if (m > n) throw std::invalid_argument("small_p tail: need m <= n");
  SmallPTailBound b;
  b.value = 2.0 * std::pow(p, double(m) / 2.0);
  b.regime_ok = p * double(n) * double(n) <= 1.0;
  return b;
}

CentralBinomialBound central_binomial_lower(std::uint64_t n, std::uint64_t m) {
  if (n == 0 || n % 2 != 0) throw std::invalid_argument("central binomial: need even n >= 2");
  CentralBinomialBound b;
  double log_value = double(n - 1) * std::log(2.0) - 0.5 * std::log(kPi * double(n)) -
                     2.0 * double(m) * double(m) / double(n) - 1.0;
  b.value = std::exp(log_value);
  b.regime_ok = (8 * m <= n) && (4 * m * m * m <= n * n);
  return b;
}

double p_at_lambda(std::uint64_t n, double lambda) {
  if (n < 16) throw std::invalid_argument("critical bounds: need n >= 16");
  double ln = std::log(double(n));
  return 0.5 - 0.5 * std::sqrt(ln / double(n)) +
         lambda * std::log(ln) / std::sqrt(double(n) * ln);
}

CriticalWindowBounds critical_probability_bounds(std::uint64_t n) {
  CriticalWindowBounds w;
  w.p_lower = p_at_lambda(n, -2.0);
  w.p_center = p_at_lambda(n, 0.0);
  w.p_upper = p_at_lambda(n, 0.5);
  return w;
}

RegularSizeCondition regular_size_condition(std::uint32_t d, std::uint32_t k,
                                            double log_vertices,
                                            const std::vector<std::uint64_t>& f, double omega) {
  if (d < 2) throw std::invalid_argument("size condition: need degree >= 2");
  if (k < 1) throw std::invalid_argument("size condition: need k >= 1");
  if (!(omega > 0.0)) throw std::invalid_argument("size condition: need omega > 0");
  if (f.size() < std::size_t(k) + 1)
    throw std::invalid_argument("size condition: profile must cover indices 0..k");
  for (std::size_t i = 0; i <= k; ++i)
    if (f[i] < 1) throw std::invalid_argument("size condition: profile entries must be >= 1");
  if (!(log_vertices >= 0.0))
    throw std::invalid_argument("size condition: need log N >= 0");

  double log_exp = double(k) * (std::log(double(d)) - std::log(omega * double(k))) -
                   std::log(double(f[k - 1] + f[k]));
  for (std::uint32_t i = 1; i < k; ++i) log_exp -= std::log(double(f[i]));

  RegularSizeCondition c;
  c.exponent = std::exp(log_exp);
  c.log_vertices = log_vertices;
  c.size_ok = log_vertices <= c.exponent;
  c.margin = c.exponent - log_vertices;
  c.f_max = 0.0;
  for (std::uint32_t i = 1; i <= k; ++i) c.f_max = std::max(c.f_max, double(f[i]));
  c.smallness_threshold = double(d) / (double(k) * std::log(double(d)));
  c.smallness_ok = c.f_max <= c.smallness_threshold;
  return c;
}

}  // namespace bootperc
