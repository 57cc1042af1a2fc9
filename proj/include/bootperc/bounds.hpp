#pragma once

#include <cstdint>
#include <vector>

namespace bootperc {

// Binomial tail inequalities used by the analysis pipeline, plus the exact
// tail they are audited against. Every closed form is evaluated in log space
// and reports whether its stated regime holds; values are still returned
// outside the regime so callers can inspect them, but no inequality is
// promised there.

// P(Bin(n,p) >= m), absolute error comfortably under 1e-12 for n <= 1e6.
// Computed by normalizing a long double sweep of the pmf around its mode, so
// no lgamma cancellation enters.
double exact_binomial_tail(std::uint64_t n, double p, std::uint64_t m);

// P(Bin(n,p) <= m).
double exact_binomial_cdf(std::uint64_t n, double p, std::uint64_t m);

// Two-sided Chernoff-Hoeffding: P(S >= np + t) and P(S <= np - t) are both
// at most exp(-2 t^2 / n) for any n >= 1, t >= 0.
double chernoff_upper(std::uint64_t n, double t);

// Matching lower bound for the upper tail near 1/2: with p = 1/2 - delta,
//   P(S >= n/2 + C) >= exp(-2 delta^2 n - 4 delta sqrt(n/log n)
//                          - log(log n)/2 - 6)
// valid for fixed small C >= 0 once n is large; regime flags report
// 8 delta^4 n <= 1 and n >= n_min (the working stand-in for "n large
// enough"; default 100). Note the value does not depend on C: the constant 6
// absorbs small shifts of the cut, which is why C must stay O(1).
struct LowerTailBound {
  double value = 0.0;
  bool delta_regime_ok = false;  // 0 <= 8 delta^4 n <= 1
  bool n_ok = false;             // n >= n_min
};

LowerTailBound chernoff_lower(std::uint64_t n, double delta, double C,
                              std::uint64_t n_min = 100);

// Weighted-layer tail: Y = sum_{i=1..k} i * X_i with X_i ~ Bin(d_i, p)
// independent. With D = sum i^2 d_i,
//   P(Y >= E[Y] + t) <= (2t)^{k-1} exp(-2 t^2 / D).
// k = 1 reduces to chernoff_upper. The bound can exceed 1; it is reported
// as computed.
struct WeightedLayerSpec {
  std::vector<std::uint64_t> d;  // d[i-1] = d_i, i = 1..k
  double p = 0.5;
};

struct WeightedTailBound {
  double value = 0.0;
  double mean = 0.0;      // E[Y] = p * sum i d_i
  double weight_sum = 0.0;  // D = sum i^2 d_i
};

WeightedTailBound weighted_layer_tail(const WeightedLayerSpec& spec, double t);

// Sparse regime: if p n^2 <= 1 then P(Bin(n,p) >= m) <= 2 p^(m/2) for every
// m in [0, n] (m = 0 gives the vacuous bound 2).
struct SmallPTailBound {
  double value = 0.0;
  bool regime_ok = false;  // p n^2 <= 1
};

SmallPTailBound small_p_tail(std::uint64_t n, double p, std::uint64_t m);

// Central binomial coefficient lower bound: for even n with 8m <= n and
// 4m^3 <= n^2,
//   C(n, n/2 + m) >= 2^(n-1) / sqrt(pi n) * exp(-2m^2/n - 1).
struct CentralBinomialBound {
  double value = 0.0;
  bool regime_ok = false;
};

CentralBinomialBound central_binomial_lower(std::uint64_t n, std::uint64_t m);

// First-order location of the majority critical probability on Q_n:
//   p(lambda) = 1/2 - (1/2) sqrt(log n / n) + lambda log log n / sqrt(n log n)
// with the proven window [p(-2), p(1/2)]. Requires n >= 16 so log log n > 0.
struct CriticalWindowBounds {
  double p_lower = 0.0;   // p(-2)
  double p_center = 0.0;  // p(0)
  double p_upper = 0.0;   // p(1/2)
};

double p_at_lambda(std::uint64_t n, double lambda);
CriticalWindowBounds critical_probability_bounds(std::uint64_t n);

// Size condition for percolation on d-regular graphs with sphere-neighbour
// profile f: percolation at p = 1/2 - o(1)-scale slack is ruled in only when
//   log N <= d^k / ((omega k)^k (f_{k-1} + f_k) prod_{i=1..k-1} f_i),
// and the profile must be small: max_i f_i <= d / (k log d). f has indices
// 0..k with f[0] = 1.
struct RegularSizeCondition {
  double exponent = 0.0;        // right-hand side above
  double log_vertices = 0.0;
  bool size_ok = false;         // log N <= exponent
  double margin = 0.0;          // exponent - log N
  double f_max = 0.0;
  double smallness_threshold = 0.0;  // d / (k log d)
  bool smallness_ok = false;
};

RegularSizeCondition regular_size_condition(std::uint32_t d, std::uint32_t k,
                                            double log_vertices,
                                            const std::vector<std::uint64_t>& f,
                                            double omega);

}  // namespace bootperc
