#include "bootperc/sampler.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace bootperc {

Estimate wilson_estimate(std::uint64_t successes, std::uint64_t trials) {
  if (trials == 0) throw std::invalid_argument("wilson_estimate: trials must be positive");
  if (successes > trials)
    throw std::invalid_argument("wilson_estimate: successes exceed trials");
  Estimate e;
  e.trials = trials;
  e.successes = successes;
  double n = double(trials);
  double ph = double(successes) / n;
  double z2 = kWilsonZ * kWilsonZ;
  double denom = 1.0 + z2 / n;
  double center = (ph + z2 / (2.0 * n)) / denom;
  double half = (kWilsonZ / denom) * std::sqrt(ph * (1.0 - ph) / n + z2 / (4.0 * n * n));
  e.p_hat = ph;
  // In exact arithmetic the interval always contains p_hat (at the extremes
  // one endpoint lands exactly on it); clamp away the float residue so that
  // invariant survives rounding.
  e.ci_lo = std::min(std::max(0.0, center - half), ph);
  e.ci_hi = std::max(std::min(1.0, center + half), ph);
  return e;
}

VertexSet sample_initial(const Graph& g, double p, std::uint64_t seed, std::uint64_t trial) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("sample_initial: p outside [0,1]");
  std::uint64_t n = g.vertex_count();
  VertexSet s(n);
  for (std::uint64_t v = 0; v < n; ++v)
    if (vertex_uniform(seed, trial, v) < p) s.set(Vertex(v));
  return s;
}

namespace {

// Successes over trials [first, last) at probe probability p, split evenly
// across workers. Each worker owns a contiguous trial range and its own
// scratch, and only the per-range success counts are combined.
std::uint64_t count_percolating(const Graph& g, const ThresholdSchedule& sched, double p,
                                std::uint64_t seed, std::uint64_t first, std::uint64_t last,
                                std::uint32_t workers) {
  if (last <= first) return 0;
  auto run_range = [&](std::uint64_t lo, std::uint64_t hi) {
    EngineScratch scratch;
    std::uint64_t hits = 0;
    for (std::uint64_t t = lo; t < hi; ++t)
      hits += scratch.percolates(g, sample_initial(g, p, seed, t), sched);
    return hits;
  };
  std::uint64_t span = last - first;
  if (workers <= 1 || span < 2 * workers) return run_range(first, last);

  std::vector<std::uint64_t> partial(workers, 0);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::uint32_t w = 0; w < workers; ++w) {
    std::uint64_t lo = first + span * w / workers;
    std::uint64_t hi = first + span * (w + 1) / workers;
    pool.emplace_back([&, w, lo, hi] { partial[w] = run_range(lo, hi); });
  }
  for (auto& th : pool) th.join();
  std::uint64_t total = 0;
  for (std::uint64_t c : partial) total += c;
  return total;
}

}  // namespace

Estimate estimate_percolation_prob(const Graph& g, const ThresholdSchedule& sched, double p,
                                   const TrialPlan& plan) {
  if (plan.trials == 0) throw std::invalid_argument("estimate: need at least one trial");
  std::uint64_t s =
      count_percolating(g, sched, p, plan.master_seed, 0, plan.trials, plan.workers);
  return wilson_estimate(s, plan.trials);
}

ExactResult exact_percolation_prob(const Graph& g, const ThresholdSchedule& sched, double p) {
  std::uint64_t n = g.vertex_count();
  if (n > 22) throw std::invalid_argument("exact: enumeration restricted to N <= 22");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("exact: p outside [0,1]");

  // Weights p^|S| (1-p)^(N-|S|) grouped by popcount; the per-size weights are
  // formed once so every subset of one size contributes the same double.
  std::vector<double> weight(n + 1);
  for (std::uint64_t k = 0; k <= n; ++k) {
    double w = 1.0;
    for (std::uint64_t i = 0; i < k; ++i) w *= p;
    for (std::uint64_t i = k; i < n; ++i) w *= (1.0 - p);
    weight[k] = w;
  }

  ExactResult out;
  out.subsets = std::uint64_t(1) << n;
  EngineScratch scratch;
  double sum = 0.0, comp = 0.0;  // Kahan
  for (std::uint64_t mask = 0; mask < out.subsets; ++mask) {
    VertexSet set(n);
    for (std::uint64_t v = 0; v < n; ++v)
      if ((mask >> v) & 1) set.set(Vertex(v));
    if (scratch.percolates(g, set, sched)) {
      ++out.percolating;
      double y = weight[std::popcount(mask)] - comp;
      double t = sum + y;
      comp = (t - sum) - y;
      sum = t;
    }
  }
  out.prob = sum;
  return out;
}

namespace {

// Probe at p: extend the coupled trial stream in doublings until the Wilson
// interval clears the target or the cap is reached.
ProbeRecord run_probe(const Graph& g, const ThresholdSchedule& sched, double p,
                      const CriticalOptions& opt) {
  ProbeRecord pr;
  pr.p = p;
  std::uint64_t cap = opt.base_trials << opt.doublings;
  std::uint64_t trials = opt.base_trials;
  std::uint64_t successes =
      count_percolating(g, sched, p, opt.master_seed, 0, trials, opt.workers);
  for (;;) {
    pr.est = wilson_estimate(successes, trials);
    if (pr.est.ci_lo > opt.target) {
      pr.side = +1;
      return pr;
    }
    if (pr.est.ci_hi < opt.target) {
      pr.side = -1;
      return pr;
    }
    if (trials >= cap) {
      pr.side = 0;
      return pr;
    }
    successes +=
        count_percolating(g, sched, p, opt.master_seed, trials, 2 * trials, opt.workers);
    trials *= 2;
  }
}

}  // namespace

CriticalEstimate estimate_pc(const Graph& g, const ThresholdSchedule& sched,
                             const CriticalOptions& opt) {
  if (opt.base_trials == 0) throw std::invalid_argument("estimate_pc: need base trials");
  if (!(opt.tol > 0.0)) throw std::invalid_argument("estimate_pc: tol must be positive");
  if (!(opt.target > 0.0 && opt.target < 1.0))
    throw std::invalid_argument("estimate_pc: target must lie in (0,1)");

  CriticalEstimate ce;
  ce.target = opt.target;

  // Degenerate screen: if the empty set already percolates (threshold 0
  // schedules), the crossing sits at 0 and sampling is pointless.
  if (run_to_fixpoint(g, VertexSet(g.vertex_count()), sched).percolated) {
    ce.pc_hat = 0.0;
    ce.bracket_lo = 0.0;
    ce.bracket_hi = 0.0;
    ce.converged = true;
    ce.degenerate = true;
    ce.stop_reason = "degenerate";
    return ce;
  }

  double lo = 0.0, hi = 1.0;  // P(percolate|0) = 0 < target, P(|1) = 1 > target
  ce.stop_reason = "probe_budget";
  while (ce.probes.size() < opt.max_probes) {
    if (hi - lo <= opt.tol) {
      ce.stop_reason = "tol";
      break;
    }
    ProbeRecord pr = run_probe(g, sched, (lo + hi) / 2.0, opt);
    ce.probes.push_back(pr);
    if (pr.side > 0)
      hi = pr.p;
    else if (pr.side < 0)
      lo = pr.p;
    else {
      ce.stop_reason = "probe_undecided";
      break;
    }
  }
  ce.bracket_lo = lo;
  ce.bracket_hi = hi;
  ce.pc_hat = (lo + hi) / 2.0;
  ce.converged = (hi - lo) <= opt.tol;
  return ce;
}

WindowEstimate estimate_window(const Graph& g, const ThresholdSchedule& sched, double alpha,
                               const CriticalOptions& opt) {
  if (!(alpha > 0.0 && alpha < 0.5))
    throw std::invalid_argument("estimate_window: alpha must lie in (0, 1/2)");
  WindowEstimate w;
  w.alpha = alpha;
  CriticalOptions o = opt;
  o.target = alpha;
  w.low = estimate_pc(g, sched, o);
  o.target = 1.0 - alpha;
  w.high = estimate_pc(g, sched, o);
  w.width = w.high.pc_hat - w.low.pc_hat;
  return w;
}

}  // namespace bootperc
