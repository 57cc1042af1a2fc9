#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bootperc/engine.hpp"
#include "bootperc/graph.hpp"
#include "bootperc/rng.hpp"
#include "bootperc/schedule.hpp"

namespace bootperc {

// Wilson score interval at 95% (z fixed below). Used everywhere a success
// proportion is reported; the bisection relies on its coverage to decide
// which side of a target a probe sits on.
struct Estimate {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double p_hat = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 1.0;
};

inline constexpr double kWilsonZ = 1.959963984540054;

Estimate wilson_estimate(std::uint64_t successes, std::uint64_t trials);

// Initial set for one trial: vertex v is infected iff its keyed uniform is
// below p (see rng.hpp for the coupling this buys).
VertexSet sample_initial(const Graph& g, double p, std::uint64_t seed, std::uint64_t trial);

struct TrialPlan {
  std::uint64_t trials = 1000;
  std::uint64_t master_seed = 0;
  std::uint32_t workers = 1;
};

// Monte Carlo percolation probability; worker partitioning cannot change the
// result because each trial is a pure function of (seed, trial).
Estimate estimate_percolation_prob(const Graph& g, const ThresholdSchedule& sched, double p,
                                   const TrialPlan& plan);

// Full enumeration of the 2^N initial sets, N <= 22. Probability mass is
// accumulated with Kahan compensation; at p = 1/2 every subset has weight
// 2^-N and the result is exactly (number of percolating sets) / 2^N.
struct ExactResult {
  double prob = 0.0;
  std::uint64_t subsets = 0;
  std::uint64_t percolating = 0;
};

ExactResult exact_percolation_prob(const Graph& g, const ThresholdSchedule& sched, double p);

// One bisection probe: the trial batch at probe probability p, the Wilson
// interval it ended with, and which side of the target it was assigned
// (side = 0 means the interval still straddled the target at the trial cap).
struct ProbeRecord {
  double p = 0.0;
  Estimate est;
  int side = 0;
};

struct CriticalOptions {
  std::uint64_t base_trials = 1000;
  double tol = 0.01;
  std::uint64_t master_seed = 0;
  std::uint32_t workers = 1;
  double target = 0.5;        // probability level whose crossing is sought
  std::uint32_t doublings = 6;  // trial budget cap per probe: base * 2^doublings
  std::uint32_t max_probes = 64;
};

// Bisection for the p where percolation probability crosses the target.
// A probe's side is committed only when its Wilson interval excludes the
// target; until then its trial count is doubled, and when the cap is reached
// the bisection stops and returns the bracket it has (converged = false if
// that bracket is still wider than tol). All probes share one coupled trial
// stream, so the empirical curve they see is monotone in p.
struct CriticalEstimate {
  double pc_hat = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 1.0;
  bool converged = false;
  bool degenerate = false;  // percolates from the empty set; pc = 0
  std::string stop_reason;  // "tol" | "probe_undecided" | "probe_budget"
  double target = 0.5;
  std::vector<ProbeRecord> probes;
};

CriticalEstimate estimate_pc(const Graph& g, const ThresholdSchedule& sched,
                             const CriticalOptions& opt);

// Critical window: the two quantile crossings at alpha and 1 - alpha.
struct WindowEstimate {
  CriticalEstimate low;   // crossing of alpha
  CriticalEstimate high;  // crossing of 1 - alpha
  double alpha = 0.0;
  double width = 0.0;     // high.pc_hat - low.pc_hat
};

WindowEstimate estimate_window(const Graph& g, const ThresholdSchedule& sched, double alpha,
                               const CriticalOptions& opt);

}  // namespace bootperc
