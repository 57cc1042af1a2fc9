#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdint>
#include <vector>

#include "bootperc/sampler.hpp"
#include "doctest.h"

using namespace bootperc;

TEST_CASE("wilson interval matches frozen reference values") {
  Estimate e = wilson_estimate(81, 100);
  CHECK(e.p_hat == doctest::Approx(0.81).epsilon(1e-12));
  CHECK(e.ci_lo == doctest::Approx(0.7222115462093562).epsilon(1e-12));
  CHECK(e.ci_hi == doctest::Approx(0.8748524849023126).epsilon(1e-12));
  Estimate zero = wilson_estimate(0, 50);
  CHECK(zero.ci_lo == 0.0);
  CHECK(zero.ci_hi == doctest::Approx(0.07134759913335872).epsilon(1e-12));
  Estimate full = wilson_estimate(50, 50);
  CHECK(full.ci_lo == doctest::Approx(0.9286524008666414).epsilon(1e-12));
  CHECK(full.ci_hi == 1.0);
  Estimate tiny = wilson_estimate(1, 2);
  CHECK(tiny.ci_lo == doctest::Approx(0.09453120573423074).epsilon(1e-12));
  CHECK(tiny.ci_hi == doctest::Approx(0.9054687942657693).epsilon(1e-12));
}

TEST_CASE("wilson interval basic properties") {
  for (std::uint64_t n : {10ull, 100ull, 1000ull})
    for (std::uint64_t s = 0; s <= n; s += n / 10) {
      Estimate e = wilson_estimate(s, n);
      CHECK(e.ci_lo >= 0.0);
      CHECK(e.ci_hi <= 1.0);
      CHECK(e.ci_lo < e.ci_hi);
      CHECK(e.ci_lo <= e.p_hat);
      CHECK(e.p_hat <= e.ci_hi);
    }
  // interval shrinks with more trials at the same proportion
  CHECK(wilson_estimate(500, 1000).ci_hi - wilson_estimate(500, 1000).ci_lo <
        wilson_estimate(50, 100).ci_hi - wilson_estimate(50, 100).ci_lo);
  CHECK_THROWS_AS(wilson_estimate(5, 0), std::invalid_argument);
  CHECK_THROWS_AS(wilson_estimate(11, 10), std::invalid_argument);
}

TEST_CASE("initial sets are deterministic, coupled in p, edge-exact at 0 and 1") {
  Graph g = Graph::hypercube(7);
  CHECK(sample_initial(g, 0.0, 5, 0).count() == 0);
  CHECK(sample_initial(g, 1.0, 5, 0).count() == 128);
  VertexSet a = sample_initial(g, 0.3, 5, 17);
  CHECK(a == sample_initial(g, 0.3, 5, 17));
  // coupling: the p = 0.3 set is contained in the p = 0.5 set, trial by trial
  for (std::uint64_t t = 0; t < 50; ++t)
    CHECK(sample_initial(g, 0.3, 5, t).is_subset_of(sample_initial(g, 0.5, 5, t)));
  // marginal frequency over many trials approaches p
  std::uint64_t hits = 0;
  const std::uint64_t trials = 2000;
  for (std::uint64_t t = 0; t < trials; ++t) hits += sample_initial(g, 0.25, 5, t).count();
  double freq = double(hits) / double(trials * 128);
  CHECK(freq == doctest::Approx(0.25).epsilon(0.03));
  CHECK_THROWS_AS(sample_initial(g, -0.1, 5, 0), std::invalid_argument);
  CHECK_THROWS_AS(sample_initial(g, 1.1, 5, 0), std::invalid_argument);
}

TEST_CASE("exact enumeration reproduces hand counts on the 4-cycle") {
  Graph g = Graph::hypercube(2);
  // threshold 1: every nonempty seed fills the cycle -> 15/16 at p = 1/2
  ExactResult r1 = exact_percolation_prob(g, ThresholdSchedule::constant(1), 0.5);
  CHECK(r1.subsets == 16);
  CHECK(r1.percolating == 15);
  CHECK(r1.prob == doctest::Approx(0.9375).epsilon(1e-15));
  // threshold 2: the two antipodal pairs, the four triples, the full set
  ExactResult r2 = exact_percolation_prob(g, ThresholdSchedule::constant(2), 0.5);
  CHECK(r2.percolating == 7);
  CHECK(r2.prob == doctest::Approx(0.4375).epsilon(1e-15));
  // closed form on the cycle: P(p) = 2p^2 - p^4 for threshold 2
  for (double p : {0.1, 0.25, 0.366, 0.5411961001461969, 0.7}) {
    ExactResult r = exact_percolation_prob(g, ThresholdSchedule::constant(2), p);
    CHECK(r.prob == doctest::Approx(2 * p * p - p * p * p * p).epsilon(1e-12));
  }
}

TEST_CASE("exact enumeration is integer-exact at p = 1/2") {
  Graph g = Graph::random_regular(12, 3, 77);
  ExactResult r = exact_percolation_prob(g, ThresholdSchedule::constant(2), 0.5);
  double scaled = r.prob * 4096.0;
  CHECK(scaled == double(r.percolating));
  CHECK(r.subsets == 4096);
  CHECK_THROWS_AS(exact_percolation_prob(Graph::hypercube(5), ThresholdSchedule::constant(1), 0.5),
                  std::invalid_argument);  // 32 vertices is past the enumeration cap
}

TEST_CASE("monte carlo estimate approaches the exact value") {
  Graph g = Graph::hypercube(4);
  ThresholdSchedule sched = ThresholdSchedule::constant(2);
  ExactResult exact = exact_percolation_prob(g, sched, 0.35);
  TrialPlan plan;
  plan.trials = 20000;
  plan.master_seed = 31;
  Estimate e = estimate_percolation_prob(g, sched, 0.35, plan);
  CHECK(e.trials == 20000);
  CHECK(exact.prob > e.ci_lo);
  CHECK(exact.prob < e.ci_hi);
}

TEST_CASE("worker count does not change the estimate") {
  Graph g = Graph::hypercube(6);
  ThresholdSchedule sched = ThresholdSchedule::constant(3);
  TrialPlan one;
  one.trials = 3000;
  one.master_seed = 99;
  one.workers = 1;
  TrialPlan three = one;
  three.workers = 3;
  TrialPlan five = one;
  five.workers = 5;
  Estimate a = estimate_percolation_prob(g, sched, 0.4, one);
  Estimate b = estimate_percolation_prob(g, sched, 0.4, three);
  Estimate c = estimate_percolation_prob(g, sched, 0.4, five);
  CHECK(a.successes == b.successes);
  CHECK(a.successes == c.successes);
  CHECK(a.p_hat == b.p_hat);
}

TEST_CASE("bisection hits the known threshold-1 critical point on the 4-cycle") {
  // P(p) = 1 - (1-p)^4 crosses 1/2 at 1 - 2^(-1/4) = 0.15910...
  Graph g = Graph::hypercube(2);
  CriticalOptions opt;
  opt.base_trials = 4000;
  opt.tol = 0.02;
  opt.master_seed = 7;
  CriticalEstimate ce = estimate_pc(g, ThresholdSchedule::constant(1), opt);
  CHECK(ce.converged);
  CHECK(ce.stop_reason == "tol");
  CHECK_FALSE(ce.degenerate);
  CHECK(std::abs(ce.pc_hat - 0.1591035847462855) < 0.03);
  CHECK(ce.bracket_hi - ce.bracket_lo <= opt.tol);
  CHECK(ce.bracket_lo <= ce.pc_hat);
  CHECK(ce.pc_hat <= ce.bracket_hi);
  // probe log is plausible: probes inside [0,1], sides in {-1,0,1}
  CHECK(ce.probes.size() >= 3);
  for (const ProbeRecord& pr : ce.probes) {
    CHECK(pr.p > 0.0);
    CHECK(pr.p < 1.0);
    CHECK(pr.side >= -1);
    CHECK(pr.side <= 1);
  }
}

TEST_CASE("threshold zero degenerates to pc = 0") {
  Graph g = Graph::hypercube(5);
  CriticalOptions opt;
  opt.master_seed = 3;
  CriticalEstimate ce = estimate_pc(g, ThresholdSchedule::constant(0), opt);
  CHECK(ce.degenerate);
  CHECK(ce.pc_hat == 0.0);
  CHECK(ce.converged);
  CHECK(ce.stop_reason == "degenerate");
  CHECK(ce.probes.empty());
}

TEST_CASE("window quantiles on the 4-cycle match the closed form") {
  // 2p^2 - p^4 = 1/4 at p = 0.36602..., = 3/4 at p = 0.70710...
  Graph g = Graph::hypercube(2);
  CriticalOptions opt;
  opt.base_trials = 4000;
  opt.tol = 0.02;
  opt.master_seed = 11;
  WindowEstimate w = estimate_window(g, ThresholdSchedule::constant(2), 0.25, opt);
  CHECK(w.low.converged);
  CHECK(w.high.converged);
  CHECK(std::abs(w.low.pc_hat - 0.3660254037844387) < 0.03);
  CHECK(std::abs(w.high.pc_hat - 0.7071067811865476) < 0.03);
  CHECK(w.width == doctest::Approx(w.high.pc_hat - w.low.pc_hat).epsilon(1e-12));
  CHECK(w.alpha == 0.25);
  CHECK_THROWS_AS(estimate_window(g, ThresholdSchedule::constant(2), 0.0, opt),
                  std::invalid_argument);
  CHECK_THROWS_AS(estimate_window(g, ThresholdSchedule::constant(2), 0.6, opt),
                  std::invalid_argument);
}

TEST_CASE("window width shrinks as the cube grows") {
  // sharp-threshold behaviour: the alpha = 0.25 window narrows with dimension
  CriticalOptions opt;
  opt.base_trials = 1500;
  opt.tol = 0.015;
  opt.master_seed = 13;
  double widths[2];
  int idx = 0;
  for (std::uint32_t n : {6u, 10u}) {
    Graph g = Graph::hypercube(n);
    ThresholdSchedule sched = ThresholdSchedule::constant(majority_threshold(n));
    WindowEstimate w = estimate_window(g, sched, 0.25, opt);
    widths[idx++] = w.width;
  }
  CHECK(widths[1] < widths[0]);
}

TEST_CASE("budget exhaustion is reported, not hidden") {
  // absurdly tight tolerance with a tiny probe budget cannot converge
  Graph g = Graph::hypercube(2);
  CriticalOptions opt;
  opt.base_trials = 50;
  opt.tol = 1e-9;
  opt.doublings = 0;
  opt.max_probes = 4;
  opt.master_seed = 23;
  CriticalEstimate ce = estimate_pc(g, ThresholdSchedule::constant(1), opt);
  CHECK_FALSE(ce.converged);
  CHECK((ce.stop_reason == "probe_undecided" || ce.stop_reason == "probe_budget"));
  CHECK(ce.bracket_hi - ce.bracket_lo > opt.tol);
}
