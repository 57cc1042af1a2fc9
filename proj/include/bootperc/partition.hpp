#pragma once

#include <cstdint>
#include <vector>

#include "bootperc/graph.hpp"
#include "bootperc/schedule.hpp"

namespace bootperc {

// Partitions of vertex sets into classes whose members are pairwise far
// apart, built by first-fit greedy over ascending vertex ids. The greedy
// order is part of the contract: it makes every partition reproducible and
// lets the class-count guarantees below follow from ball-size counting.
struct DistancePartition {
  std::vector<std::vector<Vertex>> classes;
  std::uint32_t min_distance = 0;   // promised pairwise distance within a class
  std::uint64_t class_bound = 0;    // guaranteed upper bound on classes.size()
};

// Splits `xs` into classes with pairwise graph distance >= k+1, assuming
// every ball B(x,k) with x in xs holds at most m vertices (validated, since
// the <= m class guarantee rests on it).
DistancePartition greedy_distance_partition(const Graph& g, const std::vector<Vertex>& xs,
                                            std::uint32_t k, std::uint64_t m);

// Partition of the radius-k sphere around `center` in Q_n into classes of
// pairwise disjoint k-flips: two members u, v of a class never flip a common
// coordinate relative to the centre, i.e. their Hamming distance is exactly
// 2k. Uses at most k * C(n, k-1) classes.
DistancePartition hypercube_sphere_partition(std::uint32_t n, Vertex center, std::uint32_t k);

// Partition of S(center, k) in an arbitrary regular graph into classes with
// pairwise distance >= 3. The profile caps how many sphere members can sit
// within distance 2 of each other; the class count is then at most
// d*(f_{k-1} + f_k) + 1. If the graph contradicts the supplied profile the
// construction detects the overflow and throws.
DistancePartition general_sphere_partition(const Graph& g, Vertex center, std::uint32_t k,
                                           const SphereNeighborProfile& profile);

// Checks whether the round-j infection indicators of a class behave like
// independent events. Structural part: the balls B(y, j) must be pairwise
// disjoint (the round-j state of y is a function of the seed set inside
// B(y, j), so disjoint balls force exact independence). Statistical part:
// seeded trials of j synchronous rounds, maximum absolute pairwise sample
// correlation compared against 4 / sqrt(trials).
struct IndependenceAudit {
  bool structural_ok = false;
  double max_abs_correlation = 0.0;
  double correlation_threshold = 0.0;
  std::uint64_t trials = 0;
  std::vector<double> marginals;  // per-member frequency of the round-j event
  bool statistical_ok = false;    // max correlation below threshold
};

IndependenceAudit independence_audit(const Graph& g, const std::vector<Vertex>& members,
                                     std::uint32_t j, const ThresholdSchedule& sched, double p,
                                     std::uint64_t trials, std::uint64_t seed);

}  // namespace bootperc
