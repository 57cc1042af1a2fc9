#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bootperc/graph.hpp"

namespace bootperc {

// Invariant suites runnable from the CLI and reused by the acceptance tests.
// Each returns pass/fail plus a short account of what was checked. The
// checkers here are written against the definitions, not against the
// production code paths they audit.
struct SuiteResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Three fixed 12-vertex cubic graphs: hexagonal prism, Moebius ladder, and a
// chorded 12-cycle. Small enough for exhaustive subset enumeration, shaped
// differently enough to exercise distinct fixpoint behaviour.
Graph fixture_cubic12(char which);  // 'a' | 'b' | 'c'

// Packed engine vs the plain reference on every subset of every small
// fixture, across a constant, a majority and a relaxed schedule.
SuiteResult engine_oracle_suite();

// Round-by-round containment between increasingly generous schedules on
// Q_14 seeded trials.
SuiteResult dominance_suite(std::uint64_t seed, std::uint64_t trials);

// Monotone coupling: per-trial outcomes are step functions of p and grid
// success counts never decrease.
SuiteResult coupling_suite(std::uint64_t seed);

// Sphere partitions re-verified from scratch: cover, pairwise separation,
// class bounds.
SuiteResult partition_suite();

// Closed-form bounds sandwiched against the exact binomial tail on their
// regime grids; weighted-layer bound against direct simulation; binomial
// median location.
SuiteResult sandwich_suite(std::uint64_t mc_samples, std::uint64_t seed);

// Profile values on graphs whose sphere geometry is known in closed form.
SuiteResult profile_suite();

std::vector<SuiteResult> run_all_suites(std::uint64_t seed);

}  // namespace bootperc
