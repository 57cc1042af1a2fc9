#pragma once

#include <cstdint>
#include <vector>

#include "bootperc/bitset.hpp"
#include "bootperc/graph.hpp"
#include "bootperc/schedule.hpp"

namespace bootperc {

// Thrown when a structural guarantee the code promises is observed broken
// (distinct from argument validation, which throws std::invalid_argument).
struct invariant_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class StopReason { fixpoint, round_cap };

// Synchronous run record. Row m describes A^(m): infected_count[m] vertices
// after m rounds, newly_infected[m] of them new in that round (row 0 carries
// the seed set size). A row is recorded for every executed round; relaxed
// schedules execute all k relaxed rounds even when nothing changes, so their
// traces always have at least k+1 rows unless the graph fills up first.
struct Trace {
  std::vector<std::uint64_t> infected_count;
  std::vector<std::uint64_t> newly_infected;
  bool percolated = false;
  std::uint32_t rounds_to_fixpoint = 0;  // last round that added a vertex
  StopReason stopped = StopReason::fixpoint;
  VertexSet final_set;
  std::vector<VertexSet> round_sets;  // filled only when retain_rounds
};

struct RunOptions {
  std::uint64_t max_rounds = 0;  // 0 = automatic (N + relaxed rounds + 1)
  bool retain_rounds = false;
};

// A^(m+1) = A^(m) plus every vertex with >= threshold_at(m) infected
// neighbours, evaluated against A^(m) only (two-buffer semantics).
VertexSet step(const Graph& g, const VertexSet& current, std::uint32_t round,
               const ThresholdSchedule& sched);

Trace run_to_fixpoint(const Graph& g, const VertexSet& initial, const ThresholdSchedule& sched,
                      const RunOptions& opt = {});

// Reusable buffers for tight loops (exact enumeration, trial batches).
class EngineScratch {
 public:
  // Returns true iff the run from `initial` infects everything.
  bool percolates(const Graph& g, const VertexSet& initial, const ThresholdSchedule& sched);

 private:
  std::vector<std::uint16_t> counts_;
  std::vector<Vertex> healthy_;
  std::vector<Vertex> frontier_;
};

// Round-by-round containment of the stricter schedule's run inside the more
// generous one, from a shared seed set. Requires threshold_generous(m) <=
// threshold_strict(m) for every m; under that hypothesis the result is always
// true, so `false` means the engine itself is broken.
struct DominanceReport {
  bool holds = true;
  std::uint32_t first_violation_round = 0;
};

DominanceReport dominance_check(const Graph& g, const VertexSet& initial,
                                const ThresholdSchedule& strict,
                                const ThresholdSchedule& generous);

}  // namespace bootperc
