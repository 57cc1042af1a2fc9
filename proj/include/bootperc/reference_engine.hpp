#pragma once

#include <vector>

#include "bootperc/engine.hpp"

namespace bootperc {

// Deliberately plain re-implementation of the synchronous process, kept free
// of the production engine's incremental bookkeeping: sets are sorted vertex
// vectors and every round recounts all neighbourhoods from scratch. Used to
// cross-examine the packed engine; do not optimize.
Trace reference_run(const Graph& g, const std::vector<Vertex>& initial,
                    const ThresholdSchedule& sched, std::uint64_t max_rounds = 0);

// Trace equality as the verification suites define it: same row counts, same
// per-round totals and increments, same outcome, fixpoint round and final set.
bool traces_agree(const Trace& a, const Trace& b);

}  // namespace bootperc
