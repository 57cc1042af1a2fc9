#include "bootperc/reference_engine.hpp"

#include <algorithm>

namespace bootperc {

Trace reference_run(const Graph& g, const std::vector<Vertex>& initial,
                    const ThresholdSchedule& sched, std::uint64_t max_rounds) {
  std::uint64_t n = g.vertex_count();
  std::vector<Vertex> a = initial;
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());

  auto in = [&](const std::vector<Vertex>& s, Vertex v) {
    return std::binary_search(s.begin(), s.end(), v);
  };

  std::uint32_t relaxed = sched.relaxed_rounds();
  if (max_rounds == 0) max_rounds = n + relaxed + 1;

  Trace tr;
  tr.infected_count.push_back(a.size());
  tr.newly_infected.push_back(a.size());

  for (std::uint32_t m = 0; a.size() < n; ++m) {
    if (m >= max_rounds) {
      tr.stopped = StopReason::round_cap;
      break;
    }
    std::uint32_t thr = sched.threshold_at(m);
    std::vector<Vertex> fresh;
    for (std::uint64_t vv = 0; vv < n; ++vv) {
      Vertex v = Vertex(vv);
      if (in(a, v)) continue;
      std::uint32_t c = 0;
      for (std::uint32_t i = 0; i < g.degree(); ++i) c += in(a, g.neighbor(v, i));
      if (c >= thr) fresh.push_back(v);
    }
    if (fresh.empty() && m >= relaxed) break;
    std::vector<Vertex> merged;
    merged.reserve(a.size() + fresh.size());
    std::merge(a.begin(), a.end(), fresh.begin(), fresh.end(), std::back_inserter(merged));
    a.swap(merged);
    tr.infected_count.push_back(a.size());
    tr.newly_infected.push_back(fresh.size());
    if (!fresh.empty()) tr.rounds_to_fixpoint = m + 1;
  }

  tr.percolated = (a.size() == n);
  tr.final_set = VertexSet(n);
  for (Vertex v : a) tr.final_set.set(v);
  return tr;
}

bool traces_agree(const Trace& a, const Trace& b) {
  return a.infected_count == b.infected_count && a.newly_infected == b.newly_infected &&
         a.percolated == b.percolated && a.rounds_to_fixpoint == b.rounds_to_fixpoint &&
         a.stopped == b.stopped && a.final_set == b.final_set;
}

}  // namespace bootperc
