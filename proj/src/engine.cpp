#include "bootperc/engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace bootperc {

VertexSet step(const Graph& g, const VertexSet& current, std::uint32_t round,
               const ThresholdSchedule& sched) {
  if (current.size() != g.vertex_count())
    throw std::invalid_argument("step: set size does not match graph");
  std::uint32_t thr = sched.threshold_at(round);
  VertexSet next = current;
  for (std::uint64_t v = 0; v < g.vertex_count(); ++v) {
    if (current.test(Vertex(v))) continue;
    if (g.count_in_set(Vertex(v), current) >= thr) next.set(Vertex(v));
  }
  return next;
}

namespace {

// Shared core: incremental neighbour counts, a shrinking healthy list, and a
// frontier of vertices infected in the latest round. Only the frontier's
// neighbourhoods are touched when counts are updated, so total count work is
// bounded by E regardless of round count.
struct RunState {
  VertexSet cur;
  std::vector<std::uint16_t> counts;
  std::vector<Vertex> healthy;
  std::vector<Vertex> frontier;
  std::uint64_t infected = 0;

  void init(const Graph& g, const VertexSet& initial) {
    std::uint64_t n = g.vertex_count();
    cur = initial;
    counts.assign(n, 0);
    healthy.clear();
    healthy.reserve(n);
    for (std::uint64_t v = 0; v < n; ++v)
      if (!initial.test(Vertex(v))) healthy.push_back(Vertex(v));
    initial.for_each([&](Vertex v) {
      g.visit_neighbors(v, [&](Vertex u) { ++counts[u]; });
    });
    infected = n - healthy.size();
  }

  // Collects this round's qualifiers into frontier and removes them from the
  // healthy list; does not yet update counts, so the scan sees only A^(m).
  void collect(std::uint32_t thr) {
    frontier.clear();
    std::size_t i = 0;
    while (i < healthy.size()) {
      Vertex v = healthy[i];
      if (counts[v] >= thr) {
        frontier.push_back(v);
        healthy[i] = healthy.back();
        healthy.pop_back();
      } else {
        ++i;
      }
    }
  }

  void apply(const Graph& g) {
    for (Vertex v : frontier) {
      cur.set(v);
      g.visit_neighbors(v, [&](Vertex u) { ++counts[u]; });
    }
    infected += frontier.size();
  }
};

}  // namespace

Trace run_to_fixpoint(const Graph& g, const VertexSet& initial, const ThresholdSchedule& sched,
                      const RunOptions& opt) {
  std::uint64_t n = g.vertex_count();
  if (initial.size() != n) throw std::invalid_argument("run: set size does not match graph");

  RunState st;
  st.init(g, initial);

  Trace tr;
  tr.infected_count.push_back(st.infected);
  tr.newly_infected.push_back(st.infected);
  if (opt.retain_rounds) tr.round_sets.push_back(st.cur);

  std::uint32_t relaxed = sched.relaxed_rounds();
  std::uint64_t max_rounds = opt.max_rounds ? opt.max_rounds : n + relaxed + 1;

  std::uint32_t m = 0;
  while (st.infected < n) {
    if (m >= max_rounds) {
      tr.stopped = StopReason::round_cap;
      break;
    }
    st.collect(sched.threshold_at(m));
    if (st.frontier.empty() && m >= relaxed) break;  // no relaxation left: fixpoint
    st.apply(g);
    ++m;
    tr.infected_count.push_back(st.infected);
    tr.newly_infected.push_back(st.frontier.size());
    if (opt.retain_rounds) tr.round_sets.push_back(st.cur);
    if (!st.frontier.empty()) tr.rounds_to_fixpoint = m;
  }

  tr.percolated = (st.infected == n);
  tr.final_set = std::move(st.cur);
  return tr;
}

bool EngineScratch::percolates(const Graph& g, const VertexSet& initial,
                               const ThresholdSchedule& sched) {
  std::uint64_t n = g.vertex_count();
  counts_.assign(n, 0);
  healthy_.clear();
  frontier_.clear();
  for (std::uint64_t v = 0; v < n; ++v)
    if (!initial.test(Vertex(v))) healthy_.push_back(Vertex(v));
  initial.for_each([&](Vertex v) {
    g.visit_neighbors(v, [&](Vertex u) { ++counts_[u]; });
  });

  std::uint32_t relaxed = sched.relaxed_rounds();
  for (std::uint32_t m = 0; !healthy_.empty(); ++m) {
    frontier_.clear();
    std::uint32_t thr = sched.threshold_at(m);
    std::size_t i = 0;
    while (i < healthy_.size()) {
      Vertex v = healthy_[i];
      if (counts_[v] >= thr) {
        frontier_.push_back(v);
        healthy_[i] = healthy_.back();
        healthy_.pop_back();
      } else {
        ++i;
      }
    }
    if (frontier_.empty() && m >= relaxed) return false;
    for (Vertex v : frontier_)
      g.visit_neighbors(v, [&](Vertex u) { ++counts_[u]; });
  }
  return true;
}

DominanceReport dominance_check(const Graph& g, const VertexSet& initial,
                                const ThresholdSchedule& strict,
                                const ThresholdSchedule& generous) {
  std::uint32_t horizon = std::max(strict.relaxed_rounds(), generous.relaxed_rounds()) + 1;
  for (std::uint32_t m = 0; m < horizon; ++m)
    if (generous.threshold_at(m) > strict.threshold_at(m))
      throw std::invalid_argument(
          "dominance_check: schedule is not pointwise at most the strict one");

  RunOptions opt;
  opt.retain_rounds = true;
  Trace a = run_to_fixpoint(g, initial, strict, opt);
  Trace b = run_to_fixpoint(g, initial, generous, opt);

  std::size_t rounds = std::max(a.round_sets.size(), b.round_sets.size());
  DominanceReport rep;
  for (std::size_t m = 0; m < rounds; ++m) {
    const VertexSet& sa = a.round_sets[std::min(m, a.round_sets.size() - 1)];
    const VertexSet& sb = b.round_sets[std::min(m, b.round_sets.size() - 1)];
    if (!sa.is_subset_of(sb)) {
      rep.holds = false;
      rep.first_violation_round = std::uint32_t(m);
      return rep;
    }
  }
  return rep;
}

}  // namespace bootperc
