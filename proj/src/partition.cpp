#include "bootperc/partition.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "bootperc/engine.hpp"
#include "bootperc/sampler.hpp"

namespace bootperc {

namespace {

// First-fit by ascending member order. `conflicts(y)` must return the set of
// already-placed vertices y may not share a class with; `bound` is the
// guaranteed class cap, exceeded only if the caller's counting premise is
// wrong.
template <class Conflicts>
DistancePartition greedy_first_fit(const std::vector<Vertex>& members, std::uint64_t bound,
                                   const char* overflow_msg, Conflicts&& conflicts) {
  DistancePartition part;
  part.class_bound = bound;
  std::vector<std::int64_t> class_of;  // indexed by position in `members`
  class_of.assign(members.size(), -1);
  std::vector<char> blocked;
  for (std::size_t yi = 0; yi < members.size(); ++yi) {
    blocked.assign(part.classes.size(), 0);
    conflicts(yi, [&](std::size_t placed) {
      blocked[std::size_t(class_of[placed])] = 1;
    });
    std::size_t cls = 0;
    while (cls < blocked.size() && blocked[cls]) ++cls;
    if (cls >= bound) throw invariant_error(overflow_msg);
    if (cls == part.classes.size()) part.classes.emplace_back();
    part.classes[cls].push_back(members[yi]);
    class_of[yi] = std::int64_t(cls);
  }
  return part;
}

}  // namespace

DistancePartition greedy_distance_partition(const Graph& g, const std::vector<Vertex>& xs,
                                            std::uint32_t k, std::uint64_t m) {
  std::vector<Vertex> members = xs;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (Vertex x : members)
    if (x >= g.vertex_count())
      throw std::invalid_argument("distance partition: vertex id out of range");

  // Position lookup for members only; balls are intersected against it.
  std::vector<std::int64_t> pos(g.vertex_count(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) pos[members[i]] = std::int64_t(i);

  std::vector<std::vector<std::size_t>> near(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    auto dist = bfs_distances(g, members[i], k);
    std::uint64_t ball_size = 0;
    for (std::uint64_t v = 0; v < g.vertex_count(); ++v) {
      if (dist[v] > k) continue;
      ++ball_size;
      if (pos[v] >= 0 && std::size_t(pos[v]) < i) near[i].push_back(std::size_t(pos[v]));
    }
    if (ball_size > m)
      throw std::invalid_argument("distance partition: a ball exceeds the stated cap m");
  }

  auto part = greedy_first_fit(members, m, "distance partition: class bound m exceeded",
                               [&](std::size_t yi, auto&& mark) {
                                 for (std::size_t p : near[yi]) mark(p);
                               });
  part.min_distance = k + 1;
  return part;
}

DistancePartition hypercube_sphere_partition(std::uint32_t n, Vertex center, std::uint32_t k) {
  if (n < 1 || n > 30) throw std::invalid_argument("sphere partition: need 1 <= n <= 30");
  if (k < 1 || k > n) throw std::invalid_argument("sphere partition: need 1 <= k <= n");
  if (std::uint64_t(center) >= (std::uint64_t(1) << n))
    throw std::invalid_argument("sphere partition: centre out of range");

  // Members are the k-flip patterns; enumerate ascending by actual vertex id
  // (centre XOR pattern).
  std::vector<Vertex> members;
  for (std::uint64_t v = 0; v < (std::uint64_t(1) << n); ++v)
    if (std::popcount(std::uint64_t(v) ^ std::uint64_t(center)) == int(k))
      members.push_back(Vertex(v));

  // Counting premise: the patterns meeting a fixed k-set number at most
  // k * C(n, k-1): choose a shared coordinate (k ways) and the remaining
  // k-1 coordinates of the other pattern (over-counts, which only helps).
  std::uint64_t bound = k;
  for (std::uint32_t i = 1; i <= k - 1; ++i) bound = bound * (n - i + 1) / i;

  auto part = greedy_first_fit(
      members, bound, "sphere partition: class bound k*C(n,k-1) exceeded",
      [&](std::size_t yi, auto&& mark) {
        std::uint64_t ymask = std::uint64_t(members[yi]) ^ std::uint64_t(center);
        for (std::size_t pi = 0; pi < yi; ++pi)
          if ((std::uint64_t(members[pi]) ^ std::uint64_t(center)) & ymask) mark(pi);
      });
  part.min_distance = 2 * k;
  return part;
}

DistancePartition general_sphere_partition(const Graph& g, Vertex center, std::uint32_t k,
                                           const SphereNeighborProfile& profile) {
  if (k < 1) throw std::invalid_argument("sphere partition: need k >= 1");
  if (profile.f.size() < std::size_t(k) + 1)
    throw std::invalid_argument("sphere partition: profile must cover indices 0..k");
  if (std::uint64_t(center) >= g.vertex_count())
    throw std::invalid_argument("sphere partition: centre out of range");

  std::vector<Vertex> members = sphere(g, center, k);  // ascending already
  std::uint64_t bound =
      std::uint64_t(g.degree()) * (profile.f[k - 1] + profile.f[k]) + 1;

  std::vector<std::int64_t> pos(g.vertex_count(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) pos[members[i]] = std::int64_t(i);

  auto part = greedy_first_fit(
      members, bound,
      "sphere partition: class bound d*(f_{k-1}+f_k)+1 exceeded; profile does not hold "
      "for this graph",
      [&](std::size_t yi, auto&& mark) {
        auto dist = bfs_distances(g, members[yi], 2);
        for (std::uint64_t v = 0; v < g.vertex_count(); ++v)
          if (dist[v] <= 2 && pos[v] >= 0 && std::size_t(pos[v]) < yi)
            mark(std::size_t(pos[v]));
      });
  part.min_distance = 3;
  return part;
}

IndependenceAudit independence_audit(const Graph& g, const std::vector<Vertex>& members,
                                     std::uint32_t j, const ThresholdSchedule& sched, double p,
                                     std::uint64_t trials, std::uint64_t seed) {
  if (members.size() < 2)
    throw std::invalid_argument("independence audit: need at least two members");
  if (trials < 2) throw std::invalid_argument("independence audit: need at least two trials");
  for (Vertex y : members)
    if (std::uint64_t(y) >= g.vertex_count())
      throw std::invalid_argument("independence audit: vertex id out of range");

  IndependenceAudit audit;
  audit.trials = trials;
  audit.correlation_threshold = 4.0 / std::sqrt(double(trials));

  // Structural: pairwise-disjoint balls B(y, j) mean the indicators read
  // disjoint parts of the seed set.
  audit.structural_ok = true;
  {
    std::vector<std::int8_t> owner(g.vertex_count(), -1);
    for (std::size_t i = 0; i < members.size() && audit.structural_ok; ++i) {
      auto dist = bfs_distances(g, members[i], j);
      for (std::uint64_t v = 0; v < g.vertex_count(); ++v) {
        if (dist[v] > j) continue;
        if (owner[v] >= 0) {
          audit.structural_ok = false;
          break;
        }
        owner[v] = 1;
      }
    }
  }

  std::size_t c = members.size();
  std::vector<std::uint64_t> hit(c, 0);
  std::vector<std::uint64_t> hit2(c * c, 0);
  std::vector<char> x(c, 0);
  for (std::uint64_t t = 0; t < trials; ++t) {
    VertexSet a = sample_initial(g, p, seed, t);
    for (std::uint32_t round = 0; round < j; ++round) a = step(g, a, round, sched);
    for (std::size_t i = 0; i < c; ++i) x[i] = a.test(members[i]);
    for (std::size_t i = 0; i < c; ++i) {
      if (!x[i]) continue;
      ++hit[i];
      for (std::size_t l = i + 1; l < c; ++l)
        if (x[l]) ++hit2[i * c + l];
    }
  }

  audit.marginals.resize(c);
  for (std::size_t i = 0; i < c; ++i) audit.marginals[i] = double(hit[i]) / double(trials);
  for (std::size_t i = 0; i < c; ++i) {
    double vi = audit.marginals[i] * (1.0 - audit.marginals[i]);
    for (std::size_t l = i + 1; l < c; ++l) {
      double vl = audit.marginals[l] * (1.0 - audit.marginals[l]);
      if (vi == 0.0 || vl == 0.0) continue;  // constant indicator: independent
      double cov = double(hit2[i * c + l]) / double(trials) -
                   audit.marginals[i] * audit.marginals[l];
      audit.max_abs_correlation =
          std::max(audit.max_abs_correlation, std::abs(cov / std::sqrt(vi * vl)));
    }
  }
  audit.statistical_ok = audit.max_abs_correlation < audit.correlation_threshold;
  return audit;
}

}  // namespace bootperc
