#include "bootperc/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdarg>
#include <cstdio>

#include "bootperc/bounds.hpp"
#include "bootperc/engine.hpp"
#include "bootperc/partition.hpp"
#include "bootperc/reference_engine.hpp"
#include "bootperc/sampler.hpp"

namespace bootperc {

namespace {

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

Graph cubic12_from_edges(const std::vector<std::pair<Vertex, Vertex>>& edges,
                         const std::string& name) {
  std::vector<std::vector<Vertex>> rows(12);
  for (auto [a, b] : edges) {
    rows[a].push_back(b);
    rows[b].push_back(a);
  }
  std::vector<Vertex> flat;
  for (auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
  return Graph::from_adjacency(12, 3, std::move(flat), name);
}

}  // namespace

Graph fixture_cubic12(char which) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  switch (which) {
    case 'a':  // hexagonal prism: two 6-cycles plus spokes
      for (Vertex i = 0; i < 6; ++i) {
        edges.push_back({i, Vertex((i + 1) % 6)});
        edges.push_back({Vertex(6 + i), Vertex(6 + (i + 1) % 6)});
        edges.push_back({i, Vertex(6 + i)});
      }
      return cubic12_from_edges(edges, "cubic12:a");
    case 'b':  // Moebius ladder: 12-cycle plus diagonals
      for (Vertex i = 0; i < 12; ++i) edges.push_back({i, Vertex((i + 1) % 12)});
      for (Vertex i = 0; i < 6; ++i) edges.push_back({i, Vertex(i + 6)});
      return cubic12_from_edges(edges, "cubic12:b");
    case 'c': {  // 12-cycle with a fixed non-parallel chord pattern
      for (Vertex i = 0; i < 12; ++i) edges.push_back({i, Vertex((i + 1) % 12)});
      const Vertex chords[6][2] = {{0, 7}, {1, 6}, {2, 9}, {3, 8}, {4, 11}, {5, 10}};
      for (auto& ch : chords) edges.push_back({ch[0], ch[1]});
      return cubic12_from_edges(edges, "cubic12:c");
    }
    default:
      throw std::invalid_argument("fixture_cubic12: which must be 'a', 'b' or 'c'");
  }
}

SuiteResult engine_oracle_suite() {
  SuiteResult res{"engine-oracle", true, ""};
  std::vector<Graph> graphs;
  graphs.push_back(Graph::hypercube(2));
  graphs.push_back(Graph::hypercube(3));
  graphs.push_back(fixture_cubic12('a'));
  graphs.push_back(fixture_cubic12('b'));
  graphs.push_back(fixture_cubic12('c'));

  std::uint64_t runs = 0;
  for (const Graph& g : graphs) {
    std::uint64_t n = g.vertex_count();
    std::vector<ThresholdSchedule> scheds = {
        ThresholdSchedule::constant(1),
        ThresholdSchedule::constant(majority_threshold(g.degree())),
        ThresholdSchedule::relaxed(majority_threshold(g.degree()), 2, 1),
    };
    for (const auto& sched : scheds) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        VertexSet init(n);
        std::vector<Vertex> init_list;
        for (std::uint64_t v = 0; v < n; ++v)
          if ((mask >> v) & 1) {
            init.set(Vertex(v));
            init_list.push_back(Vertex(v));
          }
        Trace fast = run_to_fixpoint(g, init, sched);
        Trace ref = reference_run(g, init_list, sched);
        ++runs;
        if (!traces_agree(fast, ref)) {
          res.pass = false;
          res.detail = fmt("divergence: graph=%s sched=%s mask=%llu", g.spec().c_str(),
                           sched.describe().c_str(), (unsigned long long)mask);
          return res;
        }
      }
    }
  }
  res.detail = fmt("%llu subset runs identical on both engines", (unsigned long long)runs);
  return res;
}

SuiteResult dominance_suite(std::uint64_t seed, std::uint64_t trials) {
  SuiteResult res{"dominance", true, ""};
  Graph g = Graph::hypercube(14);
  std::uint32_t r = majority_threshold(g.degree());
  // Strictly ordered chain, most demanding first.
  std::vector<ThresholdSchedule> chain = {
      ThresholdSchedule::constant(r),
      ThresholdSchedule::relaxed(r, 1, 1),
      ThresholdSchedule::relaxed(r, 3, 1),
      ThresholdSchedule::relaxed(r, 5, 1),
  };
  const double p = 0.35;
  for (std::uint64_t t = 0; t < trials; ++t) {
    VertexSet init = sample_initial(g, p, seed, t);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      DominanceReport rep = dominance_check(g, init, chain[i], chain[i + 1]);
      if (!rep.holds) {
        res.pass = false;
        res.detail = fmt("containment failed: trial=%llu link=%zu round=%u",
                         (unsigned long long)t, i, rep.first_violation_round);
        return res;
      }
    }
  }
  res.detail = fmt("%llu trials, %zu-link schedule chain contained round by round",
                   (unsigned long long)trials, chain.size() - 1);
  return res;
}

SuiteResult coupling_suite(std::uint64_t seed) {
  SuiteResult res{"coupling", true, ""};

  // Per-trial step functions of p on Q_6.
  {
    Graph g = Graph::hypercube(6);
    ThresholdSchedule sched = ThresholdSchedule::constant(majority_threshold(g.degree()));
    EngineScratch scratch;
    for (std::uint64_t t = 0; t < 200; ++t) {
      bool prev = false;
      for (int i = 0; i <= 20; ++i) {
        double p = i / 20.0;
        bool out = scratch.percolates(g, sample_initial(g, p, seed, t), sched);
        if (prev && !out) {
          res.pass = false;
          res.detail = fmt("outcome dropped: trial=%llu p=%.2f", (unsigned long long)t, p);
          return res;
        }
        prev = out;
      }
    }
  }

  // Aggregate success counts over a Q_10 grid.
  {
    Graph g = Graph::hypercube(10);
    ThresholdSchedule sched = ThresholdSchedule::constant(majority_threshold(g.degree()));
    TrialPlan plan{400, seed, 1};
    std::uint64_t prev = 0;
    for (int i = 0; i <= 20; ++i) {
      double p = 0.1 + 0.02 * i;
      Estimate e = estimate_percolation_prob(g, sched, p, plan);
      if (e.successes < prev) {
        res.pass = false;
        res.detail = fmt("grid count decreased at p=%.2f", p);
        return res;
      }
      prev = e.successes;
    }
  }
  res.detail = "per-trial outcomes are step functions; grid counts nondecreasing";
  return res;
}

namespace {

// Partition checkers, written against the definitions only.

bool check_cover(const DistancePartition& part, std::vector<Vertex> expected) {
  std::vector<Vertex> got;
  for (const auto& cls : part.classes) got.insert(got.end(), cls.begin(), cls.end());
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  return got == expected;
}

bool check_hypercube_classes(const DistancePartition& part, Vertex center) {
  for (const auto& cls : part.classes)
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (std::size_t l = i + 1; l < cls.size(); ++l) {
        std::uint64_t a = std::uint64_t(cls[i]) ^ center;
        std::uint64_t b = std::uint64_t(cls[l]) ^ center;
        if (a & b) return false;  // shared flipped coordinate
      }
  return true;
}

bool check_min_distance(const Graph& g, const DistancePartition& part) {
  for (const auto& cls : part.classes)
    for (std::size_t i = 0; i < cls.size(); ++i) {
      auto dist = bfs_distances(g, cls[i], part.min_distance - 1);
      for (std::size_t l = 0; l < cls.size(); ++l)
        if (l != i && dist[cls[l]] < part.min_distance) return false;
    }
  return true;
}

}  // namespace

SuiteResult partition_suite() {
  SuiteResult res{"partitions", true, ""};
  std::uint64_t checked = 0;

  for (std::uint32_t n = 2; n <= 10; ++n) {
    Graph g = Graph::hypercube(n);
    for (std::uint32_t k = 1; k <= std::min(n, 4u); ++k) {
      Vertex center = Vertex((std::uint64_t(0x5a5a5a5a) >> (32 - n)) & ((1u << n) - 1));
      DistancePartition part = hypercube_sphere_partition(n, center, k);
      if (!check_cover(part, sphere(g, center, k)) || !check_hypercube_classes(part, center) ||
          part.classes.size() > part.class_bound) {
        res.pass = false;
        res.detail = fmt("hypercube partition broken at n=%u k=%u", n, k);
        return res;
      }
      ++checked;
    }
  }

  {
    Graph g = Graph::torus(5, 3);
    for (std::uint32_t k = 1; k <= 2; ++k) {
      SphereNeighborProfile prof = sphere_neighbor_profile(g, k);
      DistancePartition part = general_sphere_partition(g, 0, k, prof);
      if (!check_cover(part, sphere(g, 0, k)) || !check_min_distance(g, part) ||
          part.classes.size() > part.class_bound) {
        res.pass = false;
        res.detail = fmt("general partition broken at k=%u", k);
        return res;
      }
      ++checked;
    }
  }

  res.detail = fmt("%llu partitions re-verified: cover, separation, class bounds",
                   (unsigned long long)checked);
  return res;
}

SuiteResult sandwich_suite(std::uint64_t mc_samples, std::uint64_t seed) {
  SuiteResult res{"bounds-sandwich", true, ""};
  std::uint64_t comparisons = 0;

  auto fail = [&](const std::string& msg) {
    res.pass = false;
    res.detail = msg;
    return res;
  };

  // Upper bound >= exact upper tail, all n and t.
  for (std::uint64_t n : {20ull, 50ull, 100ull, 500ull, 1000ull})
    for (double p : {0.1, 0.3, 0.5, 0.7})
      for (double frac : {0.0, 0.05, 0.1, 0.2, 0.4}) {
        double t = frac * double(n);
        double exact = exact_binomial_tail(n, p, std::uint64_t(std::ceil(p * double(n) + t)));
        if (exact > chernoff_upper(n, t) + 1e-12)
          return fail(fmt("chernoff violated: n=%llu p=%.2f t=%.1f", (unsigned long long)n, p, t));
        ++comparisons;
      }

  // Lower bound <= exact upper tail in regime (small fixed C, n >= 100).
  for (std::uint64_t n : {100ull, 400ull, 1000ull, 10000ull})
    for (double share : {0.0, 0.3, 0.6, 0.999})
      for (double C : {0.0, 1.0, 3.0}) {
        double dmax = std::pow(1.0 / (8.0 * double(n)), 0.25);
        double delta = share * dmax;
        LowerTailBound b = chernoff_lower(n, delta, C);
        if (!b.delta_regime_ok || !b.n_ok)
          return fail("chernoff_lower regime misflagged on its own grid");
        std::uint64_t m = std::uint64_t(std::ceil(double(n) / 2.0 + C));
        double exact = exact_binomial_tail(n, 0.5 - delta, m);
        if (b.value > exact + 1e-12)
          return fail(fmt("chernoff_lower violated: n=%llu delta=%.4f C=%.0f",
                          (unsigned long long)n, delta, C));
        ++comparisons;
      }

  // Sparse bound >= exact tail when p n^2 <= 1.
  for (std::uint64_t n : {5ull, 10ull, 30ull, 100ull})
    for (double scale : {0.1, 0.5, 1.0})
      for (std::uint64_t m : {0ull, 1ull, 2ull, 3ull}) {
        if (m > n) continue;
        double p = scale / (double(n) * double(n));
        SmallPTailBound b = small_p_tail(n, p, m);
        if (!b.regime_ok) return fail("small_p regime misflagged on its own grid");
        if (b.value + 1e-15 < exact_binomial_tail(n, p, m))
          return fail(fmt("small_p violated: n=%llu m=%llu", (unsigned long long)n,
                          (unsigned long long)m));
        ++comparisons;
      }

  // Central binomial lower bound <= the exact coefficient.
  for (std::uint64_t n = 10; n <= 30; n += 2)
    for (std::uint64_t m = 0; 8 * m <= n && 4 * m * m * m <= n * n; ++m) {
      double exact = 1.0;
      for (std::uint64_t i = 1; i <= n / 2 + m; ++i)
        exact = exact * double(n - i + 1) / double(i);
      CentralBinomialBound b = central_binomial_lower(n, m);
      if (!b.regime_ok) return fail("central regime misflagged on its own grid");
      if (b.value > exact * (1.0 + 1e-12))
        return fail(fmt("central bound violated: n=%llu m=%llu", (unsigned long long)n,
                        (unsigned long long)m));
      ++comparisons;
    }

  // Weighted-layer bound against direct simulation, 3 sigma grace.
  {
    SeedStream rng(seed, 0x6c61796572);
    for (std::size_t k : {1u, 2u, 3u}) {
      WeightedLayerSpec spec;
      for (std::size_t i = 1; i <= k; ++i) spec.d.push_back(8 + 4 * i);
      spec.p = 0.5;
      double mean = 0.0;
      for (std::size_t i = 1; i <= k; ++i) mean += double(i) * double(spec.d[i - 1]) * spec.p;
      for (double t : {2.0, 5.0, 9.0}) {
        WeightedTailBound b = weighted_layer_tail(spec, t);
        std::uint64_t hits = 0;
        for (std::uint64_t s = 0; s < mc_samples; ++s) {
          double y = 0.0;
          for (std::size_t i = 1; i <= k; ++i) {
            std::uint64_t x = 0;
            for (std::uint64_t l = 0; l < spec.d[i - 1]; ++l) x += rng.next_uniform() < spec.p;
            y += double(i) * double(x);
          }
          hits += (y >= mean + t);
        }
        double ph = double(hits) / double(mc_samples);
        double sigma = std::sqrt(std::max(ph * (1.0 - ph), 1e-12) / double(mc_samples));
        if (ph - 3.0 * sigma > b.value)
          return fail(fmt("weighted bound violated: k=%zu t=%.0f emp=%.4g bound=%.4g", k, t, ph,
                          b.value));
        ++comparisons;
      }
    }
  }

  // Weighted k=1 coincides with the plain bound.
  for (double t : {1.0, 2.0, 7.5}) {
    WeightedLayerSpec spec;
    spec.d = {40};
    spec.p = 0.3;
    if (std::abs(weighted_layer_tail(spec, t).value - chernoff_upper(40, t)) > 1e-15)
      return fail("weighted k=1 does not reduce to the plain bound");
    ++comparisons;
  }

  // Median location, exhaustive small grid.
  for (std::uint64_t n = 1; n <= 200; ++n)
    for (double p : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}) {
      double np = p * double(n);
      std::uint64_t fl = std::uint64_t(std::floor(np));
      std::uint64_t ce = std::uint64_t(std::ceil(np));
      if (fl >= 1 && exact_binomial_cdf(n, p, fl - 1) > 0.5 + 1e-12)
        return fail(fmt("median lower bracket violated: n=%llu p=%.1f", (unsigned long long)n, p));
      if (exact_binomial_cdf(n, p, ce) < 0.5 - 1e-12)
        return fail(fmt("median upper bracket violated: n=%llu p=%.1f", (unsigned long long)n, p));
      ++comparisons;
    }

  res.detail = fmt("%llu bound/oracle comparisons held", (unsigned long long)comparisons);
  return res;
}

SuiteResult profile_suite() {
  SuiteResult res{"profiles", true, ""};

  {
    Graph g = Graph::hypercube(8);
    SphereNeighborProfile prof = sphere_neighbor_profile(g, 3);
    for (std::uint32_t m = 1; m <= 3; ++m)
      if (prof.f[m] != m + 1) {
        res.pass = false;
        res.detail = fmt("hypercube profile f_%u = %llu, expected %u", m,
                         (unsigned long long)prof.f[m], m + 1);
        return res;
      }
  }
  {
    Graph g = Graph::torus(5, 3);
    SphereNeighborProfile prof = sphere_neighbor_profile(g, 3);
    for (std::uint32_t m = 1; m <= 3; ++m)
      if (prof.f[m] > m + 1) {
        res.pass = false;
        res.detail = fmt("torus profile f_%u = %llu exceeds %u", m,
                         (unsigned long long)prof.f[m], m + 1);
        return res;
      }
  }
  res.detail = "hypercube spheres meet f_m = m+1 exactly; torus spheres stay below m+1";
  return res;
}

std::vector<SuiteResult> run_all_suites(std::uint64_t seed) {
  std::vector<SuiteResult> out;
  out.push_back(engine_oracle_suite());
  out.push_back(dominance_suite(seed, 1000));
  out.push_back(coupling_suite(seed));
  out.push_back(partition_suite());
  out.push_back(sandwich_suite(100000, seed));
  out.push_back(profile_suite());
  return out;
}

}  // namespace bootperc
