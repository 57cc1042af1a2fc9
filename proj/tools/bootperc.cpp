// Command-line front end: graph construction, schedule parsing, Monte Carlo
// scans and critical-probability estimation, bound evaluation, partitions,
// profiles, and the invariant suites. All machine output is CSV on stdout or
// the -o target; diagnostics go to stderr.
//
// Exit codes: 0 success, 1 usage or validation error, 2 sampling budget
// exhausted before the requested precision, 3 internal invariant breach.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "bootperc/bounds.hpp"
#include "bootperc/csvfmt.hpp"
#include "bootperc/engine.hpp"
#include "bootperc/graph.hpp"
#include "bootperc/partition.hpp"
#include "bootperc/sampler.hpp"
#include "bootperc/schedule.hpp"
#include "bootperc/verify.hpp"

namespace {

using namespace bootperc;

constexpr std::uint64_t kDefaultSeed = 20250814;

std::uint64_t seed_from_environment() {
  const char* env = std::getenv("BOOTPERC_SEED");
  if (!env || !*env) return kDefaultSeed;
  char* end = nullptr;
  std::uint64_t v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0')
    throw std::invalid_argument("BOOTPERC_SEED must be an unsigned integer");
  return v;
}

struct Output {
  std::ofstream file;
  std::ostream* os = &std::cout;

  void open(const std::string& path) {
    if (path.empty() || path == "-") return;
    file.open(path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file: " + path);
    os = &file;
  }
  std::ostream& stream() { return *os; }
};

std::vector<double> parse_grid(const std::string& grid) {
  std::size_t c1 = grid.find(':');
  std::size_t c2 = (c1 == std::string::npos) ? std::string::npos : grid.find(':', c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw std::invalid_argument("grid: expected <lo>:<hi>:<step>");
  double lo = std::stod(grid.substr(0, c1));
  double hi = std::stod(grid.substr(c1 + 1, c2 - c1 - 1));
  double step = std::stod(grid.substr(c2 + 1));
  if (!(step > 0.0) || hi < lo) throw std::invalid_argument("grid: need lo <= hi and step > 0");
  std::vector<double> ps;
  for (int i = 0;; ++i) {
    double p = lo + step * i;
    if (p > hi + step * 1e-9) break;
    ps.push_back(std::min(p, 1.0));
  }
  return ps;
}

std::vector<std::uint64_t> parse_u64_list(const std::string& s, const char* what) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument(std::string(what) + ": bad list entry '" + item + "'");
    out.push_back(std::strtoull(item.c_str(), nullptr, 10));
  }
  if (out.empty()) throw std::invalid_argument(std::string(what) + ": empty list");
  return out;
}

// log(vertex count) straight from the spec text, so size conditions can be
// evaluated for graphs far beyond anything buildable.
double log_vertices_of_spec(const std::string& spec) {
  if (spec.rfind("hypercube:", 0) == 0)
    return std::stod(spec.substr(10)) * std::log(2.0);
  if (spec.rfind("torus:", 0) == 0) {
    std::string rest = spec.substr(6);
    std::size_t caret = rest.find('^');
    if (caret == std::string::npos) throw std::invalid_argument("torus spec: missing '^'");
    double side = std::stod(rest.substr(0, caret));
    double dims = std::stod(rest.substr(caret + 1));
    if (side < 2 || dims < 1) throw std::invalid_argument("torus spec: bad parameters");
    return dims * std::log(side);
  }
  return std::log(double(Graph::parse_spec(spec).vertex_count()));
}

void emit_probe_rows(std::ostream& os, const CriticalEstimate& ce) {
  os << "row,p,trials,successes,p_hat,ci_lo,ci_hi,side,pc_hat,bracket_lo,bracket_hi,"
        "converged,stop_reason\n";
  for (std::size_t i = 0; i < ce.probes.size(); ++i) {
    const ProbeRecord& pr = ce.probes[i];
    os << i << ',' << fmt_num(pr.p) << ',' << pr.est.trials << ',' << pr.est.successes << ','
       << fmt_num(pr.est.p_hat) << ',' << fmt_num(pr.est.ci_lo) << ',' << fmt_num(pr.est.ci_hi)
       << ',' << pr.side << ",,,,,\n";
  }
  os << "estimate,,,,,,,," << fmt_num(ce.pc_hat) << ',' << fmt_num(ce.bracket_lo) << ','
     << fmt_num(ce.bracket_hi) << ',' << (ce.converged ? 1 : 0) << ',' << ce.stop_reason
     << '\n';
}

int cmd_scan(const std::string& graph_spec, const std::string& rule, const std::string& grid,
             double single_p, bool have_single_p, std::uint64_t trials, bool coupled,
             std::uint64_t seed, std::uint32_t workers, Output& out) {
  Graph g = Graph::parse_spec(graph_spec);
  ThresholdSchedule sched = parse_rule(rule, g.degree());
  std::vector<double> ps = have_single_p ? std::vector<double>{single_p} : parse_grid(grid);
  std::cerr << "# scan graph=" << g.spec() << " N=" << g.vertex_count() << " d=" << g.degree()
            << " rule=" << sched.describe() << " seed=" << seed << (coupled ? " coupled" : "")
            << "\n";
  std::ostream& os = out.stream();
  os << "p,trials,successes,p_hat,ci_lo,ci_hi\n";
  EngineScratch scratch;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    Estimate e;
    if (coupled) {
      // shared trial stream across the grid; worker count cannot change it
      TrialPlan plan;
      plan.trials = trials;
      plan.workers = workers;
      plan.master_seed = seed;
      e = estimate_percolation_prob(g, sched, ps[i], plan);
    } else {
      // disjoint trial blocks per grid point (diagnostic mode, one thread)
      std::uint64_t base = i * trials;
      std::uint64_t successes = 0;
      for (std::uint64_t t = 0; t < trials; ++t)
        successes += scratch.percolates(g, sample_initial(g, ps[i], seed, base + t), sched);
      e = wilson_estimate(successes, trials);
    }
    os << fmt_num(ps[i]) << ',' << e.trials << ',' << e.successes << ',' << fmt_num(e.p_hat)
       << ',' << fmt_num(e.ci_lo) << ',' << fmt_num(e.ci_hi) << '\n';
  }
  return 0;
}

int cmd_pc(const std::string& graph_spec, const std::string& rule, std::uint64_t trials,
           double tol, std::uint32_t max_probes, std::uint64_t seed, std::uint32_t workers,
           Output& out) {
  Graph g = Graph::parse_spec(graph_spec);
  ThresholdSchedule sched = parse_rule(rule, g.degree());
  CriticalOptions opt;
  opt.base_trials = trials;
  opt.tol = tol;
  opt.master_seed = seed;
  opt.workers = workers;
  opt.max_probes = max_probes;
  CriticalEstimate ce = estimate_pc(g, sched, opt);
  std::cerr << "# pc graph=" << g.spec() << " rule=" << sched.describe() << " seed=" << seed
            << " pc_hat=" << fmt_num(ce.pc_hat) << " bracket=[" << fmt_num(ce.bracket_lo) << ","
            << fmt_num(ce.bracket_hi) << "] stop=" << ce.stop_reason
            << (ce.degenerate ? " degenerate" : "") << "\n";
  emit_probe_rows(out.stream(), ce);
  return ce.converged ? 0 : 2;
}

int cmd_window(const std::string& graph_spec, const std::string& rule, double alpha,
               std::uint64_t trials, double tol, std::uint32_t max_probes, std::uint64_t seed,
               std::uint32_t workers, Output& out) {
  Graph g = Graph::parse_spec(graph_spec);
  ThresholdSchedule sched = parse_rule(rule, g.degree());
  CriticalOptions opt;
  opt.base_trials = trials;
  opt.tol = tol;
  opt.master_seed = seed;
  opt.workers = workers;
  opt.max_probes = max_probes;
  WindowEstimate w = estimate_window(g, sched, alpha, opt);
  std::ostream& os = out.stream();
  os << "target,p,bracket_lo,bracket_hi,converged,width\n";
  os << fmt_num(w.alpha) << ',' << fmt_num(w.low.pc_hat) << ',' << fmt_num(w.low.bracket_lo)
     << ',' << fmt_num(w.low.bracket_hi) << ',' << (w.low.converged ? 1 : 0) << ','
     << fmt_num(w.width) << '\n';
  os << fmt_num(1.0 - w.alpha) << ',' << fmt_num(w.high.pc_hat) << ','
     << fmt_num(w.high.bracket_lo) << ',' << fmt_num(w.high.bracket_hi) << ','
     << (w.high.converged ? 1 : 0) << ',' << fmt_num(w.width) << '\n';
  return (w.low.converged && w.high.converged) ? 0 : 2;
}

struct BoundArgs {
  std::string which;
  std::uint64_t n = 0;
  double p = 0.5;
  std::uint64_t m = 0;
  double t = 0.0;
  double delta = 0.0;
  double C = 0.0;
  std::uint64_t n_min = 100;
  std::string layers;
  double lambda = 0.0;
  std::string graph_spec;
  double log_n = -1.0;
  std::uint32_t d = 0;
  std::uint32_t k = 0;
  std::string fs;
  double omega = 1.0;
};

int cmd_bounds(const BoundArgs& a, Output& out) {
  std::ostream& os = out.stream();
  os << "bound,params,value,regime_ok,note\n";
  auto row = [&](const std::string& name, const std::string& params, double value,
                 bool regime_ok, const std::string& note) {
    os << name << ',' << params << ',' << fmt_num(value) << ',' << (regime_ok ? 1 : 0) << ','
       << note << '\n';
  };

  if (a.which == "exact") {
    row("exact", "n=" + std::to_string(a.n) + ";p=" + fmt_num(a.p) + ";m=" + std::to_string(a.m),
        exact_binomial_tail(a.n, a.p, a.m), true, "P(Bin>=m)");
  } else if (a.which == "chernoff") {
    row("chernoff", "n=" + std::to_string(a.n) + ";t=" + fmt_num(a.t), chernoff_upper(a.n, a.t),
        true, "two-sided tail upper bound");
  } else if (a.which == "chernoff-lower") {
    LowerTailBound b = chernoff_lower(a.n, a.delta, a.C, a.n_min);
    row("chernoff-lower",
        "n=" + std::to_string(a.n) + ";delta=" + fmt_num(a.delta) + ";C=" + fmt_num(a.C),
        b.value, b.delta_regime_ok && b.n_ok,
        std::string("delta_regime=") + (b.delta_regime_ok ? "1" : "0") + ";n_ok=" +
            (b.n_ok ? "1" : "0"));
  } else if (a.which == "small-p") {
    SmallPTailBound b = small_p_tail(a.n, a.p, a.m);
    row("small-p",
        "n=" + std::to_string(a.n) + ";p=" + fmt_num(a.p) + ";m=" + std::to_string(a.m), b.value,
        b.regime_ok, "requires p*n^2 <= 1");
  } else if (a.which == "weighted") {
    WeightedLayerSpec spec;
    spec.d = parse_u64_list(a.layers, "layers");
    spec.p = a.p;
    WeightedTailBound b = weighted_layer_tail(spec, a.t);
    row("weighted", "layers=" + a.layers + ";p=" + fmt_num(a.p) + ";t=" + fmt_num(a.t), b.value,
        true, "mean=" + fmt_num(b.mean) + ";D=" + fmt_num(b.weight_sum));
  } else if (a.which == "central") {
    CentralBinomialBound b = central_binomial_lower(a.n, a.m);
    row("central", "n=" + std::to_string(a.n) + ";m=" + std::to_string(a.m), b.value,
        b.regime_ok, "lower bound on C(n, n/2+m)");
  } else if (a.which == "pc-window") {
    CriticalWindowBounds w = critical_probability_bounds(a.n);
    std::string params = "n=" + std::to_string(a.n);
    row("pc-window-lower", params, w.p_lower, true, "lambda=-2");
    row("pc-window-center", params, w.p_center, true, "lambda=0");
    row("pc-window-upper", params, w.p_upper, true, "lambda=1/2");
    row("pc-window-at-lambda", params + ";lambda=" + fmt_num(a.lambda),
        p_at_lambda(a.n, a.lambda), true, "");
  } else if (a.which == "regular-size") {
    double log_n = a.log_n;
    if (log_n < 0.0) {
      if (a.graph_spec.empty())
        throw std::invalid_argument("regular-size: pass --graph or --log-n");
      log_n = log_vertices_of_spec(a.graph_spec);
    }
    auto f = parse_u64_list(a.fs, "profile");
    RegularSizeCondition c = regular_size_condition(a.d, a.k, log_n, f, a.omega);
    row("regular-size",
        "d=" + std::to_string(a.d) + ";k=" + std::to_string(a.k) + ";logN=" + fmt_num(log_n) +
            ";omega=" + fmt_num(a.omega),
        c.exponent, c.size_ok,
        "margin=" + fmt_num(c.margin) + ";f_max=" + fmt_num(c.f_max) + ";smallness=" +
            (c.smallness_ok ? "1" : "0") + ";threshold=" + fmt_num(c.smallness_threshold));
  } else {
    throw std::invalid_argument("bounds: unknown --which '" + a.which + "'");
  }
  return 0;
}

int cmd_partition(const std::string& mode, const std::string& graph_spec, std::uint32_t n,
                  std::uint64_t center, std::uint32_t k, std::uint64_t m,
                  const std::string& members_list, bool emit_members, Output& out) {
  DistancePartition part;
  if (mode == "hypercube") {
    part = hypercube_sphere_partition(n, Vertex(center), k);
  } else if (mode == "general") {
    Graph g = Graph::parse_spec(graph_spec);
    SphereNeighborProfile prof = sphere_neighbor_profile(g, k);
    part = general_sphere_partition(g, Vertex(center), k, prof);
  } else if (mode == "greedy") {
    Graph g = Graph::parse_spec(graph_spec);
    std::vector<Vertex> xs;
    if (members_list.empty()) {
      xs.resize(g.vertex_count());
      for (std::uint64_t v = 0; v < g.vertex_count(); ++v) xs[v] = Vertex(v);
    } else {
      for (std::uint64_t v : parse_u64_list(members_list, "members")) xs.push_back(Vertex(v));
    }
    part = greedy_distance_partition(g, xs, k, m);
  } else {
    throw std::invalid_argument("partition: --mode must be hypercube | general | greedy");
  }

  std::cerr << "# partition classes=" << part.classes.size() << " bound=" << part.class_bound
            << " min_distance=" << part.min_distance << "\n";
  std::ostream& os = out.stream();
  if (emit_members) {
    os << "class,size,members\n";
    for (std::size_t i = 0; i < part.classes.size(); ++i) {
      os << i << ',' << part.classes[i].size() << ',';
      for (std::size_t l = 0; l < part.classes[i].size(); ++l)
        os << (l ? " " : "") << part.classes[i][l];
      os << '\n';
    }
  } else {
    os << "class,size\n";
    for (std::size_t i = 0; i < part.classes.size(); ++i)
      os << i << ',' << part.classes[i].size() << '\n';
  }
  return 0;
}

int cmd_profile(const std::string& graph_spec, std::uint32_t k, std::uint64_t samples,
                std::uint64_t seed, Output& out) {
  Graph g = Graph::parse_spec(graph_spec);
  SphereNeighborProfile prof = sphere_neighbor_profile(g, k, samples, seed);
  std::ostream& os = out.stream();
  os << "i,f_i,mode,centers\n";
  for (std::uint32_t i = 0; i < prof.f.size(); ++i)
    os << i << ',' << prof.f[i] << ',' << (prof.exact ? "exact" : "sampled-lower-bound") << ','
       << prof.centers_scanned << '\n';
  return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, std::uint64_t trials,
               std::uint64_t mc_samples, Output& out) {
  std::vector<SuiteResult> results;
  if (suite == "all") {
    results = run_all_suites(seed);
  } else if (suite == "engine-oracle") {
    results.push_back(engine_oracle_suite());
  } else if (suite == "dominance") {
    results.push_back(dominance_suite(seed, trials));
  } else if (suite == "coupling") {
    results.push_back(coupling_suite(seed));
  } else if (suite == "partitions") {
    results.push_back(partition_suite());
  } else if (suite == "sandwich") {
    results.push_back(sandwich_suite(mc_samples, seed));
  } else if (suite == "profiles") {
    results.push_back(profile_suite());
  } else {
    throw std::invalid_argument("verify: unknown suite '" + suite + "'");
  }
  bool all_pass = true;
  for (const SuiteResult& r : results) {
    out.stream() << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bootstrap percolation simulator and analysis toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // allow --seed/--workers/-o after the subcommand name

  std::uint64_t seed = 0;
  bool seed_given = false;
  std::uint32_t workers = 1;
  std::string output_path;
  app.add_option("--seed", seed, "master seed (overrides BOOTPERC_SEED)")
      ->each([&](const std::string&) { seed_given = true; });
  app.add_option("--workers", workers, "trial-parallel worker threads")->check(CLI::Range(1, 256));
  app.add_option("-o,--output", output_path, "output file ('-' = stdout)");

  // scan
  auto* scan = app.add_subcommand("scan", "percolation probability over a p grid");
  std::string scan_graph, scan_rule, scan_grid;
  double scan_p = 0.0;
  std::uint64_t scan_trials = 1000;
  bool scan_uncoupled = false;
  scan->add_option("--graph", scan_graph, "graph spec")->required();
  scan->add_option("--rule", scan_rule, "threshold rule")->required();
  auto* grid_opt = scan->add_option("--p-grid", scan_grid, "grid <lo>:<hi>:<step>");
  auto* p_opt = scan->add_option("--p", scan_p, "single probe probability");
  grid_opt->excludes(p_opt);
  scan->add_option("--trials", scan_trials, "trials per grid point")->check(CLI::PositiveNumber);
  scan->add_flag("--uncoupled", scan_uncoupled,
                 "draw fresh trials per grid point instead of the shared coupled stream");

  // pc
  auto* pc = app.add_subcommand("pc", "critical probability by coupled bisection");
  std::string pc_graph, pc_rule;
  std::uint64_t pc_trials = 1000;
  double pc_tol = 0.01;
  std::uint32_t pc_max_probes = 64;
  pc->add_option("--graph", pc_graph, "graph spec")->required();
  pc->add_option("--rule", pc_rule, "threshold rule")->required();
  pc->add_option("--trials", pc_trials, "base trials per probe")->check(CLI::PositiveNumber);
  pc->add_option("--tol", pc_tol, "bracket width target")->check(CLI::PositiveNumber);
  pc->add_option("--max-probes", pc_max_probes, "probe budget");

  // window
  auto* win = app.add_subcommand("window", "critical window between two quantiles");
  std::string win_graph, win_rule;
  double win_alpha = 0.25;
  std::uint64_t win_trials = 1000;
  double win_tol = 0.01;
  std::uint32_t win_max_probes = 64;
  win->add_option("--graph", win_graph, "graph spec")->required();
  win->add_option("--rule", win_rule, "threshold rule")->required();
  win->add_option("--alpha", win_alpha, "quantile level in (0, 1/2)");
  win->add_option("--trials", win_trials, "base trials per probe")->check(CLI::PositiveNumber);
  win->add_option("--tol", win_tol, "bracket width target")->check(CLI::PositiveNumber);
  win->add_option("--max-probes", win_max_probes, "probe budget per side");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "closed-form bound evaluation");
  BoundArgs ba;
  bounds->add_option("--which", ba.which,
                     "exact | chernoff | chernoff-lower | small-p | weighted | central | "
                     "pc-window | regular-size")
      ->required();
  bounds->add_option("--n", ba.n, "binomial n / hypercube dimension");
  bounds->add_option("--p", ba.p, "success probability");
  bounds->add_option("--m", ba.m, "tail start / offset");
  bounds->add_option("--t", ba.t, "tail shift");
  bounds->add_option("--delta", ba.delta, "distance of p below 1/2");
  bounds->add_option("--C", ba.C, "cut shift above n/2");
  bounds->add_option("--n-min", ba.n_min, "working floor for 'n large enough'");
  bounds->add_option("--layers", ba.layers, "comma list d_1,...,d_k");
  bounds->add_option("--lambda", ba.lambda, "window position parameter");
  bounds->add_option("--graph", ba.graph_spec, "graph spec (size condition)");
  bounds->add_option("--log-n", ba.log_n, "log of vertex count (size condition)");
  bounds->add_option("--d", ba.d, "degree (size condition)");
  bounds->add_option("--k", ba.k, "radius (size condition)");
  bounds->add_option("--fs", ba.fs, "profile f_0,...,f_k (size condition)");
  bounds->add_option("--omega", ba.omega, "divergence factor omega(d)");

  // partition
  auto* part = app.add_subcommand("partition", "far-apart class partitions");
  std::string part_mode, part_graph, part_members;
  std::uint32_t part_n = 0, part_k = 1;
  std::uint64_t part_center = 0, part_m = 0;
  bool part_emit = false;
  part->add_option("--mode", part_mode, "hypercube | general | greedy")->required();
  part->add_option("--graph", part_graph, "graph spec (general/greedy)");
  part->add_option("--n", part_n, "hypercube dimension (hypercube mode)");
  part->add_option("--center", part_center, "sphere centre vertex");
  part->add_option("--k", part_k, "sphere radius / separation parameter");
  part->add_option("--m", part_m, "ball-size cap (greedy mode)");
  part->add_option("--members", part_members, "comma list of vertex ids (greedy mode)");
  part->add_flag("--emit-members", part_emit, "emit class members, not just sizes");

  // profile
  auto* prof = app.add_subcommand("profile", "sphere-neighbour profile f_0..f_k");
  std::string prof_graph;
  std::uint32_t prof_k = 1;
  std::uint64_t prof_samples = 0;
  prof->add_option("--graph", prof_graph, "graph spec")->required();
  prof->add_option("--k", prof_k, "profile depth")->required();
  prof->add_option("--samples", prof_samples,
                   "sampled centres (0 = exhaustive, subject to the N*k*d budget)");

  // verify
  auto* ver = app.add_subcommand("verify", "run invariant suites");
  std::string ver_suite = "all";
  std::uint64_t ver_trials = 1000, ver_mc = 100000;
  ver->add_option("--suite", ver_suite,
                  "all | engine-oracle | dominance | coupling | partitions | sandwich | "
                  "profiles");
  ver->add_option("--trials", ver_trials, "dominance suite trials");
  ver->add_option("--mc", ver_mc, "sandwich suite simulation samples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (!seed_given) seed = seed_from_environment();
    Output out;
    out.open(output_path);
    if (scan->parsed())
      return cmd_scan(scan_graph, scan_rule, scan_grid, scan_p, p_opt->count() > 0, scan_trials,
                      !scan_uncoupled, seed, workers, out);
    if (pc->parsed())
      return cmd_pc(pc_graph, pc_rule, pc_trials, pc_tol, pc_max_probes, seed, workers, out);
    if (win->parsed())
      return cmd_window(win_graph, win_rule, win_alpha, win_trials, win_tol, win_max_probes,
                        seed, workers, out);
    if (bounds->parsed()) return cmd_bounds(ba, out);
    if (part->parsed())
      return cmd_partition(part_mode, part_graph, part_n, part_center, part_k, part_m,
                           part_members, part_emit, out);
    if (prof->parsed()) return cmd_profile(prof_graph, prof_k, prof_samples, seed, out);
    if (ver->parsed()) return cmd_verify(ver_suite, seed, ver_trials, ver_mc, out);
  } catch (const invariant_error& e) {
    std::cerr << "invariant breach: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
