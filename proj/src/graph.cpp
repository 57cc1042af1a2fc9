#include "bootperc/graph.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "bootperc/rng.hpp"

namespace bootperc {

namespace {

constexpr std::uint64_t kMaxVertices = std::uint64_t(1) << 30;
// Explicit adjacency is capped by entry count rather than vertex count so a
// parsed or generated graph cannot silently eat the address space.
constexpr std::uint64_t kMaxExplicitEntries = std::uint64_t(1) << 26;

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

void validate_adjacency(std::uint64_t n, std::uint32_t degree, const std::vector<Vertex>& adj) {
  if (adj.size() != n * std::uint64_t(degree)) bad("adjacency: wrong entry count");
  std::vector<Vertex> row(degree);
  for (std::uint64_t v = 0; v < n; ++v) {
    const Vertex* r = adj.data() + v * degree;
    for (std::uint32_t i = 0; i < degree; ++i) {
      if (r[i] >= n) bad("adjacency: neighbour id out of range");
      if (r[i] == v) bad("adjacency: self-loop");
      row[i] = r[i];
    }
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end())
      bad("adjacency: duplicate neighbour");
  }
  // Symmetry: v must appear in each neighbour's row.
  for (std::uint64_t v = 0; v < n; ++v) {
    const Vertex* r = adj.data() + v * degree;
    for (std::uint32_t i = 0; i < degree; ++i) {
      const Vertex* rr = adj.data() + std::uint64_t(r[i]) * degree;
      if (std::find(rr, rr + degree, Vertex(v)) == rr + degree)
        bad("adjacency: edge not symmetric");
    }
  }
}

}  // namespace

Graph Graph::hypercube(std::uint32_t n) {
  if (n < 1 || n > 30) bad("hypercube: need 1 <= n <= 30");
  Graph g;
  g.family_ = Family::hypercube;
  g.n_ = std::uint64_t(1) << n;
  g.degree_ = n;
  g.dims_ = n;
  g.spec_ = "hypercube:" + std::to_string(n);
  return g;
}

Graph Graph::torus(std::uint32_t n, std::uint32_t dims) {
  if (n < 2) bad("torus: need side >= 2");
  if (dims < 1) bad("torus: need at least one dimension");
  std::uint64_t count = 1;
  for (std::uint32_t j = 0; j < dims; ++j) {
    count *= n;
    if (count > kMaxVertices) bad("torus: vertex count exceeds 2^30");
  }
  Graph g;
  g.family_ = Family::torus;
  g.n_ = count;
  g.degree_ = (n == 2) ? dims : 2 * dims;
  g.side_ = n;
  g.dims_ = dims;
  g.spec_ = "torus:" + std::to_string(n) + "^" + std::to_string(dims);
  return g;
}

Graph Graph::from_adjacency(std::uint64_t n, std::uint32_t degree, std::vector<Vertex> flat,
                            std::string spec) {
  if (n < 1) bad("adjacency: need at least one vertex");
  if (n > kMaxVertices) bad("adjacency: vertex count exceeds 2^30");
  if (degree >= n) bad("adjacency: degree must be < N");
  if (degree > 65535) bad("adjacency: degree exceeds 65535");
  if (n * std::uint64_t(degree) > kMaxExplicitEntries)
    bad("adjacency: N*d exceeds explicit storage cap (2^26 entries)");
  validate_adjacency(n, degree, flat);
  Graph g;
  g.family_ = Family::explicit_list;
  g.n_ = n;
  g.degree_ = degree;
  g.adj_ = std::move(flat);
  g.spec_ = std::move(spec);
  return g;
}

Graph Graph::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("file: cannot open " + path);
  std::uint64_t n = 0;
  std::uint32_t degree = 0;
  if (!(in >> n >> degree)) bad("file: bad header, expected 'N d'");
  if (n < 1 || n > kMaxVertices) bad("file: vertex count out of range");
  if (n * std::uint64_t(degree) > kMaxExplicitEntries)
    bad("file: N*d exceeds explicit storage cap");
  std::vector<Vertex> adj(n * std::uint64_t(degree));
  for (std::uint64_t i = 0; i < adj.size(); ++i) {
    std::uint64_t x;
    if (!(in >> x)) bad("file: truncated adjacency list");
    if (x >= n) bad("file: neighbour id out of range");
    adj[i] = Vertex(x);
  }
  return from_adjacency(n, degree, std::move(adj), "file:" + path);
}

Graph Graph::random_regular(std::uint64_t n, std::uint32_t degree, std::uint64_t seed) {
  if (n < 2) bad("random-regular: need N >= 2");
  if (degree < 1 || degree >= n) bad("random-regular: need 1 <= d < N");
  std::uint64_t stubs = n * std::uint64_t(degree);
  if (stubs % 2 != 0) bad("random-regular: N*d must be even");
  if (stubs > kMaxExplicitEntries) bad("random-regular: N*d exceeds explicit storage cap");

  std::vector<Vertex> stub(stubs);
  std::vector<Vertex> adj;
  std::vector<std::uint32_t> filled(n);
  for (std::uint32_t attempt = 0; attempt < 1000; ++attempt) {
    SeedStream rng(seed, attempt);
    for (std::uint64_t i = 0; i < stubs; ++i) stub[i] = Vertex(i / degree);
    // Fisher-Yates with the project stream; std::shuffle is not pinned down.
    for (std::uint64_t i = stubs - 1; i > 0; --i)
      std::swap(stub[i], stub[rng.next_below(i + 1)]);

    adj.assign(stubs, 0);
    std::fill(filled.begin(), filled.end(), 0);
    bool ok = true;
    for (std::uint64_t i = 0; i + 1 < stubs && ok; i += 2) {
      Vertex a = stub[i], b = stub[i + 1];
      if (a == b) {
        ok = false;
        break;
      }
      const Vertex* ra = adj.data() + std::uint64_t(a) * degree;
      for (std::uint32_t j = 0; j < filled[a]; ++j)
        if (ra[j] == b) {
          ok = false;
          break;
        }
      if (!ok) break;
      adj[std::uint64_t(a) * degree + filled[a]++] = b;
      adj[std::uint64_t(b) * degree + filled[b]++] = a;
    }
    if (ok) {
      std::string spec = "random-regular:" + std::to_string(n) + "," + std::to_string(degree) +
                         "," + std::to_string(seed);
      return from_adjacency(n, degree, std::move(adj), std::move(spec));
    }
  }
  throw std::runtime_error("random-regular: no simple pairing in 1000 restarts");
}

Graph Graph::disjoint_union(const std::vector<Graph>& parts) {
  if (parts.size() < 2) bad("union: need at least two operands");
  std::uint32_t degree = parts[0].degree();
  std::uint64_t total = 0;
  for (const Graph& p : parts) {
    if (p.degree() != degree) bad("union: all operands must share one degree");
    total += p.vertex_count();
  }
  if (total > kMaxVertices) bad("union: vertex count exceeds 2^30");
  if (total * std::uint64_t(degree) > kMaxExplicitEntries)
    bad("union: N*d exceeds explicit storage cap");
  std::vector<Vertex> adj;
  adj.reserve(total * degree);
  std::uint64_t offset = 0;
  std::string spec = "union:";
  for (std::size_t pi = 0; pi < parts.size(); ++pi) {
    const Graph& p = parts[pi];
    for (std::uint64_t v = 0; v < p.vertex_count(); ++v)
      p.visit_neighbors(Vertex(v), [&](Vertex u) { adj.push_back(Vertex(u + offset)); });
    offset += p.vertex_count();
    spec += (pi ? "+" : "") + p.spec();
  }
  return from_adjacency(total, degree, std::move(adj), std::move(spec));
}

namespace {

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    bad(what + ": expected unsigned integer, got '" + s + "'");
  errno = 0;
  char* end = nullptr;
  std::uint64_t v = std::strtoull(s.c_str(), &end, 10);
  if (errno != 0 || end != s.c_str() + s.size()) bad(what + ": bad integer '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = s.find(sep, pos);
    out.push_back(s.substr(pos, next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

}  // namespace

Graph Graph::parse_spec(const std::string& spec) {
  std::size_t colon = spec.find(':');
  if (colon == std::string::npos) bad("graph spec: missing ':' in '" + spec + "'");
  std::string head = spec.substr(0, colon);
  std::string rest = spec.substr(colon + 1);
  if (head == "hypercube") {
    std::uint64_t n = parse_u64(rest, "hypercube");
    return hypercube(std::uint32_t(n));
  }
  if (head == "torus") {
    auto parts = split(rest, '^');
    if (parts.size() != 2) bad("torus spec: expected torus:<n>^<d>");
    return torus(std::uint32_t(parse_u64(parts[0], "torus side")),
                 std::uint32_t(parse_u64(parts[1], "torus dims")));
  }
  if (head == "file") return from_file(rest);
  if (head == "random-regular") {
    auto parts = split(rest, ',');
    if (parts.size() != 3) bad("random-regular spec: expected random-regular:<N>,<d>,<seed>");
    return random_regular(parse_u64(parts[0], "random-regular N"),
                          std::uint32_t(parse_u64(parts[1], "random-regular d")),
                          parse_u64(parts[2], "random-regular seed"));
  }
  if (head == "union") {
    auto parts = split(rest, '+');
    if (parts.size() < 2) bad("union spec: need at least two '+'-separated operands");
    std::vector<Graph> graphs;
    graphs.reserve(parts.size());
    for (const std::string& p : parts) {
      if (p.rfind("union:", 0) == 0) bad("union spec: operands must not be unions");
      graphs.push_back(parse_spec(p));
    }
    return disjoint_union(graphs);
  }
  bad("graph spec: unknown family '" + head + "'");
}

Vertex Graph::neighbor(Vertex v, std::uint32_t i) const {
  switch (family_) {
    case Family::hypercube:
      return Vertex(v ^ (Vertex(1) << i));
    case Family::torus: {
      std::uint32_t per_dim = (side_ == 2) ? 1 : 2;
      std::uint32_t dim = i / per_dim;
      Vertex stride = 1;
      Vertex rem = v;
      for (std::uint32_t j = 0; j < dim; ++j) {
        rem /= side_;
        stride *= side_;
      }
      Vertex digit = rem % side_;
      if (per_dim == 1 || i % 2 == 0)
        return (digit + 1 == side_) ? v - stride * (side_ - 1) : v + stride;
      return (digit == 0) ? v + stride * (side_ - 1) : v - stride;
    }
    case Family::explicit_list:
      return adj_[std::size_t(v) * degree_ + i];
  }
  return 0;
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex src, std::uint32_t depth_cap) {
  std::vector<std::uint32_t> dist(g.vertex_count(), UINT32_MAX);
  std::vector<Vertex> frontier{src}, next;
  dist[src] = 0;
  for (std::uint32_t d = 0; !frontier.empty() && d < depth_cap; ++d) {
    next.clear();
    for (Vertex v : frontier)
      g.visit_neighbors(v, [&](Vertex u) {
        if (dist[u] == UINT32_MAX) {
          dist[u] = d + 1;
          next.push_back(u);
        }
      });
    frontier.swap(next);
  }
  return dist;
}

std::vector<Vertex> sphere(const Graph& g, Vertex x, std::uint32_t k) {
  auto dist = bfs_distances(g, x, k);
  std::vector<Vertex> out;
  for (std::uint64_t v = 0; v < g.vertex_count(); ++v)
    if (dist[v] == k) out.push_back(Vertex(v));
  return out;
}

std::vector<Vertex> ball(const Graph& g, Vertex x, std::uint32_t k) {
  auto dist = bfs_distances(g, x, k);
  std::vector<Vertex> out;
  for (std::uint64_t v = 0; v < g.vertex_count(); ++v)
    if (dist[v] <= k) out.push_back(Vertex(v));
  return out;
}

namespace {

// One centre's contribution to the profile. A neighbour z of y lying on
// S(x,i) forces |dist(y) - i| <= 1, and y outside B(x,i-1) means dist(y) >= i,
// so only i = dist(y) and i = dist(y) - 1 can score; bucket the neighbours of
// y by their distance and take those two buckets.
void profile_scan_center(const Graph& g, Vertex x, std::uint32_t k,
                         std::vector<std::uint64_t>& f, std::vector<std::uint32_t>& dist) {
  dist = bfs_distances(g, x, k + 1);
  std::vector<std::uint32_t> bucket(k + 2, 0);
  for (std::uint64_t yv = 0; yv < g.vertex_count(); ++yv) {
    Vertex y = Vertex(yv);
    std::uint32_t dy = dist[y];
    if (dy == 0 || dy == UINT32_MAX || dy > k + 1) continue;
    std::fill(bucket.begin(), bucket.end(), 0);
    g.visit_neighbors(y, [&](Vertex z) {
      if (dist[z] <= k + 1) ++bucket[dist[z]];
    });
    if (dy <= k && bucket[dy] > f[dy]) f[dy] = bucket[dy];
    if (dy >= 2 && dy - 1 <= k && bucket[dy - 1] > f[dy - 1]) f[dy - 1] = bucket[dy - 1];
  }
}

}  // namespace

SphereNeighborProfile sphere_neighbor_profile(const Graph& g, std::uint32_t k,
                                              std::uint64_t sample_count, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("profile: need k >= 1");
  SphereNeighborProfile out;
  out.f.assign(k + 1, 1);  // floor: vacuous maxima report 1, and f_0 = 1 exactly
  std::vector<std::uint32_t> dist;
  if (sample_count == 0) {
    std::uint64_t cost = g.vertex_count() * std::uint64_t(k) * g.degree();
    if (cost > 1000000000ull)
      throw std::invalid_argument("profile: exhaustive scan over budget (N*k*d > 1e9); "
                                  "pass a sample count");
    for (std::uint64_t x = 0; x < g.vertex_count(); ++x)
      profile_scan_center(g, Vertex(x), k, out.f, dist);
    out.exact = true;
    out.centers_scanned = g.vertex_count();
  } else {
    SeedStream rng(seed, 0x70726f66);  // profile sampling stream
    for (std::uint64_t s = 0; s < sample_count; ++s)
      profile_scan_center(g, Vertex(rng.next_below(g.vertex_count())), k, out.f, dist);
    out.exact = false;
    out.centers_scanned = sample_count;
  }
  return out;
}

}  // namespace bootperc
