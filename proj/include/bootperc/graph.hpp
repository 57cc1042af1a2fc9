#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bootperc/bitset.hpp"

namespace bootperc {

// Regular graph with uniform degree. Hypercubes and tori are generated on the
// fly from the vertex id (nothing is materialized), everything else stores a
// flat adjacency array of N*d entries.
//
// Vertex ids are indices in [0, N). Hypercube vertices are bit masks of their
// coordinates; torus vertices are base-n digit strings, least significant
// digit = coordinate 0.
class Graph {
 public:
  enum class Family { hypercube, torus, explicit_list };

  // Q_n: N = 2^n, degree n, neighbours differ in exactly one bit. 1 <= n <= 30.
  static Graph hypercube(std::uint32_t n);

  // [n]^dims with cyclic coordinates: degree 2*dims for n >= 3. For n = 2 the
  // two cyclic steps coincide, so the degree is dims and the graph is Q_dims.
  static Graph torus(std::uint32_t n, std::uint32_t dims);

  // Validated explicit adjacency: no self-loops, no duplicate neighbours,
  // symmetric, ids in range.
  static Graph from_adjacency(std::uint64_t n, std::uint32_t degree,
                              std::vector<Vertex> flat_adjacency, std::string spec);

  // Adjacency file: header line "N d", then N lines of d neighbour ids.
  static Graph from_file(const std::string& path);

  // Configuration model, conditioned on simplicity: pair up N*d stubs by a
  // seeded shuffle and restart from scratch on any loop or repeated edge.
  // Deterministic for a given seed; gives up after 1000 restarts.
  static Graph random_regular(std::uint64_t n, std::uint32_t degree, std::uint64_t seed);

  // Disjoint union of graphs with equal degrees; vertex ids are offset in
  // argument order.
  static Graph disjoint_union(const std::vector<Graph>& parts);

  // Spec grammar:
  //   hypercube:<n> | torus:<n>^<d> | file:<path> |
  //   random-regular:<N>,<d>,<seed> | union:<spec>+<spec>+...
  // Union operands must not themselves be unions.
  static Graph parse_spec(const std::string& spec);

  std::uint64_t vertex_count() const { return n_; }
  std::uint32_t degree() const { return degree_; }
  Family family() const { return family_; }
  const std::string& spec() const { return spec_; }

  Vertex neighbor(Vertex v, std::uint32_t i) const;

  template <class F>
  void visit_neighbors(Vertex v, F&& f) const {
    switch (family_) {
      case Family::hypercube:
        for (std::uint32_t i = 0; i < degree_; ++i) f(Vertex(v ^ (Vertex(1) << i)));
        break;
      case Family::torus: {
        Vertex rem = v;
        Vertex stride = 1;
        for (std::uint32_t j = 0; j < dims_; ++j) {
          Vertex digit = rem % side_;
          rem /= side_;
          Vertex up = (digit + 1 == side_) ? v - stride * (side_ - 1) : v + stride;
          f(up);
          if (side_ > 2) {
            Vertex down = (digit == 0) ? v + stride * (side_ - 1) : v - stride;
            f(down);
          }
          stride *= side_;
        }
        break;
      }
      case Family::explicit_list: {
        const Vertex* row = adj_.data() + std::size_t(v) * degree_;
        for (std::uint32_t i = 0; i < degree_; ++i) f(row[i]);
        break;
      }
    }
  }

  std::uint32_t count_in_set(Vertex v, const VertexSet& s) const {
    std::uint32_t c = 0;
    visit_neighbors(v, [&](Vertex u) { c += s.test(u); });
    return c;
  }

 private:
  Family family_ = Family::explicit_list;
  std::uint64_t n_ = 0;
  std::uint32_t degree_ = 0;
  std::uint32_t side_ = 0;  // torus n
  std::uint32_t dims_ = 0;  // torus d, hypercube n
  std::vector<Vertex> adj_;
  std::string spec_;
};

// BFS distances from src, capped at depth_cap; unreached = UINT32_MAX.
std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex src,
                                         std::uint32_t depth_cap = UINT32_MAX);

// Vertices at distance exactly k / at most k, ascending ids.
std::vector<Vertex> sphere(const Graph& g, Vertex x, std::uint32_t k);
std::vector<Vertex> ball(const Graph& g, Vertex x, std::uint32_t k);

// f_i = max over x and y outside B(x, i-1) of |S(x,i) and Gamma(y)|, for
// i = 0..k. Vacuous maxima (no contributing pair) are reported as 1, and
// f_0 = 1 for any graph with at least one edge.
//
// exact mode scans every x and requires N*k*d <= 10^9; sample_count > 0
// scans that many seeded sample centres instead and yields a lower bound.
struct SphereNeighborProfile {
  std::vector<std::uint64_t> f;  // size k+1, f[0] = 1
  bool exact = true;
  std::uint64_t centers_scanned = 0;
};

SphereNeighborProfile sphere_neighbor_profile(const Graph& g, std::uint32_t k,
                                              std::uint64_t sample_count = 0,
                                              std::uint64_t seed = 0);

}  // namespace bootperc
