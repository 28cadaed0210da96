#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nut {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Immutable simple undirected graph on vertices 0..n-1.  Edges are stored
// as (u, v) pairs with u < v in lexicographic order; adjacency lists are
// sorted ascending.
class Graph {
 public:
  Graph() = default;

  // Throws GraphError on an out-of-range endpoint, a self-loop or a
  // duplicate edge (in either orientation).
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  static Graph empty(int n) { return Graph(n, std::span<const Edge>{}); }

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

  // Relabel: vertex v of *this becomes perm[v] in the result.
  Graph relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_{0};
  std::vector<Vertex> adj_;
};

Graph build_graph(int n, std::span<const Edge> edges);

struct DegreeProfile {
  std::vector<int> degrees;  // sorted ascending
  int min_degree = 0;
  int max_degree = 0;
  bool regular = false;
};

DegreeProfile degree_profile(const Graph& g);
bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);

// Replaces edge e by a path through k new vertices n..n+k-1 (in order from
// the smaller endpoint of e to the larger one).
Graph subdivide_edge(const Graph& g, Edge e, int k);

struct Coalescence {
  Graph graph;
  std::vector<Vertex> first_map;   // old vertex of g1 -> new vertex
  std::vector<Vertex> second_map;  // old vertex of g2 -> new vertex
};

// Disjoint union of g1 and g2 with v1 and v2 identified.  Vertices of g1
// keep their indices; the remaining vertices of g2 are appended in index
// order.
Coalescence coalesce(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2);

// Role of a vertex inside a construction pipeline.
struct VertexTag {
  enum class Role : std::uint8_t { host, triangle, gadget_interior, gadget_apex, subdivision };
  Role role = Role::host;
  int i = 0;  // 1-based host index (h_i)
  int j = 0;  // 1-based triangle index within the bouquet
  int k = 0;  // 1 or 2: end of the triangle

  std::string name() const;
  friend bool operator==(const VertexTag&, const VertexTag&) = default;
};

}  // namespace nut
