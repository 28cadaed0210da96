#include "nutgraph/graph.hpp"

#include <algorithm>
#include <numeric>

namespace nut {

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 0) throw GraphError("negative vertex count");
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an endpoint out of range for n=" + std::to_string(n));
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end())
    throw GraphError("duplicate edge (" + std::to_string(dup->first) + "," +
                     std::to_string(dup->second) + ")");

  offsets_.assign(n + 1, 0);
  for (auto [u, v] : edges_) {
    ++offsets_[u + 1];
    ++offsets_[v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  adj_.resize(2 * edges_.size());
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  // Edges are sorted, so each list receives its smaller neighbours in order
  // first, then its larger ones in order.
  for (auto [u, v] : edges_) adj_[fill[v]++] = u;
  for (auto [u, v] : edges_) adj_[fill[u]++] = v;
  for (int v = 0; v < n; ++v)
    std::sort(adj_.begin() + offsets_[v], adj_.begin() + offsets_[v + 1]);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (auto [u, v] : edges_) out.emplace_back(perm[u], perm[v]);
  return Graph(n_, out);
}

Graph build_graph(int n, std::span<const Edge> edges) { return Graph(n, edges); }

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.degrees.resize(g.order());
  for (int v = 0; v < g.order(); ++v) p.degrees[v] = g.degree(v);
  std::sort(p.degrees.begin(), p.degrees.end());
  if (!p.degrees.empty()) {
    p.min_degree = p.degrees.front();
    p.max_degree = p.degrees.back();
  }
  p.regular = p.min_degree == p.max_degree;
  return p;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == g.order();
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  std::vector<Vertex> stack;
  for (int s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

Graph complement(const Graph& g) {
  std::vector<Edge> out;
  const int n = g.order();
  out.reserve(static_cast<size_t>(n) * (n - 1) / 2 - g.size());
  for (int u = 0; u < n; ++u) {
    auto nb = g.neighbors(u);
    auto it = std::upper_bound(nb.begin(), nb.end(), u);
    for (int v = u + 1; v < n; ++v) {
      if (it != nb.end() && *it == v) {
        ++it;
        continue;
      }
      out.emplace_back(u, v);
    }
  }
  return Graph(n, out);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> out(a.edges());
  const int shift = a.order();
  for (auto [u, v] : b.edges()) out.emplace_back(u + shift, v + shift);
  return Graph(a.order() + b.order(), out);
}

Graph subdivide_edge(const Graph& g, Edge e, int k) {
  if (k < 1) throw GraphError("subdivision count must be at least 1");
  Vertex u = std::min(e.first, e.second), v = std::max(e.first, e.second);
  if (!g.has_edge(u, v))
    throw GraphError("(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
  std::vector<Edge> out;
  out.reserve(g.size() + k);
  for (const Edge& f : g.edges())
    if (f != Edge{u, v}) out.push_back(f);
  Vertex prev = u;
  for (int s = 0; s < k; ++s) {
    out.emplace_back(prev, g.order() + s);
    prev = g.order() + s;
  }
  out.emplace_back(prev, v);
  return Graph(g.order() + k, out);
}

Coalescence coalesce(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2) {
  if (v1 < 0 || v1 >= g1.order()) throw GraphError("coalesce: first root out of range");
  if (v2 < 0 || v2 >= g2.order()) throw GraphError("coalesce: second root out of range");
  Coalescence c;
  c.first_map.resize(g1.order());
  std::iota(c.first_map.begin(), c.first_map.end(), 0);
  c.second_map.resize(g2.order());
  int next = g1.order();
  for (int w = 0; w < g2.order(); ++w) c.second_map[w] = (w == v2) ? v1 : next++;
  std::vector<Edge> out(g1.edges());
  out.reserve(g1.size() + g2.size());
  for (auto [a, b] : g2.edges()) out.emplace_back(c.second_map[a], c.second_map[b]);
  c.graph = Graph(next, out);
  return c;
}

std::string VertexTag::name() const {
  switch (role) {
    case Role::host:
      return "h" + std::to_string(i);
    case Role::triangle:
      return "t" + std::to_string(i) + "^(" + std::to_string(j) + "," + std::to_string(k) + ")";
    case Role::gadget_interior:
      return "g" + std::to_string(i) + "^(" + std::to_string(j) + "," + std::to_string(k) + ")";
    case Role::gadget_apex:
      return "w" + std::to_string(i) + "^(" + std::to_string(j) + "," + std::to_string(k) + ")";
    case Role::subdivision:
      return "s" + std::to_string(i);
  }
  return "?";
}

}  // namespace nut
