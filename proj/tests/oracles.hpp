#pragma once

// Independent reference implementations used to cross-check the library.
// They are deliberately naive: brute force over permutations, rational
// arithmetic, labelled enumeration.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "nutgraph/graph.hpp"

namespace oracle {

using nut::Edge;
using nut::Graph;

inline std::vector<std::vector<char>> matrix(const Graph& g) {
  std::vector<std::vector<char>> a(g.order(), std::vector<char>(g.order(), 0));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
  return a;
}

// Number of permutations preserving adjacency.
inline std::uint64_t aut_order(const Graph& g) {
  const int n = g.order();
  const auto a = matrix(g);
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (auto [u, v] : g.edges())
      if (!a[p[u]][p[v]]) {
        ok = false;
        break;
      }
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

// Rank deficiency of A(G) by Gauss-Jordan over the rationals.
inline int nullity(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n, 0));
  for (auto [u, v] : g.edges()) m[u][v] = m[v][u] = 1;
  int rank = 0;
  for (int c = 0; c < n; ++c) {
    int r = rank;
    while (r < n && m[r][c] == 0) ++r;
    if (r == n) continue;
    std::swap(m[r], m[rank]);
    const mpq_class inv = 1 / m[rank][c];
    for (auto& x : m[rank]) x *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == rank || m[i][c] == 0) continue;
      const mpq_class f = m[i][c];
      for (int j = 0; j < n; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return n - rank;
}

// Minimum adjacency bit string over all relabellings.
inline std::uint64_t brute_code(int n, std::uint32_t mask, const std::vector<Edge>& slots) {
  std::vector<std::vector<char>> a(n, std::vector<char>(n, 0));
  for (size_t k = 0; k < slots.size(); ++k)
    if (mask >> k & 1) a[slots[k].first][slots[k].second] = a[slots[k].second][slots[k].first] = 1;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t best = ~0ULL;
  do {
    std::uint64_t code = 0;
    for (const Edge& e : slots) code = code << 1 | a[p[e.first]][p[e.second]];
    best = std::min(best, code);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

inline std::vector<Edge> all_slots(int n) {
  std::vector<Edge> slots;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) slots.emplace_back(u, v);
  return slots;
}

inline Graph from_mask(int n, std::uint32_t mask, const std::vector<Edge>& slots) {
  std::vector<Edge> edges;
  for (size_t k = 0; k < slots.size(); ++k)
    if (mask >> k & 1) edges.push_back(slots[k]);
  return Graph(n, edges);
}

struct ClassCounts {
  std::uint64_t all = 0;
  std::uint64_t connected = 0;
};

// Isomorphism classes by filtering all labelled graphs on n vertices.
inline ClassCounts labelled_filter(int n) {
  const auto slots = all_slots(n);
  std::set<std::uint64_t> all, connected;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    const std::uint64_t code = brute_code(n, mask, slots);
    if (!all.insert(code).second) continue;
    if (nut::is_connected(from_mask(n, mask, slots))) connected.insert(code);
  }
  return {all.size(), connected.size()};
}

// One representative per class for n <= 6, for pairwise checks.
inline std::vector<Graph> class_representatives(int n) {
  const auto slots = all_slots(n);
  std::set<std::uint64_t> seen;
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask)
    if (seen.insert(brute_code(n, mask, slots)).second) out.push_back(from_mask(n, mask, slots));
  return out;
}

inline bool brute_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  const int n = a.order();
  const auto mb = matrix(b);
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (auto [u, v] : a.edges())
      if (!mb[p[u]][p[v]]) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline Graph random_graph(int n, double density, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (static_cast<double>(rng() % 1000) < density * 1000) edges.emplace_back(u, v);
  return Graph(n, edges);
}

inline Graph random_relabel(const Graph& g, std::mt19937_64& rng) {
  std::vector<int> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return g.relabeled(p);
}

}  // namespace oracle
