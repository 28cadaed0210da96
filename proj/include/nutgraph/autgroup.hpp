#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nutgraph/graph.hpp"
#include "nutgraph/permgroup.hpp"

namespace nut {

// Cooperative cancellation for long searches.
struct CancelToken {
  std::optional<std::chrono::steady_clock::time_point> deadline;
  const std::atomic<bool>* flag = nullptr;

  bool expired() const {
    if (flag && flag->load(std::memory_order_relaxed)) return true;
    return deadline && std::chrono::steady_clock::now() >= *deadline;
  }
};

class SearchCancelled : public std::runtime_error {
 public:
  SearchCancelled() : std::runtime_error("automorphism search cancelled") {}
};

using OrderedPartition = std::vector<std::vector<Vertex>>;

// Coarsest equitable refinement of `p` under neighbour counting.  Cells of
// the result are listed in order; a cell that splits is replaced in place by
// its fragments, ordered by increasing neighbour count.
OrderedPartition refine_partition(const Graph& g, const OrderedPartition& p);

struct CanonicalCode {
  std::string code;              // graph6 of the canonically relabelled graph
  std::vector<Vertex> labeling;  // vertex v goes to position labeling[v]

  friend bool operator==(const CanonicalCode& a, const CanonicalCode& b) { return a.code == b.code; }
  friend bool operator<(const CanonicalCode& a, const CanonicalCode& b) { return a.code < b.code; }
};

// Everything one pass of the individualisation-refinement search produces.
struct AutomorphismSearch {
  std::vector<Permutation> generators;  // generate Aut(G)
  std::vector<Vertex> base;             // individualised vertices of the first path
  std::vector<int> orbit_rep;           // least vertex of each vertex's orbit
  std::vector<Vertex> labeling;         // canonical position of each vertex
  BigInt order = 1;                     // |Aut(G)| from the stabiliser chain
  std::uint64_t nodes = 0;              // search tree nodes visited

  PermGroup group(int degree) const { return PermGroup(degree, generators, base); }
};

// `colors`, when given, assigns each vertex a colour; automorphisms must
// preserve colours and the canonical form depends on them.
AutomorphismSearch search_automorphisms(const Graph& g, const std::vector<int>* colors = nullptr,
                                        const CancelToken* cancel = nullptr);

PermGroup automorphism_group(const Graph& g, const CancelToken* cancel = nullptr);
CanonicalCode canonical_form(const Graph& g, const CancelToken* cancel = nullptr);
bool are_isomorphic(const Graph& a, const Graph& b);

// Whether `p` maps edges to edges.
bool is_automorphism(const Graph& g, const Permutation& p);

}  // namespace nut
