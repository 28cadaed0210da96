#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nutgraph/autgroup.hpp"
#include "nutgraph/graph.hpp"
#include "nutgraph/permgroup.hpp"

namespace nut {

class EnumerationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kDefaultGraphCeiling = 10;
inline constexpr int kDefaultRegularCeiling = 14;

struct EnumerationOptions {
  int ceiling = kDefaultGraphCeiling;
  int jobs = 1;
  const CancelToken* cancel = nullptr;
};

using GraphVisitor = std::function<void(const Graph&)>;

// Isomorph-free generation by canonical vertex augmentation: each graph on
// k+1 vertices is produced from the unique representative of the graph left
// after deleting its canonical vertex, and subsets of neighbours are taken
// one per orbit of the parent's automorphism group.
//
// The streaming forms visit graphs in a fixed depth-first order on a single
// thread.  The collecting forms shard the tree over `jobs` threads and return
// representatives sorted by canonical code, so the result does not depend on
// the number of jobs.
void for_each_graph(int n, bool connected_only, const GraphVisitor& visit,
                    const EnumerationOptions& opts = {});
std::vector<Graph> enumerate_graphs(int n, bool connected_only, const EnumerationOptions& opts = {});

// Connected d-regular graphs.  Intermediate graphs are pruned by whether
// their degree deficits can still be met by the vertices yet to be added.
void for_each_regular(int n, int d, const GraphVisitor& visit, const EnumerationOptions& opts = {});
std::vector<Graph> enumerate_regular(int n, int d, const EnumerationOptions& opts = {});

// Count of classes satisfying `pred`, computed over `jobs` shards.
std::uint64_t count_graphs(int n, bool connected_only, const std::function<bool(const Graph&)>& pred,
                           const EnumerationOptions& opts = {});

struct CensusResult {
  int n = 0;
  std::string filter;  // "all", "connected", "regular(d)" or "nut"
  std::uint64_t count = 0;
  std::vector<std::string> witnesses;  // canonical graph6 codes, sorted
};

// Per-order counts of nut graphs among connected graphs of order 1..max_n.
std::vector<CensusResult> census_nuts(int max_n, const EnumerationOptions& opts = {},
                                      bool keep_witnesses = false);

enum class MinimalityPredicate { nut, regular, regular_nut };

struct MinimalityResult {
  MinimalityPredicate predicate = MinimalityPredicate::nut;
  int degree = 0;  // for the regular predicates
  std::optional<int> min_order;  // empty: not found up to max_n (open)
  int searched_up_to = 0;
  std::uint64_t candidate_count = 0;  // witnesses at min_order
  std::vector<Graph> witnesses;
};

// Scans orders 1..max_n ascending and stops at the first order with a graph
// satisfying the predicate whose automorphism group is isomorphic to
// `target`.  Throws if |target| exceeds the isomorphism bound.
MinimalityResult minimal_order_for_group(const PermGroup& target, MinimalityPredicate predicate,
                                         int max_n, int degree = 4, const EnumerationOptions& opts = {});

}  // namespace nut
