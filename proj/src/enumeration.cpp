#include "nutgraph/enumeration.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "nutgraph/codec.hpp"
#include "nutgraph/kernel.hpp"

namespace nut {

namespace {

constexpr int kMaxOrder = 32;
using Row = std::uint32_t;

struct Node {
  int n = 0;
  std::array<Row, kMaxOrder> adj{};
  std::vector<Permutation> gens;  // automorphism group generators
};

Graph to_graph(const Node& node) {
  std::vector<Edge> edges;
  for (int u = 0; u < node.n; ++u) {
    Row higher = node.adj[u] >> (u + 1);
    while (higher) {
      int v = u + 1 + std::countr_zero(higher);
      edges.emplace_back(u, v);
      higher &= higher - 1;
    }
  }
  return Graph(node.n, edges);
}

// Isomorphism-invariant vertex score; the canonical deletion vertex is
// chosen among the vertices of maximum score.
inline std::uint64_t score(const Node& g, int x) {
  std::uint64_t tri = 0, quad = 0;
  const Row nb = g.adj[x];
  Row it = nb;
  while (it) {
    int y = std::countr_zero(it);
    tri += std::popcount(g.adj[y] & nb);
    it &= it - 1;
  }
  for (int w = 0; w < g.n; ++w) {
    if (w == x) continue;
    std::uint64_t c = std::popcount(g.adj[w] & nb);
    quad += c * (c - 1) / 2;
  }
  return static_cast<std::uint64_t>(std::popcount(nb)) << 48 | tri << 24 | quad;
}

struct Shape {
  int target = 0;
  int degree = -1;  // -1: unbounded
};

class Augmenter {
 public:
  Augmenter(Shape shape, const CancelToken* cancel) : shape_(shape), cancel_(cancel) {}

  // Children of `node` that pass the canonical-deletion test.  Generators
  // are filled in unless the child has the target order.
  void children(const Node& node, std::vector<Node>& out) {
    if (cancel_ && cancel_->expired()) throw SearchCancelled();
    const int k = node.n;
    masks_.clear();
    admissible_masks(node);
    if (masks_.empty()) return;
    if (!node.gens.empty()) prune_by_orbits(node);

    const bool final_level = k + 1 == shape_.target;
    for (Row s : masks_) {
      Node child;
      child.n = k + 1;
      child.adj = node.adj;
      child.adj[k] = s;
      Row it = s;
      while (it) {
        int x = std::countr_zero(it);
        child.adj[x] |= Row{1} << k;
        it &= it - 1;
      }
      // The new vertex must have maximum degree; full scores only for ties.
      const int dk = std::popcount(s);
      bool beaten = false;
      Row top = 0;
      for (int x = 0; x < k; ++x) {
        const int dx = std::popcount(child.adj[x]);
        if (dx > dk) {
          beaten = true;
          break;
        }
        if (dx == dk) top |= Row{1} << x;
      }
      if (beaten) continue;
      std::array<std::uint64_t, kMaxOrder> sc{};
      const std::uint64_t mine = sc[k] = score(child, k);
      int ties = 1;
      for (Row it2 = top; it2; it2 &= it2 - 1) {
        const int x = std::countr_zero(it2);
        sc[x] = score(child, x);
        if (sc[x] > mine) {
          beaten = true;
          break;
        }
        if (sc[x] == mine) ++ties;
      }
      if (beaten) continue;
      const std::uint64_t best = mine;
      if (ties == 1) {
        if (!final_level) child.gens = search_automorphisms(to_graph(child)).generators;
        out.push_back(std::move(child));
        continue;
      }
      AutomorphismSearch as = search_automorphisms(to_graph(child));
      int chosen = -1;
      for (int x = 0; x <= k; ++x)
        if (sc[x] == best && (chosen < 0 || as.labeling[x] > as.labeling[chosen])) chosen = x;
      if (as.orbit_rep[chosen] != as.orbit_rep[k]) continue;
      if (!final_level) child.gens = std::move(as.generators);
      out.push_back(std::move(child));
    }
  }

 private:
  void admissible_masks(const Node& node) {
    const int k = node.n;
    if (shape_.degree < 0) {
      int max_deg = 0;
      for (int x = 0; x < k; ++x) max_deg = std::max(max_deg, std::popcount(node.adj[x]));
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << k); ++s)
        if (std::popcount(s) >= max_deg) masks_.push_back(static_cast<Row>(s));
      return;
    }
    const int d = shape_.degree;
    const int r = shape_.target - (k + 1);  // vertices still to come after the child
    std::array<int, kMaxOrder> deficit{};
    int total = 0;
    Row open = 0;
    for (int x = 0; x < k; ++x) {
      deficit[x] = d - std::popcount(node.adj[x]);
      total += deficit[x];
      if (deficit[x] > 0) open |= Row{1} << x;
    }
    // Each old vertex loses at most one unit of deficit, so any vertex with
    // deficit > r + 1 already rules out every child.
    for (int x = 0; x < k; ++x)
      if (deficit[x] > r + 1) return;
    int max_deg = 0;
    for (int x = 0; x < k; ++x) max_deg = std::max(max_deg, d - deficit[x]);
    // The new vertex must end with maximum degree.
    const int min_size = std::max({0, d - r, max_deg});
    // Vertices whose deficit is r + 1 must be joined to the new vertex.
    Row forced = 0;
    for (int x = 0; x < k; ++x)
      if (deficit[x] == r + 1) forced |= Row{1} << x;
    if (std::popcount(forced) > d) return;
    std::vector<int> free;
    for (int x = 0; x < k; ++x)
      if ((open >> x & 1) && !(forced >> x & 1)) free.push_back(x);

    auto feasible = [&](Row s) {
      const int size = std::popcount(s);
      if (size < min_size || size > d) return false;
      // Remaining deficit after the child is formed.
      const int D = total - size + (d - size);
      if (r == 0) return D == 0;
      const int slack = d * r - D;  // twice the edges among future vertices
      return slack >= 0 && slack % 2 == 0 && slack <= r * (r - 1);
    };

    // Enumerate supersets of `forced` drawn from `free`, size <= d.
    const int room = d - std::popcount(forced);
    std::vector<int> pick;
    auto rec = [&](auto&& self, size_t from, Row s, int left) -> void {
      if (feasible(s)) masks_.push_back(s);
      if (left == 0) return;
      for (size_t i = from; i < free.size(); ++i) self(self, i + 1, s | Row{1} << free[i], left - 1);
    };
    rec(rec, 0, forced, room);
    std::sort(masks_.begin(), masks_.end());
  }

  void prune_by_orbits(const Node& node) {
    const int k = node.n;
    std::sort(masks_.begin(), masks_.end());
    std::vector<int> parent(masks_.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Permutation& g : node.gens) {
      for (size_t i = 0; i < masks_.size(); ++i) {
        Row img = 0, it = masks_[i];
        while (it) {
          img |= Row{1} << g[std::countr_zero(it)];
          it &= it - 1;
        }
        (void)k;
        auto pos = std::lower_bound(masks_.begin(), masks_.end(), img);
        int j = static_cast<int>(pos - masks_.begin());
        int a = find(static_cast<int>(i)), b = find(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    std::vector<Row> reps;
    for (size_t i = 0; i < masks_.size(); ++i)
      if (find(static_cast<int>(i)) == static_cast<int>(i)) reps.push_back(masks_[i]);
    masks_.swap(reps);
  }

  Shape shape_;
  const CancelToken* cancel_;
  std::vector<Row> masks_;
};

void dfs(Augmenter& aug, const Node& node, int target, const std::function<void(const Node&)>& leaf) {
  if (node.n == target) {
    leaf(node);
    return;
  }
  std::vector<Node> kids;
  aug.children(node, kids);
  for (const Node& c : kids) dfs(aug, c, target, leaf);
}

// Runs the generation tree, splitting it into shards at the first level
// with enough nodes for `jobs` workers.
void run_tree(Shape shape, const EnumerationOptions& opts,
              const std::function<void(int shard, const Node&)>& leaf, int& shard_count) {
  const int jobs = std::max(1, opts.jobs);
  Augmenter root_aug(shape, opts.cancel);
  std::vector<Node> frontier(1);
  if (jobs > 1) {
    while (!frontier.empty() && frontier.front().n < shape.target - 1 &&
           static_cast<int>(frontier.size()) < 8 * jobs) {
      std::vector<Node> next;
      for (const Node& nd : frontier) root_aug.children(nd, next);
      frontier.swap(next);
    }
  }
  shard_count = jobs;
  if (jobs == 1) {
    Augmenter aug(shape, opts.cancel);
    for (const Node& nd : frontier) dfs(aug, nd, shape.target, [&](const Node& x) { leaf(0, x); });
    return;
  }
  std::atomic<size_t> next_index{0};
  std::vector<std::thread> workers;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        Augmenter aug(shape, opts.cancel);
        for (size_t i = next_index++; i < frontier.size(); i = next_index++)
          dfs(aug, frontier[i], shape.target, [&](const Node& x) { leaf(w, x); });
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  if (failure) std::rethrow_exception(failure);
}

void check_order(int n, int ceiling) {
  if (n < 1) throw EnumerationError("order must be at least 1");
  if (n > ceiling)
    throw EnumerationError("order " + std::to_string(n) + " exceeds the configured ceiling " +
                           std::to_string(ceiling));
  if (n > kMaxOrder) throw EnumerationError("order above the generator's hard limit");
}

void check_regular(int n, int d) {
  if (d < 0 || d >= n) throw EnumerationError("degree must satisfy 0 <= d < n");
  if ((n * d) % 2) throw EnumerationError("n*d must be even");
}

std::vector<Graph> collect(Shape shape, bool connected_only, const EnumerationOptions& opts) {
  std::vector<std::vector<std::pair<std::string, Graph>>> shards(std::max(1, opts.jobs));
  int count = 0;
  run_tree(shape, opts,
           [&](int shard, const Node& node) {
             Graph g = to_graph(node);
             if (connected_only && !is_connected(g)) return;
             CanonicalCode c = canonical_form(g);
             shards[shard].emplace_back(c.code, std::move(g));
           },
           count);
  std::vector<std::pair<std::string, Graph>> all;
  for (auto& s : shards)
    for (auto& e : s) all.push_back(std::move(e));
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  out.reserve(all.size());
  for (auto& e : all) out.push_back(std::move(e.second));
  return out;
}

}  // namespace

void for_each_graph(int n, bool connected_only, const GraphVisitor& visit, const EnumerationOptions& opts) {
  check_order(n, opts.ceiling);
  Augmenter aug({n, -1}, opts.cancel);
  dfs(aug, Node{}, n, [&](const Node& node) {
    Graph g = to_graph(node);
    if (!connected_only || is_connected(g)) visit(g);
  });
}

std::vector<Graph> enumerate_graphs(int n, bool connected_only, const EnumerationOptions& opts) {
  check_order(n, opts.ceiling);
  return collect({n, -1}, connected_only, opts);
}

void for_each_regular(int n, int d, const GraphVisitor& visit, const EnumerationOptions& opts) {
  check_order(n, std::max(opts.ceiling, kDefaultRegularCeiling));
  check_regular(n, d);
  Augmenter aug({n, d}, opts.cancel);
  dfs(aug, Node{}, n, [&](const Node& node) {
    Graph g = to_graph(node);
    if (is_connected(g)) visit(g);
  });
}

std::vector<Graph> enumerate_regular(int n, int d, const EnumerationOptions& opts) {
  check_order(n, std::max(opts.ceiling, kDefaultRegularCeiling));
  check_regular(n, d);
  return collect({n, d}, true, opts);
}

std::uint64_t count_graphs(int n, bool connected_only, const std::function<bool(const Graph&)>& pred,
                           const EnumerationOptions& opts) {
  check_order(n, opts.ceiling);
  std::vector<std::uint64_t> counts(std::max(1, opts.jobs), 0);
  int shards = 0;
  run_tree({n, -1}, opts,
           [&](int shard, const Node& node) {
             Graph g = to_graph(node);
             if (connected_only && !is_connected(g)) return;
             if (pred(g)) ++counts[shard];
           },
           shards);
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  return total;
}

std::vector<CensusResult> census_nuts(int max_n, const EnumerationOptions& opts, bool keep_witnesses) {
  std::vector<CensusResult> out;
  for (int n = 1; n <= max_n; ++n) {
    check_order(n, opts.ceiling);
    CensusResult r;
    r.n = n;
    r.filter = "nut";
    std::vector<std::vector<std::string>> found(std::max(1, opts.jobs));
    std::vector<std::uint64_t> counts(found.size(), 0);
    int shards = 0;
    run_tree({n, -1}, opts,
             [&](int shard, const Node& node) {
               Graph g = to_graph(node);
               if (!nut_certificate(g).is_nut) return;
               ++counts[shard];
               if (keep_witnesses) found[shard].push_back(canonical_form(g).code);
             },
             shards);
    for (size_t s = 0; s < found.size(); ++s) {
      r.count += counts[s];
      for (auto& w : found[s]) r.witnesses.push_back(std::move(w));
    }
    std::sort(r.witnesses.begin(), r.witnesses.end());
    out.push_back(std::move(r));
  }
  return out;
}

MinimalityResult minimal_order_for_group(const PermGroup& target, MinimalityPredicate predicate, int max_n,
                                         int degree, const EnumerationOptions& opts) {
  if (target.order() > BigInt(std::to_string(kIsomorphismOrderBound)))
    throw EnumerationError("target group order exceeds the isomorphism-test bound");
  MinimalityResult res;
  res.predicate = predicate;
  res.degree = predicate == MinimalityPredicate::nut ? 0 : degree;
  const BigInt want = target.order();
  std::mutex m;

  for (int n = 1; n <= max_n; ++n) {
    res.searched_up_to = n;
    std::vector<Graph> hits;
    auto consider = [&](const Graph& g) {
      if (predicate != MinimalityPredicate::regular && !nut_certificate(g).is_nut) return;
      AutomorphismSearch as = search_automorphisms(g, nullptr, opts.cancel);
      if (as.order != want) return;
      if (groups_isomorphic(as.group(g.order()), target) != IsoVerdict::isomorphic) return;
      std::lock_guard lock(m);
      hits.push_back(g);
    };
    if (predicate == MinimalityPredicate::nut) {
      EnumerationOptions o = opts;
      o.ceiling = std::max(opts.ceiling, max_n);
      for (Graph& g : enumerate_graphs(n, true, o)) consider(g);
    } else {
      if (degree >= n || (n * degree) % 2) continue;
      EnumerationOptions o = opts;
      o.ceiling = std::max(opts.ceiling, max_n);
      for (Graph& g : enumerate_regular(n, degree, o)) consider(g);
    }
    if (!hits.empty()) {
      res.min_order = n;
      res.candidate_count = hits.size();
      res.witnesses = std::move(hits);
      return res;
    }
  }
  return res;
}

}  // namespace nut
