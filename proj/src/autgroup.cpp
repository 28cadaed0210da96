#include "nutgraph/autgroup.hpp"

#include <algorithm>
#include <numeric>

#include "nutgraph/codec.hpp"

namespace nut {

namespace {

inline std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= h >> 31;
  h *= 0xbf58476d1ce4e5b9ULL;
  return h ^ (h >> 27);
}

// Ordered partition stored nauty-style: cells are contiguous ranges of
// `lab`, identified by their start position.
struct Partition {
  std::vector<int> lab;   // position -> vertex
  std::vector<int> pos;   // vertex -> position
  std::vector<int> cell;  // vertex -> start of its cell
  std::vector<int> size;  // start -> size (valid at cell starts only)
  int cells = 0;

  explicit Partition(int n) : lab(n), pos(n), cell(n, 0), size(n, 0) {}

  bool discrete() const { return cells == static_cast<int>(lab.size()); }

  std::vector<int> starts() const {
    std::vector<int> s;
    for (int i = 0; i < static_cast<int>(lab.size()); i += size[i]) s.push_back(i);
    return s;
  }
};

// Refinement workspace reused across calls.
class Refiner {
 public:
  explicit Refiner(const Graph& g)
      : g_(g), count_(g.order(), 0), in_queue_(g.order(), 0), touched_cell_(g.order(), 0) {}

  // Refines `p` to the coarsest equitable partition reachable from the
  // splitters already queued; returns a trace hash of the splitting events.
  std::uint64_t refine(Partition& p, std::vector<int>& queue) {
    const int n = g_.order();
    std::uint64_t h = 0x51ed27ULL;
    for (int s : queue) in_queue_[s] = 1;
    size_t head = 0;
    while (head < queue.size() && p.cells < n) {
      const int s = queue[head++];
      in_queue_[s] = 0;
      const int sz = p.size[s];
      touched_.clear();
      tcells_.clear();
      for (int i = s; i < s + sz; ++i) {
        for (Vertex u : g_.neighbors(p.lab[i])) {
          if (count_[u]++ == 0) touched_.push_back(u);
          const int c = p.cell[u];
          if (!touched_cell_[c]) {
            touched_cell_[c] = 1;
            tcells_.push_back(c);
          }
        }
      }
      std::sort(tcells_.begin(), tcells_.end());
      h = mix(h, static_cast<std::uint64_t>(s) << 20 | static_cast<std::uint64_t>(tcells_.size()));
      for (int c : tcells_) {
        touched_cell_[c] = 0;
        const int csz = p.size[c];
        if (csz == 1) {
          h = mix(h, static_cast<std::uint64_t>(c) << 16 | count_[p.lab[c]]);
          continue;
        }
        auto begin = p.lab.begin() + c, end = begin + csz;
        const int first = count_[*begin];
        bool uniform = std::all_of(begin, end, [&](int v) { return count_[v] == first; });
        if (uniform) {
          h = mix(h, static_cast<std::uint64_t>(c) << 16 | first);
          continue;
        }
        std::sort(begin, end, [&](int a, int b) { return count_[a] < count_[b]; });
        const bool was_queued = in_queue_[c];
        int largest = -1, largest_size = 0;
        frags_.clear();
        for (int i = c; i < c + csz;) {
          int j = i;
          const int key = count_[p.lab[i]];
          while (j < c + csz && count_[p.lab[j]] == key) ++j;
          for (int k = i; k < j; ++k) {
            p.cell[p.lab[k]] = i;
            p.pos[p.lab[k]] = k;
          }
          p.size[i] = j - i;
          frags_.push_back(i);
          h = mix(h, static_cast<std::uint64_t>(i) << 24 | static_cast<std::uint64_t>(key) << 12 |
                         static_cast<std::uint64_t>(j - i));
          if (j - i > largest_size) {
            largest_size = j - i;
            largest = i;
          }
          i = j;
        }
        p.cells += static_cast<int>(frags_.size()) - 1;
        for (int f : frags_) {
          if (was_queued ? f != c : f != largest) {
            if (!in_queue_[f]) {
              in_queue_[f] = 1;
              queue.push_back(f);
            }
          }
        }
      }
      for (Vertex u : touched_) count_[u] = 0;
    }
    for (size_t i = head; i < queue.size(); ++i) in_queue_[queue[i]] = 0;
    queue.clear();
    return mix(h, static_cast<std::uint64_t>(p.cells));
  }

 private:
  const Graph& g_;
  std::vector<int> count_;
  std::vector<char> in_queue_;
  std::vector<char> touched_cell_;
  std::vector<int> touched_, tcells_, frags_;
};

Partition initial_partition(const Graph& g, const std::vector<int>* colors, std::vector<int>& queue) {
  const int n = g.order();
  Partition p(n);
  std::iota(p.lab.begin(), p.lab.end(), 0);
  if (colors) {
    std::stable_sort(p.lab.begin(), p.lab.end(),
                     [&](int a, int b) { return (*colors)[a] < (*colors)[b]; });
  }
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && (!colors || (*colors)[p.lab[j]] == (*colors)[p.lab[i]])) ++j;
    for (int k = i; k < j; ++k) {
      p.cell[p.lab[k]] = i;
      p.pos[p.lab[k]] = k;
    }
    p.size[i] = j - i;
    ++p.cells;
    queue.push_back(i);
    i = j;
  }
  return p;
}

void individualize(Partition& p, Vertex v, std::vector<int>& queue) {
  const int c = p.cell[v];
  const int sz = p.size[c];
  const int at = p.pos[v];
  std::swap(p.lab[c], p.lab[at]);
  p.pos[p.lab[at]] = at;
  p.pos[v] = c;
  p.size[c] = 1;
  p.size[c + 1] = sz - 1;
  for (int k = c + 1; k < c + sz; ++k) p.cell[p.lab[k]] = c + 1;
  ++p.cells;
  queue.push_back(c);
}

int target_cell(const Partition& p) {
  int best = -1, best_size = 0;
  const int n = static_cast<int>(p.lab.size());
  for (int i = 0; i < n; i += p.size[i]) {
    if (p.size[i] > 1 && (best < 0 || p.size[i] < best_size)) {
      best = i;
      best_size = p.size[i];
    }
  }
  return best;
}

struct TraceEntry {
  int cells;
  std::uint64_t hash;
  friend auto operator<=>(const TraceEntry&, const TraceEntry&) = default;
};

enum class Cmp { less, equal, greater };

class Search {
 public:
  Search(const Graph& g, const CancelToken* cancel)
      : g_(g), n_(g.order()), refiner_(g), cancel_(cancel) {}

  AutomorphismSearch run(const std::vector<int>* colors) {
    AutomorphismSearch out;
    std::vector<int> queue;
    Partition root = initial_partition(g_, colors, queue);
    std::uint64_t h = refiner_.refine(root, queue);
    std::vector<TraceEntry> trace{{root.cells, h}};
    path_.clear();
    cmp_.assign(1, Cmp::equal);
    dfs(root, trace, /*first_path=*/true, /*eq_first=*/true);

    out.generators = generators_;
    out.base = first_path_;
    out.labeling = best_labeling_;
    out.order = order_;
    out.nodes = nodes_;
    out.orbit_rep = orbit_reps(generators_, {});
    return out;
  }

 private:
  std::vector<std::uint64_t> certificate(const Partition& p) const {
    std::vector<std::uint64_t> cert;
    if (n_ <= 64) {
      cert.assign(n_, 0);
      for (int i = 0; i < n_; ++i)
        for (Vertex u : g_.neighbors(p.lab[i])) cert[i] |= 1ULL << p.pos[u];
    } else {
      cert.reserve(g_.size());
      for (auto [a, b] : g_.edges()) {
        std::uint64_t x = static_cast<std::uint64_t>(p.pos[a]), y = static_cast<std::uint64_t>(p.pos[b]);
        if (x > y) std::swap(x, y);
        cert.push_back(x << 32 | y);
      }
      std::sort(cert.begin(), cert.end());
    }
    return cert;
  }

  std::vector<int> orbit_reps(const std::vector<Permutation>& gens, const std::vector<Vertex>& fixed) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Permutation& g : gens) {
      bool fixes = std::all_of(fixed.begin(), fixed.end(), [&](Vertex v) { return g[v] == v; });
      if (!fixes) continue;
      for (int x = 0; x < n_; ++x) {
        int a = find(x), b = find(g[x]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int x = 0; x < n_; ++x) parent[x] = find(x);
    return parent;
  }

  void add_generator(const Partition& from, const Partition& to) {
    std::vector<int> img(n_);
    for (int i = 0; i < n_; ++i) img[from.lab[i]] = to.lab[i];
    Permutation p(std::move(img));
    if (p.is_identity()) return;
    if (std::find(generators_.begin(), generators_.end(), p) != generators_.end()) return;
    generators_.push_back(std::move(p));
  }

  // Returns the depth to unwind to, or -1 to continue normally.
  int dfs(const Partition& p, std::vector<TraceEntry>& trace, bool first_path, bool eq_first) {
    ++nodes_;
    if ((nodes_ & 255) == 1 && cancel_ && cancel_->expired()) throw SearchCancelled();
    const int depth = static_cast<int>(path_.size());

    if (p.discrete()) return leaf(p, trace, first_path, eq_first);

    const int tc = target_cell(p);
    const int tsize = p.size[tc];
    std::vector<int> cell(p.lab.begin() + tc, p.lab.begin() + tc + tsize);
    std::sort(cell.begin(), cell.end());

    std::vector<int> reps;
    size_t gens_seen = static_cast<size_t>(-1);
    std::vector<int> queue;
    for (int idx = 0; idx < tsize; ++idx) {
      const Vertex v = cell[idx];
      if (gens_seen != generators_.size()) {
        reps = orbit_reps(generators_, path_);
        gens_seen = generators_.size();
      }
      if (reps[v] != v) continue;

      Partition child = p;
      individualize(child, v, queue);
      const std::uint64_t h = refiner_.refine(child, queue);
      const TraceEntry te{child.cells, h};
      const bool child_first = first_path && idx == 0;
      bool child_eq_first = child_first ||
                            (eq_first && first_path_traces_.size() > static_cast<size_t>(depth + 1) &&
                             first_path_traces_[depth + 1] == te);
      Cmp child_cmp = cmp_[depth];
      if (child_cmp == Cmp::equal && !child_first) {
        if (best_traces_.size() <= static_cast<size_t>(depth + 1)) {
          child_cmp = Cmp::greater;
        } else {
          const TraceEntry& bt = best_traces_[depth + 1];
          child_cmp = te < bt ? Cmp::less : (bt < te ? Cmp::greater : Cmp::equal);
        }
      }
      if (!child_first && !child_eq_first && child_cmp == Cmp::less) continue;
      if (cmp_.size() <= static_cast<size_t>(depth + 1)) cmp_.resize(depth + 2);
      cmp_[depth + 1] = child_cmp;

      trace.push_back(te);
      path_.push_back(v);
      if (child_first) {
        first_path_.push_back(v);
      }
      const int unwind = dfs(child, trace, child_first, child_eq_first);
      path_.pop_back();
      trace.pop_back();
      if (unwind >= 0 && unwind < depth) return unwind;
    }

    if (first_path) {
      // Every automorphism fixing the first `depth` base points is now
      // generated; multiply in the orbit length of the next base point.
      const Vertex next = first_path_[depth];
      reps = orbit_reps(generators_, path_);
      const int rep = reps[next];
      unsigned long len = 0;
      for (int x = 0; x < n_; ++x)
        if (reps[x] == rep) ++len;
      order_ *= len;
    }
    return -1;
  }

  int leaf(const Partition& p, const std::vector<TraceEntry>& trace, bool first_path, bool eq_first) {
    const int depth = static_cast<int>(path_.size());
    const Cmp cmp = cmp_[depth];
    std::vector<std::uint64_t> cert = certificate(p);
    if (first_path) {
      first_leaf_ = p;
      first_cert_ = cert;
      first_path_traces_ = trace;
      best_leaf_ = p;
      best_cert_ = std::move(cert);
      best_traces_ = trace;
      set_best_labeling();
      return -1;
    }
    if (eq_first && cert == first_cert_) {
      add_generator(*first_leaf_, p);
      // The automorphism maps the first path onto this one, so the subtree
      // hanging off the first-path node where they diverge is covered.
      int common = 0;
      while (common < depth && common < static_cast<int>(first_path_.size()) &&
             path_[common] == first_path_[common])
        ++common;
      return common;
    }
    if (cmp == Cmp::greater || (cmp == Cmp::equal && cert > best_cert_)) {
      best_leaf_ = p;
      best_cert_ = std::move(cert);
      best_traces_ = trace;
      set_best_labeling();
      // The current path is now the best path.
      std::fill(cmp_.begin(), cmp_.begin() + depth + 1, Cmp::equal);
      return -1;
    }
    if (cmp == Cmp::equal && cert == best_cert_) add_generator(*best_leaf_, p);
    return -1;
  }

  void set_best_labeling() {
    best_labeling_ = best_leaf_->pos;
  }

  const Graph& g_;
  int n_;
  Refiner refiner_;
  const CancelToken* cancel_;

  std::vector<Vertex> path_;
  std::vector<Cmp> cmp_;  // current path vs best path, per depth
  std::vector<Vertex> first_path_;
  std::vector<TraceEntry> first_path_traces_, best_traces_;
  std::optional<Partition> first_leaf_, best_leaf_;
  std::vector<std::uint64_t> first_cert_, best_cert_;
  std::vector<Vertex> best_labeling_;
  std::vector<Permutation> generators_;
  BigInt order_ = 1;
  std::uint64_t nodes_ = 0;
};

}  // namespace

OrderedPartition refine_partition(const Graph& g, const OrderedPartition& op) {
  const int n = g.order();
  std::vector<int> color(n, -1);
  for (size_t c = 0; c < op.size(); ++c)
    for (Vertex v : op[c]) {
      if (v < 0 || v >= n || color[v] >= 0) throw GraphError("refine_partition: not a partition");
      color[v] = static_cast<int>(c);
    }
  if (std::find(color.begin(), color.end(), -1) != color.end())
    throw GraphError("refine_partition: not a partition");
  std::vector<int> queue;
  Partition p = initial_partition(g, &color, queue);
  Refiner(g).refine(p, queue);
  OrderedPartition out;
  for (int s : p.starts()) {
    std::vector<Vertex> cell(p.lab.begin() + s, p.lab.begin() + s + p.size[s]);
    std::sort(cell.begin(), cell.end());
    out.push_back(std::move(cell));
  }
  return out;
}

AutomorphismSearch search_automorphisms(const Graph& g, const std::vector<int>* colors,
                                        const CancelToken* cancel) {
  if (colors && static_cast<int>(colors->size()) != g.order())
    throw GraphError("search_automorphisms: colour vector has wrong length");
  if (g.order() == 0) return {};
  Search s(g, cancel);
  return s.run(colors);
}

PermGroup automorphism_group(const Graph& g, const CancelToken* cancel) {
  return search_automorphisms(g, nullptr, cancel).group(g.order());
}

CanonicalCode canonical_form(const Graph& g, const CancelToken* cancel) {
  CanonicalCode c;
  if (g.order() == 0) {
    c.code = to_graph6(g);
    return c;
  }
  c.labeling = search_automorphisms(g, nullptr, cancel).labeling;
  c.code = to_graph6(g.relabeled(c.labeling));
  return c;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (degree_profile(a).degrees != degree_profile(b).degrees) return false;
  return canonical_form(a).code == canonical_form(b).code;
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.degree() != g.order()) return false;
  for (auto [u, v] : g.edges())
    if (!g.has_edge(p[u], p[v])) return false;
  return true;
}

}  // namespace nut
