#include "nutgraph/gadgets.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "nutgraph/codec.hpp"
#include "nutgraph/kernel.hpp"

#ifndef NUTGRAPH_DATA_DIR
#define NUTGRAPH_DATA_DIR "data"
#endif

namespace nut {

std::string GadgetSpec::name() const {
  return kind == GadgetKind::q0 ? "q0" : "proto(" + std::to_string(d) + ")";
}

GadgetSpec GadgetSpec::parse(const std::string& text) {
  if (text == "q0") return {GadgetKind::q0, 0};
  if (text.starts_with("proto(") && text.ends_with(")")) {
    const std::string inner = text.substr(6, text.size() - 7);
    try {
      size_t used = 0;
      const int d = std::stoi(inner, &used);
      if (used == inner.size() && d > 0) return {GadgetKind::proto, d};
    } catch (const std::exception&) {
    }
  }
  throw GadgetError("unknown gadget spec '" + text + "'");
}

namespace {

bool fail(std::string* why, const std::string& text) {
  if (why) *why = text;
  return false;
}

// Lexicographically least (q1, q2), q1 < q2, of vertices moved by the
// involution and lying in different orbits.
std::optional<std::pair<Vertex, Vertex>> q0_roots(const PermGroup& aut) {
  if (aut.order() != 2) return std::nullopt;
  const Permutation& s = aut.generators().front();
  const int n = aut.degree();
  for (Vertex a = 0; a < n; ++a) {
    if (s[a] == a) continue;
    for (Vertex b = a + 1; b < n; ++b)
      if (s[b] != b && s[a] != b) return std::make_pair(a, b);
  }
  return std::nullopt;
}

}  // namespace

bool verify_gadget(const GadgetRecord& r, std::string* why) {
  const Graph& q = r.gadget;
  for (Vertex v : r.roots)
    if (v < 0 || v >= q.order()) return fail(why, "root out of range");
  if (!is_connected(q)) return fail(why, "gadget is disconnected");
  const NutCertificate cert = nut_certificate(q);
  if (!cert.is_nut) return fail(why, "gadget is not nut: " + cert.failure_text());
  const PermGroup aut = automorphism_group(q);

  if (r.spec.kind == GadgetKind::q0) {
    if (r.roots.size() != 2 || r.roots[0] == r.roots[1]) return fail(why, "q0 needs two distinct roots");
    if (aut.order() != 2) return fail(why, "|Aut| = " + aut.order().get_str() + ", expected 2");
    const auto orb = aut.orbit_of(r.roots[0]);
    if (std::find(orb.begin(), orb.end(), r.roots[1]) != orb.end())
      return fail(why, "roots lie in the same orbit");
    for (Vertex v : r.roots)
      if (aut.stabilizer(v).order() != 1) return fail(why, "root " + std::to_string(v) + " has a nontrivial stabiliser");
    return true;
  }

  const int d = r.spec.d;
  if (r.roots.size() != 1) return fail(why, "proto gadget needs exactly one apex root");
  const Vertex w = r.roots[0];
  for (Vertex v = 0; v < q.order(); ++v) {
    const int want = v == w ? d - 2 : d;
    if (q.degree(v) != want)
      return fail(why, "vertex " + std::to_string(v) + " has degree " + std::to_string(q.degree(v)) +
                           ", expected " + std::to_string(want));
  }
  if (aut.order() != 1) return fail(why, "|Aut| = " + aut.order().get_str() + ", expected 1");
  if (r.proto) {
    DerivedGadget dg;
    try {
      dg = derive_Q_from_P(*r.proto, d);
    } catch (const GadgetError& e) {
      return fail(why, e.what());
    }
    if (!(dg.q == q) || dg.apex != w) return fail(why, "stored gadget differs from the one derived from the proto");
  }
  return true;
}

std::vector<GadgetRecord> search_q0(int max_order, const EnumerationOptions& opts) {
  std::vector<std::pair<std::string, GadgetRecord>> found;
  EnumerationOptions o = opts;
  o.ceiling = std::max(o.ceiling, max_order);
  for (int n = 7; n <= max_order; ++n) {
    for (const Graph& g : enumerate_graphs(n, true, o)) {
      if (!nut_certificate(g).is_nut) continue;
      AutomorphismSearch as = search_automorphisms(g, nullptr, opts.cancel);
      if (as.order != 2) continue;
      Graph canon = g.relabeled(as.labeling);
      const PermGroup aut = automorphism_group(canon);
      auto roots = q0_roots(aut);
      if (!roots) continue;
      GadgetRecord r;
      r.gadget = canon;
      r.roots = {roots->first, roots->second};
      r.spec = {GadgetKind::q0, 0};
      r.provenance = "search_q0 exhaustive order=" + std::to_string(n);
      found.emplace_back(to_graph6(canon), std::move(r));
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<GadgetRecord> out;
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

DerivedGadget derive_Q_from_P(const Graph& p, int d) {
  const Graph c = complement(p);
  const int m = c.order();
  std::vector<Vertex> deficient;
  for (Vertex v = 0; v < m; ++v) {
    if (c.degree(v) == d - 1) {
      deficient.push_back(v);
    } else if (c.degree(v) != d) {
      throw GadgetError("complement has a vertex of degree " + std::to_string(c.degree(v)) + ", expected " +
                        std::to_string(d - 1) + " or " + std::to_string(d));
    }
  }
  if (static_cast<int>(deficient.size()) != d - 2)
    throw GadgetError("complement has " + std::to_string(deficient.size()) + " vertices of degree " +
                      std::to_string(d - 1) + ", expected " + std::to_string(d - 2));
  std::vector<Edge> edges(c.edges());
  for (Vertex v : deficient) edges.emplace_back(v, m);
  return {Graph(m + 1, edges), m};
}

std::vector<int> proto_degrees(int d, int m) {
  // complement degrees d-1 (d-2 times) and d  <=>  P degrees m-d, m-d-1
  if (d < 3 || m < d + 1) return {};
  std::vector<int> deg(d - 2, m - d);
  deg.insert(deg.end(), m - d + 2, m - d - 1);
  long sum = 0;
  for (int x : deg) sum += x;
  if (sum % 2) return {};
  return deg;
}

int first_proto_order(int d) {
  // d = 8 follows the known order-12 realisation; otherwise start where P
  // can have a vertex of degree 3 (maximum degree <= 2 forces a symmetry).
  if (d == 8) return 12;
  int m = d + 3;
  while (proto_degrees(d, m).empty()) ++m;
  return m;
}

std::string ProtoSearchStats::summary() const {
  std::ostringstream s;
  s << "attempts=" << attempts << " candidates=" << candidates << " not_connected=" << not_connected
    << " not_nut=" << not_nut << " symmetric=" << symmetric << " duplicates=" << duplicates;
  return s.str();
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Havel-Hakimi realisation; ties broken by vertex index.
std::optional<std::vector<Edge>> havel_hakimi(const std::vector<int>& degrees) {
  const int n = static_cast<int>(degrees.size());
  std::vector<int> left(degrees);
  std::vector<Edge> edges;
  for (int step = 0; step < n; ++step) {
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return left[a] > left[b]; });
    const int v = idx[0];
    const int k = left[v];
    if (k == 0) break;
    if (k > n - 1) return std::nullopt;
    left[v] = 0;
    for (int t = 1; t <= k; ++t) {
      const int u = idx[t];
      if (left[u] == 0) return std::nullopt;
      --left[u];
      edges.emplace_back(std::min(u, v), std::max(u, v));
    }
  }
  if (std::any_of(left.begin(), left.end(), [](int x) { return x != 0; })) return std::nullopt;
  return edges;
}

struct AttemptResult {
  ProtoSearchStats stats;
  std::optional<Graph> proto;  // canonical form of an accepted P
  std::string code;            // canonical code of Q
};

AttemptResult run_attempt(int d, int m, const std::vector<Edge>& start, std::uint64_t seed,
                          const ProtoSearchOptions& opts) {
  AttemptResult res;
  res.stats.attempts = 1;
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges = start;
  std::set<Edge> present(edges.begin(), edges.end());
  auto key = [](Vertex a, Vertex b) { return Edge(std::min(a, b), std::max(a, b)); };
  for (int check = 0; check < opts.checks_per_attempt; ++check) {
    int done = 0;
    for (int tries = 0; done < opts.swaps_per_check && tries < 50 * opts.swaps_per_check; ++tries) {
      const size_t i = rng() % edges.size(), j = rng() % edges.size();
      if (i == j) continue;
      auto [a, b] = edges[i];
      auto [c, e] = edges[j];
      if (rng() & 1) std::swap(c, e);
      // (a,b),(c,e) -> (a,e),(c,b)
      if (a == e || c == b || a == c || b == e) continue;
      const Edge n1 = key(a, e), n2 = key(c, b);
      if (present.count(n1) || present.count(n2)) continue;
      present.erase(edges[i]);
      present.erase(edges[j]);
      present.insert(n1);
      present.insert(n2);
      edges[i] = n1;
      edges[j] = n2;
      ++done;
    }
    ++res.stats.candidates;
    const Graph p(m, edges);
    const DerivedGadget q = derive_Q_from_P(p, d);
    if (!is_connected(q.q)) {
      ++res.stats.not_connected;
      continue;
    }
    AutomorphismSearch as = search_automorphisms(p, nullptr, opts.cancel);
    if (as.order != 1) {
      ++res.stats.symmetric;
      continue;
    }
    if (!nut_certificate(q.q).is_nut) {
      ++res.stats.not_nut;
      continue;
    }
    res.proto = p.relabeled(as.labeling);
    res.code = canonical_form(derive_Q_from_P(*res.proto, d).q).code;
    return res;
  }
  return res;
}

void add_stats(ProtoSearchStats& a, const ProtoSearchStats& b) {
  a.attempts += b.attempts;
  a.candidates += b.candidates;
  a.not_connected += b.not_connected;
  a.not_nut += b.not_nut;
  a.symmetric += b.symmetric;
  a.duplicates += b.duplicates;
}

}  // namespace

std::vector<GadgetRecord> search_proto(int d, int count, std::uint64_t seed, const ProtoSearchOptions& opts,
                                       ProtoSearchStats* stats_out) {
  if (d < 8 || d % 4) throw GadgetError("proto gadgets are defined for d divisible by 4, d >= 8");
  if (count < 1) throw GadgetError("count must be positive");
  ProtoSearchStats stats;
  std::map<std::string, GadgetRecord> accepted;
  const int jobs = std::max(1, opts.jobs);

  int m = first_proto_order(d);
  for (int tried = 0; tried < opts.orders && static_cast<int>(accepted.size()) < count; ++m) {
    const std::vector<int> deg = proto_degrees(d, m);
    if (deg.empty()) continue;
    ++tried;
    const auto start = havel_hakimi(deg);
    if (!start) continue;
    const std::uint64_t base = splitmix(seed ^ splitmix(static_cast<std::uint64_t>(d) << 32 | m));
    const std::uint64_t batch = 16 * static_cast<std::uint64_t>(jobs);
    for (std::uint64_t first = 0;
         first < opts.attempts_per_order && static_cast<int>(accepted.size()) < count; first += batch) {
      const std::uint64_t last = std::min(opts.attempts_per_order, first + batch);
      std::vector<AttemptResult> results(last - first);
      auto work = [&](int w) {
        for (std::uint64_t a = first + w; a < last; a += jobs)
          results[a - first] = run_attempt(d, m, *start, splitmix(base + a), opts);
      };
      if (jobs == 1) {
        work(0);
      } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
      }
      for (std::uint64_t a = first; a < last && static_cast<int>(accepted.size()) < count; ++a) {
        AttemptResult& r = results[a - first];
        add_stats(stats, r.stats);
        if (!r.proto) continue;
        if (accepted.count(r.code)) {
          ++stats.duplicates;
          continue;
        }
        GadgetRecord rec;
        const DerivedGadget dg = derive_Q_from_P(*r.proto, d);
        rec.gadget = dg.q;
        rec.roots = {dg.apex};
        rec.proto = *r.proto;
        rec.spec = {GadgetKind::proto, d};
        rec.provenance = "search_proto seed=" + std::to_string(seed) + " d=" + std::to_string(d) +
                         " order=" + std::to_string(m) + " attempt=" + std::to_string(a);
        accepted.emplace(r.code, std::move(rec));
      }
    }
  }
  if (stats_out) *stats_out = stats;
  if (static_cast<int>(accepted.size()) < count)
    throw GadgetSearchFailed("found " + std::to_string(accepted.size()) + " of " + std::to_string(count) +
                                 " proto gadgets for d=" + std::to_string(d),
                             stats);
  std::vector<GadgetRecord> out;
  for (auto& [code, rec] : accepted) out.push_back(std::move(rec));
  return out;
}

std::string format_gadget(const GadgetRecord& r) {
  std::string roots;
  for (size_t i = 0; i < r.roots.size(); ++i) roots += (i ? "," : "") + std::to_string(r.roots[i]);
  std::string head = "kind=" + r.spec.name() + " roots=" + roots + " order=" + std::to_string(r.gadget.order());
  if (r.proto) head += " proto=" + to_graph6(*r.proto);
  head += " provenance=" + r.provenance;
  return head + "\n" + to_graph6(r.gadget) + "\n";
}

std::vector<GadgetRecord> parse_gadgets(const std::string& text) {
  std::istringstream in(text);
  std::vector<GadgetRecord> out;
  std::string head, body;
  while (std::getline(in, head)) {
    if (head.empty() || head[0] == '#') continue;
    if (!std::getline(in, body)) throw FormatError("gadget header without graph line");
    GadgetRecord r;
    std::optional<int> order;
    const size_t prov = head.find(" provenance=");
    if (prov != std::string::npos) {
      r.provenance = head.substr(prov + 12);
      head.resize(prov);
    }
    std::istringstream fields(head);
    std::string f;
    bool have_kind = false;
    while (fields >> f) {
      const size_t eq = f.find('=');
      if (eq == std::string::npos) throw FormatError("malformed gadget field '" + f + "'");
      const std::string k = f.substr(0, eq), v = f.substr(eq + 1);
      if (k == "kind") {
        r.spec = GadgetSpec::parse(v);
        have_kind = true;
      } else if (k == "roots") {
        std::istringstream rs(v);
        std::string x;
        while (std::getline(rs, x, ',')) r.roots.push_back(std::stoi(x));
      } else if (k == "order") {
        order = std::stoi(v);
      } else if (k == "proto") {
        r.proto = from_graph6(v);
      } else {
        throw FormatError("unknown gadget field '" + k + "'");
      }
    }
    if (!have_kind) throw FormatError("gadget header lacks kind=");
    r.gadget = from_graph6(body);
    if (order && *order != r.gadget.order()) throw FormatError("gadget order does not match its graph");
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<GadgetRecord> read_gadget_library(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw GadgetError("cannot read gadget library " + file.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_gadgets(ss.str());
}

void append_gadget_library(const std::filesystem::path& file, const std::vector<GadgetRecord>& records) {
  std::ofstream out(file, std::ios::app);
  if (!out) throw GadgetError("cannot write gadget library " + file.string());
  for (const auto& r : records) out << format_gadget(r);
}

std::filesystem::path gadget_data_dir() {
  if (const char* env = std::getenv("NUTGRAPH_DATA")) return std::filesystem::path(env) / "gadgets";
  return std::filesystem::path(NUTGRAPH_DATA_DIR) / "gadgets";
}

GadgetRecord default_q0() {
  auto all = read_gadget_library(gadget_data_dir() / "q0.txt");
  if (all.empty()) throw GadgetError("pinned q0 library is empty");
  return all.front();
}

std::vector<GadgetRecord> pinned_protos(int d) {
  return read_gadget_library(gadget_data_dir() / ("proto-d" + std::to_string(d) + ".txt"));
}

}  // namespace nut
