#include "nutgraph/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "nutgraph/autgroup.hpp"
#include "nutgraph/codec.hpp"

namespace nut {

Vertex triangle_vertex(int kappa, int t, int i, int j, int k) {
  return kappa + (i - 1) * 2 * t + (j - 1) * 2 + (k - 1);
}

MultiplierResult triangle_multiplier(const Graph& h) {
  if (h.order() == 0 || !is_connected(h)) throw ConstructionError("multiplier input is not connected");
  const DegreeProfile dp = degree_profile(h);
  if (!dp.regular) throw ConstructionError("multiplier input is not regular");
  if (dp.max_degree % 2 || dp.max_degree == 0) throw ConstructionError("multiplier input has odd degree");
  const int kappa = h.order(), t = dp.max_degree / 2;
  MultiplierResult r;
  r.t = t;
  r.kappa = kappa;
  std::vector<Edge> edges(h.edges());
  r.tags.resize(kappa * (2 * t + 1));
  for (int i = 1; i <= kappa; ++i) {
    r.tags[i - 1] = {VertexTag::Role::host, i, 0, 0};
    for (int j = 1; j <= t; ++j) {
      const Vertex a = triangle_vertex(kappa, t, i, j, 1), b = a + 1;
      edges.emplace_back(i - 1, a);
      edges.emplace_back(i - 1, b);
      edges.emplace_back(a, b);
      r.tags[a] = {VertexTag::Role::triangle, i, j, 1};
      r.tags[b] = {VertexTag::Role::triangle, i, j, 2};
    }
  }
  r.graph = Graph(kappa * (2 * t + 1), edges);
  return r;
}

int schedule_width(int d) {
  if (d != 8 && d != 12 && d != 16 && d != 20 && d != 24)
    throw ConstructionError("unsupported degree d=" + std::to_string(d) + " (expected 8, 12, 16, 20 or 24)");
  int s = 2;
  while (s * (s - 1) / 2 < d / 4) ++s;
  return s;
}

std::vector<std::pair<int, int>> pairing_schedule(int d) {
  const int s = schedule_width(d);
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= s; ++a)
    for (int b = a + 1; b <= s; ++b)
      if (static_cast<int>(out.size()) < d / 4) out.emplace_back(a, b);
  return out;
}

Permutation beta_perm(int kappa, int t, int i, int j) {
  std::vector<int> img(kappa * (2 * t + 1));
  std::iota(img.begin(), img.end(), 0);
  const Vertex a = triangle_vertex(kappa, t, i, j, 1);
  std::swap(img[a], img[a + 1]);
  return Permutation(std::move(img));
}

Permutation gamma_perm(int kappa, int t, int i) {
  std::vector<int> img(kappa * (2 * t + 1));
  std::iota(img.begin(), img.end(), 0);
  for (int k = 1; k <= 2; ++k)
    std::swap(img[triangle_vertex(kappa, t, i, 1, k)], img[triangle_vertex(kappa, t, i, 2, k)]);
  return Permutation(std::move(img));
}

bool PipelineReport::ok() const {
  return nut.is_nut && expected_order == actual_order && restriction_equal &&
         iso_verdict != IsoVerdict::not_isomorphic && (kind == PipelineKind::thm1 || regular);
}

namespace {

struct Attachment {
  int i = 0, j = 0, k = 0;
  std::vector<Vertex> map;  // gadget vertex -> vertex of G
};

struct Assembly {
  Graph g;
  std::vector<VertexTag> tags;
  std::vector<Attachment> attachments;
  long expected_order = 0;
};

void attach(Assembly& a, Vertex at, const GadgetRecord& q, Vertex root, int i, int j, int k) {
  Coalescence c = coalesce(a.g, at, q.gadget, root);
  a.g = std::move(c.graph);
  a.tags.resize(a.g.order());
  for (Vertex x = 0; x < q.gadget.order(); ++x)
    if (x != root) a.tags[c.second_map[x]] = {VertexTag::Role::gadget_interior, i, j, k};
  a.attachments.push_back({i, j, k, std::move(c.second_map)});
}

Assembly assemble_thm1(const Graph& h, const GadgetRecord& q0, int sigma) {
  if (sigma < 0) throw ConstructionError("sigma must be non-negative");
  const DegreeProfile dp = degree_profile(h);
  if (h.order() == 0 || !dp.regular || dp.max_degree != 4)
    throw ConstructionError("theorem-1 input must be connected and 4-regular");
  std::string why;
  if (q0.spec.kind != GadgetKind::q0 || !verify_gadget(q0, &why))
    throw ConstructionError("q0 gadget violates its spec: " + (why.empty() ? "wrong kind" : why));
  MultiplierResult m3 = triangle_multiplier(h);
  const int kappa = m3.kappa, t = m3.t;
  Assembly a{m3.graph, m3.tags, {}, 0};
  for (int j = 1; j <= 2; ++j)
    for (int i = 1; i <= kappa; ++i)
      attach(a, triangle_vertex(kappa, t, i, j, 1), q0, q0.roots[j - 1], i, j, 1);
  if (sigma > 0) {
    for (int i = 1; i <= kappa; ++i) {
      const int before = a.g.order();
      a.g = subdivide_edge(a.g, {i - 1, triangle_vertex(kappa, t, i, 1, 2)}, 4 * sigma);
      a.tags.resize(a.g.order());
      for (Vertex v = before; v < a.g.order(); ++v) a.tags[v] = {VertexTag::Role::subdivision, i, 0, 0};
    }
  }
  a.expected_order = 19L * kappa + 4L * sigma * kappa;
  return a;
}

Assembly assemble_thm2(const Graph& h, int d, std::span<const GadgetRecord> gadgets) {
  const auto schedule = pairing_schedule(d);
  const int s = schedule_width(d);
  const DegreeProfile dp = degree_profile(h);
  if (h.order() == 0 || !dp.regular || dp.max_degree != d / 2)
    throw ConstructionError("theorem-2 input must be connected and " + std::to_string(d / 2) + "-regular");
  if (static_cast<int>(gadgets.size()) < s)
    throw ConstructionError("need " + std::to_string(s) + " gadgets for d=" + std::to_string(d) + ", got " +
                            std::to_string(gadgets.size()));
  std::set<std::string> codes;
  for (int g = 0; g < s; ++g) {
    std::string why;
    if (gadgets[g].spec != GadgetSpec{GadgetKind::proto, d} || !verify_gadget(gadgets[g], &why))
      throw ConstructionError("gadget " + std::to_string(g + 1) + " violates the proto(" + std::to_string(d) +
                              ") spec: " + (why.empty() ? "wrong kind" : why));
    if (!codes.insert(canonical_form(gadgets[g].gadget).code).second)
      throw ConstructionError("gadgets must be pairwise non-isomorphic");
  }
  MultiplierResult m3 = triangle_multiplier(h);
  const int kappa = m3.kappa, t = m3.t;
  Assembly a{m3.graph, m3.tags, {}, 0};
  long per_vertex = 1;
  for (int i = 1; i <= kappa; ++i)
    for (int j = 1; j <= t; ++j) {
      const auto [first, second] = schedule[j - 1];
      for (int k = 1; k <= 2; ++k) {
        const GadgetRecord& q = gadgets[(k == 1 ? first : second) - 1];
        attach(a, triangle_vertex(kappa, t, i, j, k), q, q.roots[0], i, j, k);
        if (i == 1) per_vertex += q.gadget.order();
      }
    }
  a.expected_order = per_vertex * kappa;
  return a;
}

Assembly assemble(const PipelineReport& r) {
  return r.kind == PipelineKind::thm1 ? assemble_thm1(r.H, r.gadgets.at(0), r.sigma)
                                      : assemble_thm2(r.H, r.d, r.gadgets);
}

void certify(PipelineReport& r) {
  const int kappa = r.H.order();
  r.actual_order = r.G.order();
  r.nut = nut_certificate(r.G);
  const AutomorphismSearch as = search_automorphisms(r.G);
  r.aut_order = as.order;
  const PermGroup aut_g = as.group(r.G.order());
  const PermGroup aut_h = automorphism_group(r.H);
  r.input_order = r.input_group.order();
  std::vector<int> hosts(kappa);
  std::iota(hosts.begin(), hosts.end(), 0);
  try {
    r.restriction_equal = aut_g.order() == aut_h.order() && same_group(restrict_group(aut_g, hosts), aut_h);
  } catch (const GroupError&) {
    r.restriction_equal = false;
  }
  r.regular = false;
  if (r.kind == PipelineKind::thm2) {
    const DegreeProfile dp = degree_profile(r.G);
    r.regular = dp.regular && dp.max_degree == r.d;
  }
  r.iso_verdict = groups_isomorphic(aut_g, r.input_group);
}

PipelineReport start_report(PipelineKind kind, const Graph& h, const std::optional<PermGroup>& group) {
  PipelineReport r;
  r.kind = kind;
  r.H = h;
  if (group) {
    if (group->degree() != h.order()) throw ConstructionError("input group must act on V(H)");
    r.input_group = *group;
  } else {
    r.input_group = automorphism_group(h);
  }
  return r;
}

}  // namespace

PipelineReport build_thm1(const Graph& h, const GadgetRecord& q0, int sigma, const std::optional<PermGroup>& group) {
  PipelineReport r = start_report(PipelineKind::thm1, h, group);
  Assembly a = assemble_thm1(h, q0, sigma);
  r.G = std::move(a.g);
  r.tags = std::move(a.tags);
  r.gadgets = {q0};
  r.sigma = sigma;
  r.d = 4;
  r.expected_order = a.expected_order;
  certify(r);
  return r;
}

PipelineReport build_thm2(const Graph& h, int d, std::span<const GadgetRecord> gadgets,
                          const std::optional<PermGroup>& group) {
  PipelineReport r = start_report(PipelineKind::thm2, h, group);
  Assembly a = assemble_thm2(h, d, gadgets);
  r.G = std::move(a.g);
  r.tags = std::move(a.tags);
  r.gadgets.assign(gadgets.begin(), gadgets.begin() + schedule_width(d));
  r.d = d;
  r.expected_order = a.expected_order;
  certify(r);
  return r;
}

bool verify_report(const PipelineReport& r, std::string* why) {
  auto fail = [&](const std::string& text) {
    if (why) *why = text;
    return false;
  };
  Assembly a;
  try {
    a = assemble(r);
  } catch (const std::exception& e) {
    return fail(std::string("rebuild failed: ") + e.what());
  }
  if (a.expected_order != r.expected_order) return fail("order formula mismatch");
  if (!(a.g == r.G)) return fail("stored G differs from the rebuilt graph");
  if (a.tags != r.tags) return fail("vertex tags differ from the rebuilt layout");
  PipelineReport fresh = r;
  certify(fresh);
  if (fresh.actual_order != r.actual_order) return fail("actual order mismatch");
  if (fresh.nut.is_nut != r.nut.is_nut || fresh.nut.nullity != r.nut.nullity ||
      fresh.nut.kernel_vector != r.nut.kernel_vector)
    return fail("nut certificate mismatch");
  if (fresh.aut_order != r.aut_order) return fail("|Aut(G)| mismatch");
  if (fresh.input_order != r.input_order) return fail("input group order mismatch");
  if (fresh.restriction_equal != r.restriction_equal) return fail("restriction verdict mismatch");
  if (fresh.regular != r.regular) return fail("regularity verdict mismatch");
  if (fresh.iso_verdict != r.iso_verdict) return fail("isomorphism verdict mismatch");
  if (!fresh.ok()) return fail("certification fails");
  return true;
}

ExtraAutomorphismCheck check_extra_automorphisms(const PipelineReport& r) {
  ExtraAutomorphismCheck out;
  if (r.kind != PipelineKind::thm1) return out;
  const MultiplierResult m3 = triangle_multiplier(r.H);
  const PermGroup aut_m3 = automorphism_group(m3.graph);
  const Assembly a = assemble(r);
  const int kappa = m3.kappa, t = m3.t, n = a.g.order(), base = m3.graph.order();

  auto extend = [&](const Permutation& p) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    for (int v = 0; v < base; ++v) img[v] = p[v];
    return Permutation(std::move(img));
  };
  auto test = [&](const Permutation& p, const std::vector<Permutation>& extensions) {
    ++out.checked;
    if (!aut_m3.contains(p)) out.all_in_multiplier = false;
    for (const Permutation& e : extensions)
      if (is_automorphism(a.g, e)) out.none_extend = false;
  };

  const Vertex q1 = r.gadgets[0].roots[0], q2 = r.gadgets[0].roots[1];
  for (int i = 1; i <= kappa; ++i) {
    for (int j = 1; j <= t; ++j) {
      const Permutation b = beta_perm(kappa, t, i, j);
      test(b, {extend(b)});
    }
    const Permutation g = gamma_perm(kappa, t, i);
    std::vector<Permutation> ext{extend(g)};
    const Attachment* first = nullptr;
    const Attachment* second = nullptr;
    for (const Attachment& at : a.attachments) {
      if (at.i == i && at.j == 1) first = &at;
      if (at.i == i && at.j == 2) second = &at;
    }
    if (first && second) {
      std::vector<int> img = ext.front().images();
      for (Vertex x = 0; x < static_cast<int>(first->map.size()); ++x) {
        if (x == q1 || x == q2) continue;
        img[first->map[x]] = second->map[x];
        img[second->map[x]] = first->map[x];
      }
      img[first->map[q2]] = second->map[q1];
      img[second->map[q1]] = first->map[q2];
      ext.emplace_back(std::move(img));
    }
    test(g, ext);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text form.

namespace {

std::string join_generators(const PermGroup& g) {
  std::string out;
  for (const Permutation& p : g.generators()) out += (out.empty() ? "" : ";") + p.cycles();
  return out.empty() ? "()" : out;
}

std::string vector_text(const IntVector& v) {
  std::string out;
  for (const BigInt& x : v) out += (out.empty() ? "" : " ") + x.get_str();
  return out;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string serialize_report(const PipelineReport& r) {
  std::ostringstream s;
  s << "kind=" << (r.kind == PipelineKind::thm1 ? "thm1" : "thm2") << "\n";
  s << "sigma=" << r.sigma << "\n";
  s << "d=" << r.d << "\n";
  s << "H=" << to_graph6(r.H) << "\n";
  s << "input_group=" << join_generators(r.input_group) << "\n";
  for (const GadgetRecord& g : r.gadgets) {
    std::string roots;
    for (size_t i = 0; i < g.roots.size(); ++i) roots += (i ? "," : "") + std::to_string(g.roots[i]);
    s << "gadget=kind=" << g.spec.name() << " roots=" << roots << " graph=" << to_graph6(g.gadget);
    if (g.proto) s << " proto=" << to_graph6(*g.proto);
    s << "\n";
  }
  s << "G=" << to_graph6(r.G) << "\n";
  std::string tags;
  for (const VertexTag& t : r.tags) tags += (tags.empty() ? "" : " ") + t.name();
  s << "tags=" << tags << "\n";
  s << "expected_order=" << r.expected_order << "\n";
  s << "actual_order=" << r.actual_order << "\n";
  s << "omega=" << r.omega() << "\n";
  s << "nullity=" << r.nut.nullity << "\n";
  s << "is_nut=" << bool_text(r.nut.is_nut) << "\n";
  s << "full=" << bool_text(r.nut.full()) << "\n";
  s << "nut_failure=" << r.nut.failure_text() << "\n";
  if (r.nut.kernel_vector) s << "kernel=" << vector_text(*r.nut.kernel_vector) << "\n";
  s << "aut_order=" << r.aut_order.get_str() << "\n";
  s << "input_order=" << r.input_order.get_str() << "\n";
  s << "restriction_equal=" << bool_text(r.restriction_equal) << "\n";
  if (r.kind == PipelineKind::thm2) s << "regular=" << bool_text(r.regular) << "\n";
  s << "iso_verdict=" << to_string(r.iso_verdict) << "\n";
  s << "ok=" << bool_text(r.ok()) << "\n";
  return s.str();
}

namespace {

VertexTag parse_tag(const std::string& name) {
  VertexTag t;
  if (name.empty()) throw FormatError("empty vertex tag");
  const char c = name[0];
  t.role = c == 'h'   ? VertexTag::Role::host
           : c == 't' ? VertexTag::Role::triangle
           : c == 'g' ? VertexTag::Role::gadget_interior
           : c == 'w' ? VertexTag::Role::gadget_apex
           : c == 's' ? VertexTag::Role::subdivision
                      : throw FormatError("unknown vertex tag '" + name + "'");
  const size_t hat = name.find('^');
  t.i = std::stoi(name.substr(1, hat == std::string::npos ? std::string::npos : hat - 1));
  if (hat != std::string::npos) {
    if (std::sscanf(name.c_str() + hat, "^(%d,%d)", &t.j, &t.k) != 2) throw FormatError("bad tag '" + name + "'");
  }
  return t;
}

bool parse_bool(const std::string& v) {
  if (v == "true") return true;
  if (v == "false") return false;
  throw FormatError("expected true/false, got '" + v + "'");
}

}  // namespace

PipelineReport parse_report(const std::string& text) {
  PipelineReport r;
  std::istringstream in(text);
  std::string line, gens = "()";
  std::map<std::string, std::string> seen;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const size_t eq = line.find('=');
    if (eq == std::string::npos) throw FormatError("malformed report line '" + line + "'");
    const std::string key = line.substr(0, eq), value = line.substr(eq + 1);
    seen[key] = value;
    if (key == "kind") {
      if (value != "thm1" && value != "thm2") throw FormatError("unknown pipeline kind '" + value + "'");
      r.kind = value == "thm1" ? PipelineKind::thm1 : PipelineKind::thm2;
    } else if (key == "sigma") {
      r.sigma = std::stoi(value);
    } else if (key == "d") {
      r.d = std::stoi(value);
    } else if (key == "H") {
      r.H = from_graph6(value);
    } else if (key == "G") {
      r.G = from_graph6(value);
    } else if (key == "input_group") {
      gens = value;
    } else if (key == "gadget") {
      GadgetRecord g;
      std::istringstream fs(value);
      std::string f;
      while (fs >> f) {
        const size_t eq = f.find('=');
        if (eq == std::string::npos) throw FormatError("malformed gadget field '" + f + "'");
        const std::string k = f.substr(0, eq), v = f.substr(eq + 1);
        if (k == "kind") g.spec = GadgetSpec::parse(v);
        else if (k == "roots") {
          std::istringstream rs(v);
          std::string x;
          while (std::getline(rs, x, ',')) g.roots.push_back(std::stoi(x));
        } else if (k == "graph") g.gadget = from_graph6(v);
        else if (k == "proto") g.proto = from_graph6(v);
        else throw FormatError("unknown gadget field '" + k + "'");
      }
      r.gadgets.push_back(std::move(g));
    } else if (key == "tags") {
      std::istringstream ts(value);
      std::string name;
      while (ts >> name) r.tags.push_back(parse_tag(name));
    } else if (key == "expected_order") {
      r.expected_order = std::stol(value);
    } else if (key == "actual_order") {
      r.actual_order = std::stol(value);
    } else if (key == "nullity") {
      r.nut.nullity = std::stoi(value);
    } else if (key == "is_nut") {
      r.nut.is_nut = parse_bool(value);
    } else if (key == "kernel") {
      IntVector v;
      std::istringstream ks(value);
      std::string x;
      while (ks >> x) v.emplace_back(x);
      r.nut.kernel_vector = std::move(v);
    } else if (key == "aut_order") {
      r.aut_order = BigInt(value);
    } else if (key == "input_order") {
      r.input_order = BigInt(value);
    } else if (key == "restriction_equal") {
      r.restriction_equal = parse_bool(value);
    } else if (key == "regular") {
      r.regular = parse_bool(value);
    } else if (key == "iso_verdict") {
      r.iso_verdict = value == "isomorphic"       ? IsoVerdict::isomorphic
                      : value == "not-isomorphic" ? IsoVerdict::not_isomorphic
                      : value == "undecided"      ? IsoVerdict::undecided
                                                  : throw FormatError("unknown verdict '" + value + "'");
    } else if (key == "omega" || key == "ok" || key == "nut_failure" || key == "full" ||
               key.starts_with("extra_")) {
      // derived fields
    } else {
      throw FormatError("unknown report field '" + key + "'");
    }
  }
  for (const char* required : {"kind", "H", "G"})
    if (!seen.count(required)) throw FormatError(std::string("report lacks ") + required + "=");
  r.input_group = PermGroup(r.H.order(), gens == "()" ? std::vector<Permutation>{}
                                                      : parse_generator_list(gens, r.H.order()));
  return r;
}

}  // namespace nut
