#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nutgraph/gadgets.hpp"
#include "nutgraph/graph.hpp"
#include "nutgraph/kernel.hpp"
#include "nutgraph/permgroup.hpp"

namespace nut {

class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct MultiplierResult {
  Graph graph;
  std::vector<VertexTag> tags;
  int t = 0;
  int kappa = 0;
};

// M3(h): a bouquet of t triangles fused at every vertex of a connected
// 2t-regular h.  Layout: h's vertices 0..kappa-1, then for i ascending and
// j = 1..t the pair t_i^(j,1), t_i^(j,2).
MultiplierResult triangle_multiplier(const Graph& h);

// Index of t_i^(j,k) (i, j, k 1-based) in the layout above.
Vertex triangle_vertex(int kappa, int t, int i, int j, int k);

// Smallest s with C(s,2) >= d/4, and the lexicographically first d/4 pairs
// of {1..s} (1-based gadget indices, one pair per triangle).
int schedule_width(int d);
std::vector<std::pair<int, int>> pairing_schedule(int d);

// beta_{i,j} = (t_i^(j,1) t_i^(j,2)) and
// gamma_i = (t_i^(1,1) t_i^(2,1))(t_i^(1,2) t_i^(2,2)) on V(M3(h)).
Permutation beta_perm(int kappa, int t, int i, int j);
Permutation gamma_perm(int kappa, int t, int i);

enum class PipelineKind { thm1, thm2 };

struct PipelineReport {
  PipelineKind kind = PipelineKind::thm1;
  PermGroup input_group;  // acts on V(H)
  Graph H;
  Graph G;
  std::vector<VertexTag> tags;
  std::vector<GadgetRecord> gadgets;
  int sigma = 0;
  int d = 0;
  long expected_order = 0;
  long actual_order = 0;
  NutCertificate nut;
  BigInt aut_order = 0;
  BigInt input_order = 0;
  bool restriction_equal = false;  // Aut(G)|V(H) = Aut(H) and |Aut(G)| = |Aut(H)|
  bool regular = false;            // thm2: every vertex of G has degree d
  IsoVerdict iso_verdict = IsoVerdict::undecided;

  // Achieved order per host vertex (19 + 4 sigma, or omega(d)).
  long omega() const { return H.order() ? actual_order / H.order() : 0; }
  // Every certificate holds and the group check did not fail.
  bool ok() const;
};

// Theorem-1 pipeline.  `group` defaults to Aut(H).
PipelineReport build_thm1(const Graph& h, const GadgetRecord& q0, int sigma,
                          const std::optional<PermGroup>& group = std::nullopt);

// Theorem-2 pipeline; needs at least schedule_width(d) proto gadgets.
PipelineReport build_thm2(const Graph& h, int d, std::span<const GadgetRecord> gadgets,
                          const std::optional<PermGroup>& group = std::nullopt);

// Rebuilds G from H, the gadgets and the parameters and recomputes every
// stored verdict.  On failure `why` gets the first mismatch.
bool verify_report(const PipelineReport& r, std::string* why = nullptr);

// Membership of the extra automorphisms before and after decoration.
struct ExtraAutomorphismCheck {
  bool all_in_multiplier = true;  // every beta_{i,j} and gamma_i is in Aut(M3(H))
  bool none_extend = true;        // no natural extension is in Aut(G)
  int checked = 0;
};

// Extensions tried on G: fixing every added vertex, and (for gamma_i) also
// swapping the two gadget copies at t_i^(1,1) and t_i^(2,1) vertex for
// vertex.  Only meaningful for thm1 reports.
ExtraAutomorphismCheck check_extra_automorphisms(const PipelineReport& r);

// key=value lines; graphs as graph6, groups as cycle notation.
std::string serialize_report(const PipelineReport& r);
PipelineReport parse_report(const std::string& text);

}  // namespace nut
