#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nutgraph/autgroup.hpp"
#include "nutgraph/enumeration.hpp"
#include "nutgraph/graph.hpp"

namespace nut {

class GadgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class GadgetKind { q0, proto };

// q0: nut, |Aut| = 2, roots q1 and q2 in different orbits with trivial
// stabilisers.  proto(d): the derived gadget Q is connected, nut and
// asymmetric, with one apex of degree d-2 and every other vertex of degree d.
struct GadgetSpec {
  GadgetKind kind = GadgetKind::q0;
  int d = 0;  // proto only

  std::string name() const;  // "q0" or "proto(d)"
  static GadgetSpec parse(const std::string& text);
  friend bool operator==(const GadgetSpec&, const GadgetSpec&) = default;
};

struct GadgetRecord {
  Graph gadget;               // Q (for proto: complement of P plus apex)
  std::vector<Vertex> roots;  // q1, q2 for q0; the apex for proto
  std::optional<Graph> proto;
  GadgetSpec spec;
  std::string provenance;
};

// Re-validates a record from scratch.  On failure `why` gets the reason.
bool verify_gadget(const GadgetRecord& r, std::string* why = nullptr);

// Exhaustive over connected graphs of order 7..max_order.  Each hit is stored
// canonically relabelled with the lexicographically least valid (q1, q2).
// Sorted by canonical code.
std::vector<GadgetRecord> search_q0(int max_order, const EnumerationOptions& opts = {});

struct DerivedGadget {
  Graph q;
  Vertex apex = -1;
};

// Q = complement(P) plus an apex joined to the d-2 vertices of degree d-1.
// Throws GadgetError if complement(P) does not have exactly d-2 vertices of
// degree d-1 and all others of degree d.
DerivedGadget derive_Q_from_P(const Graph& p, int d);

// Degree sequence (descending) a proto-gadget of order m must have, or empty
// if m is not admissible for d.
std::vector<int> proto_degrees(int d, int m);
int first_proto_order(int d);

struct ProtoSearchOptions {
  std::uint64_t attempts_per_order = 4000;
  int orders = 4;           // consecutive admissible orders to try
  int checks_per_attempt = 40;
  int swaps_per_check = 6;
  int jobs = 1;
  const CancelToken* cancel = nullptr;
};

struct ProtoSearchStats {
  std::uint64_t attempts = 0;
  std::uint64_t candidates = 0;
  std::uint64_t not_connected = 0;
  std::uint64_t not_nut = 0;
  std::uint64_t symmetric = 0;
  std::uint64_t duplicates = 0;
  std::string summary() const;
};

class GadgetSearchFailed : public std::runtime_error {
 public:
  GadgetSearchFailed(const std::string& what, ProtoSearchStats s)
      : std::runtime_error(what + " (" + s.summary() + ")"), stats(s) {}
  ProtoSearchStats stats;
};

// Seeded random search for `count` pairwise non-isomorphic proto-gadgets,
// scanning admissible orders upward from first_proto_order(d).  The result is
// sorted by canonical code of Q and does not depend on opts.jobs.
std::vector<GadgetRecord> search_proto(int d, int count, std::uint64_t seed,
                                       const ProtoSearchOptions& opts = {},
                                       ProtoSearchStats* stats = nullptr);

// Library format: "kind=<spec> roots=<r1,r2,...> order=<n>[ proto=<graph6>]
// provenance=<text>" followed by one graph6 line.
std::string format_gadget(const GadgetRecord& r);
std::vector<GadgetRecord> parse_gadgets(const std::string& text);
std::vector<GadgetRecord> read_gadget_library(const std::filesystem::path& file);
void append_gadget_library(const std::filesystem::path& file, const std::vector<GadgetRecord>& records);

// Directory holding the pinned gadget files (NUTGRAPH_DATA overrides).
std::filesystem::path gadget_data_dir();
GadgetRecord default_q0();
std::vector<GadgetRecord> pinned_protos(int d);

}  // namespace nut
