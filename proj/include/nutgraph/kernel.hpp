#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nutgraph/graph.hpp"

namespace nut {

using BigInt = mpz_class;
using IntVector = std::vector<BigInt>;

// Exact basis of ker A(G).  Each vector has content 1 and a positive first
// nonzero entry.
struct KernelBasis {
  int nullity = 0;
  std::vector<IntVector> basis;
};

// Fraction-free Gauss-Jordan elimination over the integers.  Pivot rule:
// the lowest-index remaining row with a nonzero entry in the current column.
KernelBasis nullspace(const Graph& g);

// The same kernel as nullspace() (the same vector when the nullity is 1),
// computed by elimination modulo word-size primes, vector rational
// reconstruction and an exact re-multiplication check of every
// reconstructed vector.  The rank modulo any prime bounds the rational rank
// from above, so a verified basis of the modular kernel's dimension is
// exact.  Intended for graphs with hundreds or thousands of
// vertices.
KernelBasis nullspace_modular(const Graph& g);

// A(G) x computed exactly.
IntVector adjacency_times(const Graph& g, std::span<const BigInt> x);

// Content 1, first nonzero entry positive.
void normalize_primitive(IntVector& v);

struct NutCertificate {
  enum class Failure { none, too_small, disconnected, nullity_not_one, zero_entry };

  bool is_nut = false;
  int nullity = 0;
  std::optional<IntVector> kernel_vector;  // present iff nullity == 1
  Failure failure = Failure::none;
  Vertex zero_vertex = -1;  // first vertex with a zero kernel entry

  std::string failure_text() const;
  // A kernel vector exists (nullity 1) and none of its entries is zero.
  bool full() const;
};

// Graphs at or below this order are certified with nullspace(); larger ones
// use nullspace_modular().
inline constexpr int kBareissOrderLimit = 64;

NutCertificate nut_certificate(const Graph& g);

// Independent re-check of a certificate: A x = 0 exactly, entries nonzero,
// primitive and sign-normalised, consistent failure code.  Nullity itself is
// recomputed.
bool recheck_certificate(const Graph& g, const NutCertificate& cert);

}  // namespace nut
