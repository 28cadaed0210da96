#include "nutgraph/kernel.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace nut {

namespace {

IntVector kernel_from_rref(const std::vector<IntVector>& m, const std::vector<int>& pivot_cols,
                           const BigInt& pivot, int free_col) {
  const int n = static_cast<int>(m.empty() ? 0 : m[0].size());
  IntVector x(n, 0);
  x[free_col] = pivot;
  for (size_t r = 0; r < pivot_cols.size(); ++r) x[pivot_cols[r]] = -m[r][free_col];
  normalize_primitive(x);
  return x;
}

}  // namespace

void normalize_primitive(IntVector& v) {
  BigInt g = 0;
  for (const BigInt& a : v) {
    if (a != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  }
  if (g == 0) return;
  auto first = std::find_if(v.begin(), v.end(), [](const BigInt& a) { return a != 0; });
  if (*first < 0) g = -g;
  for (BigInt& a : v) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
}

KernelBasis nullspace(const Graph& g) {
  const int n = g.order();
  std::vector<IntVector> m(n, IntVector(n, 0));
  for (auto [u, v] : g.edges()) m[u][v] = m[v][u] = 1;

  std::vector<int> pivot_cols;
  std::vector<char> is_pivot(n, 0);
  BigInt prev = 1;
  BigInt t;
  int rank = 0;
  for (int c = 0; c < n && rank < n; ++c) {
    int r = rank;
    while (r < n && m[r][c] == 0) ++r;
    if (r == n) continue;
    if (r != rank) std::swap(m[r], m[rank]);
    const BigInt p = m[rank][c];
    for (int i = 0; i < n; ++i) {
      if (i == rank) continue;
      const BigInt a = m[i][c];
      IntVector& row = m[i];
      const IntVector& prow = m[rank];
      // row = (p*row - a*prow) / prev; every quotient is a minor of A, so
      // the division is exact.
      for (int j = 0; j < n; ++j) {
        t = p * row[j];
        if (a != 0) t -= a * prow[j];
        if (prev != 1) mpz_divexact(row[j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        else row[j] = t;
      }
    }
    prev = p;
    pivot_cols.push_back(c);
    is_pivot[c] = 1;
    ++rank;
  }

  KernelBasis kb;
  kb.nullity = n - rank;
  for (int f = 0; f < n; ++f)
    if (!is_pivot[f]) kb.basis.push_back(kernel_from_rref(m, pivot_cols, prev, f));
  return kb;
}

IntVector adjacency_times(const Graph& g, std::span<const BigInt> x) {
  IntVector y(g.order(), 0);
  for (auto [u, v] : g.edges()) {
    y[u] += x[v];
    y[v] += x[u];
  }
  return y;
}

// ---------------------------------------------------------------------------
// Modular route.

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

bool is_prime_u32(u32 p) {
  if (p < 2) return false;
  for (u32 d = 2; static_cast<u64>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

u32 pow_mod(u64 b, u64 e, u32 p) {
  u64 r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<u32>(r);
}

u32 inv_mod(u32 a, u32 p) { return pow_mod(a, p - 2, p); }

struct ModularKernel {
  std::vector<int> pivot_cols;
  std::vector<std::vector<u32>> basis;  // one vector per free column, 1 there
};

// Row echelon form mod p.  Rows keep track of their last nonzero column so
// updates only touch the live band; with a bandwidth-reducing vertex order
// this keeps the cost near n * band^2 instead of n^3.
ModularKernel kernel_mod_p(const Graph& g, u32 p) {
  const int n = g.order();
  std::vector<std::vector<u32>> m(n, std::vector<u32>(n, 0));
  std::vector<int> hi(n, -1), lo(n, n);
  for (auto [u, v] : g.edges()) {
    m[u][v] = m[v][u] = 1;
    hi[u] = std::max(hi[u], v);
    hi[v] = std::max(hi[v], u);
    lo[u] = std::min(lo[u], v);
    lo[v] = std::min(lo[v], u);
  }

  ModularKernel out;
  int rank = 0;
  for (int c = 0; c < n && rank < n; ++c) {
    int r = -1;
    for (int i = rank; i < n; ++i)
      if (lo[i] <= c && m[i][c] != 0 && (r < 0 || hi[i] < hi[r])) r = i;
    if (r < 0) continue;
    if (r != rank) {
      std::swap(m[r], m[rank]);
      std::swap(hi[r], hi[rank]);
      std::swap(lo[r], lo[rank]);
    }
    std::vector<u32>& prow = m[rank];
    const int end = hi[rank];
    const u32 inv = inv_mod(prow[c], p);
    for (int j = c; j <= end; ++j) prow[j] = static_cast<u32>(static_cast<u64>(prow[j]) * inv % p);
    for (int i = rank + 1; i < n; ++i) {
      if (lo[i] > c) continue;
      const u32 a = m[i][c];
      if (a == 0) continue;
      std::vector<u32>& row = m[i];
      const u64 neg = p - a;
      for (int j = c; j <= end; ++j) row[j] = static_cast<u32>((row[j] + neg * prow[j]) % p);
      hi[i] = std::max(hi[i], end);
      int l = c + 1;
      while (l <= hi[i] && row[l] == 0) ++l;
      lo[i] = l <= hi[i] ? l : n;
    }
    out.pivot_cols.push_back(c);
    ++rank;
  }

  std::vector<char> is_pivot(n, 0);
  for (int c : out.pivot_cols) is_pivot[c] = 1;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<u32> x(n, 0);
    x[f] = 1;
    for (int r = rank - 1; r >= 0; --r) {
      const int pc = out.pivot_cols[r];
      u64 s = 0;
      const std::vector<u32>& row = m[r];
      for (int j = pc + 1; j <= hi[r]; ++j)
        if (row[j] && x[j]) s = (s + static_cast<u64>(row[j]) * x[j]) % p;
      x[pc] = static_cast<u32>((p - s) % p);
    }
    out.basis.push_back(std::move(x));
  }
  return out;
}

// Reverse Cuthill-McKee order: order[k] is the vertex placed at position k.
std::vector<Vertex> rcm_order(const Graph& g) {
  const int n = g.order();
  std::vector<Vertex> order;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> by_degree(n);
  for (int v = 0; v < n; ++v) by_degree[v] = v;
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
  for (Vertex s : by_degree) {
    if (seen[s]) continue;
    size_t head = order.size();
    order.push_back(s);
    seen[s] = 1;
    while (head < order.size()) {
      const Vertex v = order[head++];
      std::vector<Vertex> next;
      for (Vertex w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          next.push_back(w);
        }
      std::stable_sort(next.begin(), next.end(),
                       [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
      order.insert(order.end(), next.begin(), next.end());
    }
  }
  std::reverse(order.begin(), order.end());
  return order;
}

// Finds (num, den) with num = den * a (mod m), |num|, den <= sqrt(m/2).
bool rational_reconstruct(const BigInt& a, const BigInt& m, const BigInt& bound, BigInt& num,
                          BigInt& den) {
  BigInt r0 = m, r1 = a, s0 = 0, s1 = 1, q, tmp;
  while (r1 > bound) {
    mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
  }
  if (s1 == 0 || abs(s1) > bound) return false;
  num = r1;
  den = s1;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return true;
}

// Reconstructs an integer vector proportional to the rational vector whose
// residues modulo `modulus` are `residues`.
bool reconstruct_vector(const std::vector<BigInt>& residues, const BigInt& modulus, IntVector& out) {
  BigInt bound;
  mpz_fdiv_q_2exp(bound.get_mpz_t(), modulus.get_mpz_t(), 1);
  mpz_sqrt(bound.get_mpz_t(), bound.get_mpz_t());
  const size_t n = residues.size();
  std::vector<BigInt> nums(n);
  std::vector<BigInt> scale_at(n);
  BigInt common = 1, scaled, num, den;
  for (size_t i = 0; i < n; ++i) {
    scaled = residues[i] * common;
    mpz_fdiv_r(scaled.get_mpz_t(), scaled.get_mpz_t(), modulus.get_mpz_t());
    if (scaled <= bound) {
      nums[i] = scaled;
    } else if (modulus - scaled <= bound) {
      nums[i] = scaled - modulus;
    } else {
      if (!rational_reconstruct(scaled, modulus, bound, num, den)) return false;
      nums[i] = num;
      common *= den;
      if (common > bound) return false;
    }
    scale_at[i] = common;
  }
  out.assign(n, 0);
  for (size_t i = 0; i < n; ++i) {
    BigInt factor;
    mpz_divexact(factor.get_mpz_t(), common.get_mpz_t(), scale_at[i].get_mpz_t());
    out[i] = nums[i] * factor;
  }
  return true;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const BigInt& a) { return a == 0; });
}

}  // namespace

KernelBasis nullspace_modular(const Graph& input) {
  const int n = input.order();
  const std::vector<Vertex> order = rcm_order(input);
  std::vector<Vertex> where(n);
  for (int k = 0; k < n; ++k) where[order[k]] = k;
  const Graph g = input.relabeled(where);
  constexpr int kMaxPrimes = 4000;
  u32 p = (1u << 31) - 1;

  std::vector<int> pivots;
  std::vector<std::vector<BigInt>> residues;
  BigInt modulus = 1;
  bool started = false;
  for (int used = 0; used < kMaxPrimes; ++used, --p) {
    while (!is_prime_u32(p)) --p;
    ModularKernel mk = kernel_mod_p(g, p);
    // Unlucky primes drop rank or delay a pivot; the rational pivot set is
    // the lexicographically earliest one seen.
    if (started && mk.pivot_cols != pivots) {
      if (mk.pivot_cols.size() < pivots.size() ||
          (mk.pivot_cols.size() == pivots.size() && mk.pivot_cols > pivots))
        continue;
      started = false;
    }
    if (!started) {
      pivots = mk.pivot_cols;
      residues.assign(mk.basis.size(), std::vector<BigInt>(n, 0));
      for (size_t b = 0; b < mk.basis.size(); ++b)
        for (int i = 0; i < n; ++i) residues[b][i] = mk.basis[b][i];
      modulus = p;
      started = true;
    } else {
      // CRT: r' = r + M * ((x - r) * M^{-1} mod p)
      const u32 minv = inv_mod(static_cast<u32>(mpz_fdiv_ui(modulus.get_mpz_t(), p)), p);
      for (size_t b = 0; b < mk.basis.size(); ++b) {
        for (int i = 0; i < n; ++i) {
          BigInt& r = residues[b][i];
          const u64 rp = mpz_fdiv_ui(r.get_mpz_t(), p);
          const u64 diff = (mk.basis[b][i] + static_cast<u64>(p) - rp) % p;
          const u64 k = diff * minv % p;
          if (k) r += modulus * static_cast<unsigned long>(k);
        }
      }
      modulus *= p;
    }

    KernelBasis kb;
    kb.nullity = static_cast<int>(residues.size());
    bool ok = true;
    for (const auto& res : residues) {
      IntVector x;
      if (!reconstruct_vector(res, modulus, x) || !is_zero(adjacency_times(g, x))) {
        ok = false;
        break;
      }
      IntVector back(n);
      for (int v = 0; v < n; ++v) back[v] = std::move(x[where[v]]);
      normalize_primitive(back);
      kb.basis.push_back(std::move(back));
    }
    if (ok) return kb;
  }
  throw std::runtime_error("nullspace_modular: reconstruction did not converge");
}

std::string NutCertificate::failure_text() const {
  switch (failure) {
    case Failure::none:
      return "none";
    case Failure::too_small:
      return "order<2";
    case Failure::disconnected:
      return "disconnected";
    case Failure::nullity_not_one:
      return "nullity=" + std::to_string(nullity);
    case Failure::zero_entry:
      return "zero-entry@" + std::to_string(zero_vertex);
  }
  return "?";
}

bool NutCertificate::full() const {
  return kernel_vector && std::none_of(kernel_vector->begin(), kernel_vector->end(),
                                       [](const BigInt& a) { return a == 0; });
}

NutCertificate nut_certificate(const Graph& g) {
  NutCertificate c;
  // Full rank modulo a prime implies full rank over the rationals.
  KernelBasis kb;
  if (g.order() > 0 && kernel_mod_p(g, (1u << 31) - 1).basis.empty())
    kb.nullity = 0;
  else
    kb = g.order() <= kBareissOrderLimit ? nullspace(g) : nullspace_modular(g);
  c.nullity = kb.nullity;
  if (kb.nullity == 1) c.kernel_vector = kb.basis.front();

  if (g.order() < 2) {
    c.failure = NutCertificate::Failure::too_small;
  } else if (!is_connected(g)) {
    c.failure = NutCertificate::Failure::disconnected;
  } else if (kb.nullity != 1) {
    c.failure = NutCertificate::Failure::nullity_not_one;
  } else {
    const IntVector& x = *c.kernel_vector;
    auto zero = std::find(x.begin(), x.end(), BigInt(0));
    if (zero != x.end()) {
      c.failure = NutCertificate::Failure::zero_entry;
      c.zero_vertex = static_cast<Vertex>(zero - x.begin());
    } else {
      c.is_nut = true;
    }
  }
  return c;
}

bool recheck_certificate(const Graph& g, const NutCertificate& cert) {
  NutCertificate fresh = nut_certificate(g);
  if (fresh.is_nut != cert.is_nut || fresh.nullity != cert.nullity ||
      fresh.failure != cert.failure || fresh.zero_vertex != cert.zero_vertex)
    return false;
  if (cert.kernel_vector.has_value() != (cert.nullity == 1)) return false;
  if (!cert.kernel_vector) return true;
  const IntVector& x = *cert.kernel_vector;
  if (static_cast<int>(x.size()) != g.order() || is_zero(x)) return false;
  if (!is_zero(adjacency_times(g, x))) return false;
  IntVector normal = x;
  normalize_primitive(normal);
  if (normal != x) return false;
  if (cert.is_nut)
    return std::none_of(x.begin(), x.end(), [](const BigInt& a) { return a == 0; });
  return true;
}

}  // namespace nut
