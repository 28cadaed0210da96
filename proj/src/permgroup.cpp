#include "nutgraph/permgroup.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

namespace nut {

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(int degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> hit(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || x >= degree() || hit[x]) throw GroupError("images do not form a bijection");
    hit[x] = 1;
  }
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

int Permutation::first_moved_point() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return i;
  return -1;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (int i = 0; i < degree(); ++i) r.images_[images_[i]] = i;
  return r;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw GroupError("degree mismatch in product");
  Permutation r;
  r.images_.resize(a.images_.size());
  for (int i = 0; i < a.degree(); ++i) r.images_[i] = b.images_[a.images_[i]];
  return r;
}

BigInt Permutation::order() const {
  BigInt result = 1;
  std::vector<char> seen(degree(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    unsigned long len = 0;
    for (int x = i; !seen[x]; x = images_[x]) {
      seen[x] = 1;
      ++len;
    }
    mpz_lcm_ui(result.get_mpz_t(), result.get_mpz_t(), len);
  }
  return result;
}

std::string Permutation::cycles() const {
  std::string out;
  std::vector<char> seen(degree(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    for (int x = i; !seen[x]; x = images_[x]) {
      seen[x] = 1;
      if (x != i) out += ',';
      out += std::to_string(x + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation parse_cycles(std::string_view text, int degree) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::vector<char> used(degree, 0);
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) -> GroupError {
    return GroupError("cycle notation '" + std::string(text) + "': " + why);
  };
  skip_ws();
  if (pos == text.size()) throw fail("empty text");
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '(') throw fail("expected '('");
    ++pos;
    std::vector<int> cycle;
    skip_ws();
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
      continue;
    }
    while (true) {
      skip_ws();
      size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) throw fail("expected a point");
      long point = std::stol(std::string(text.substr(start, pos - start)));
      if (point < 1 || point > degree) throw fail("point " + std::to_string(point) + " out of range");
      if (used[point - 1]) throw fail("point " + std::to_string(point) + " repeated");
      used[point - 1] = 1;
      cycle.push_back(static_cast<int>(point - 1));
      skip_ws();
      if (pos == text.size()) throw fail("unterminated cycle");
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      throw fail("unexpected character");
    }
    for (size_t k = 0; k < cycle.size(); ++k) images[cycle[k]] = cycle[(k + 1) % cycle.size()];
  }
  return Permutation(std::move(images));
}

std::vector<Permutation> parse_generator_list(std::string_view text, int degree) {
  std::vector<Permutation> gens;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view piece = text.substr(start, end - start);
    if (piece.find_first_not_of(" \t\r\n") != std::string_view::npos)
      gens.push_back(parse_cycles(piece, degree));
    start = end + 1;
  }
  return gens;
}

// ---------------------------------------------------------------------------
// PermGroup

PermGroup::PermGroup(int degree, std::vector<Permutation> generators, std::vector<int> base_prefix)
    : degree_(degree) {
  for (auto& g : generators) {
    if (g.degree() != degree) throw GroupError("generator degree mismatch");
    if (!g.is_identity() &&
        std::find(generators_.begin(), generators_.end(), g) == generators_.end())
      generators_.push_back(std::move(g));
  }
  for (int b : base_prefix) {
    if (b < 0 || b >= degree) throw GroupError("base point out of range");
    bool dup = std::any_of(levels_.begin(), levels_.end(), [b](const Level& l) { return l.point == b; });
    if (dup) continue;
    levels_.emplace_back().point = b;
  }
  strong_ = generators_;
  for (const Permutation& g : generators_) {
    bool fixes_base = std::all_of(levels_.begin(), levels_.end(),
                                  [&](const Level& l) { return g[l.point] == l.point; });
    if (fixes_base) levels_.emplace_back().point = g.first_moved_point();
  }
  schreier_sims();
}

void PermGroup::rebuild_level(size_t l) {
  Level& lv = levels_[l];
  lv.orbit.assign(1, lv.point);
  lv.slot.assign(degree_, -1);
  lv.slot[lv.point] = 0;
  lv.transversal.assign(1, Permutation(degree_));
  lv.transversal_inv.assign(1, Permutation(degree_));
  for (size_t k = 0; k < lv.orbit.size(); ++k) {
    const int x = lv.orbit[k];
    for (const Permutation& s : lv.gens) {
      const int y = s[x];
      if (lv.slot[y] >= 0) continue;
      lv.slot[y] = static_cast<int>(lv.orbit.size());
      lv.orbit.push_back(y);
      lv.transversal.push_back(lv.transversal[k] * s);
      lv.transversal_inv.push_back(lv.transversal.back().inverse());
    }
  }
}

std::pair<Permutation, size_t> PermGroup::strip(Permutation g, size_t from) const {
  for (size_t l = from; l < levels_.size(); ++l) {
    const Level& lv = levels_[l];
    const int beta = g[lv.point];
    const int k = lv.slot[beta];
    if (k < 0) return {std::move(g), l};
    if (k > 0) g = g * lv.transversal_inv[k];
  }
  return {std::move(g), levels_.size()};
}

void PermGroup::schreier_sims() {
  for (size_t l = 0; l < levels_.size(); ++l) {
    levels_[l].gens.clear();
    for (const Permutation& s : strong_) {
      bool fixes = true;
      for (size_t e = 0; e < l && fixes; ++e) fixes = s[levels_[e].point] == levels_[e].point;
      if (fixes) levels_[l].gens.push_back(s);
    }
    rebuild_level(l);
  }

  long i = static_cast<long>(levels_.size()) - 1;
  while (i >= 0) {
    bool jumped = false;
    Level& lv = levels_[i];
    for (size_t k = 0; !jumped && k < lv.orbit.size(); ++k) {
      for (size_t si = 0; si < lv.gens.size(); ++si) {
        const Permutation& s = lv.gens[si];
        const int gamma = s[lv.orbit[k]];
        const Permutation& u_beta = lv.transversal[k];
        const Permutation& u_gamma = lv.transversal[lv.slot[gamma]];
        Permutation us = u_beta * s;
        if (us == u_gamma) continue;
        Permutation schreier = us * lv.transversal_inv[lv.slot[gamma]];
        auto [h, j] = strip(std::move(schreier), i + 1);
        bool extend = false;
        if (j == levels_.size()) {
          if (h.is_identity()) continue;
          extend = true;
        }
        if (extend) {
          levels_.emplace_back().point = h.first_moved_point();
          j = levels_.size() - 1;
        }
        strong_.push_back(h);
        for (size_t l = i + 1; l <= j; ++l) {
          levels_[l].gens.push_back(h);
          rebuild_level(l);
        }
        i = static_cast<long>(j);
        jumped = true;
        break;
      }
    }
    if (!jumped) --i;
  }

  // Drop trailing levels with trivial orbits (base points no generator moves).
  while (!levels_.empty() && levels_.back().orbit.size() == 1) levels_.pop_back();
}

std::vector<int> PermGroup::base() const {
  std::vector<int> b;
  for (const Level& l : levels_) b.push_back(l.point);
  return b;
}

std::vector<int> PermGroup::fundamental_orbit_sizes() const {
  std::vector<int> s;
  for (const Level& l : levels_) s.push_back(static_cast<int>(l.orbit.size()));
  return s;
}

BigInt PermGroup::order() const {
  BigInt o = 1;
  for (const Level& l : levels_) o *= static_cast<unsigned long>(l.orbit.size());
  return o;
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  auto [h, j] = strip(p, 0);
  return j == levels_.size() && h.is_identity();
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  std::vector<int> parent(degree_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Permutation& g : generators_)
    for (int x = 0; x < degree_; ++x) {
      int a = find(x), b = find(g[x]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::vector<int>> out;
  std::vector<int> index(degree_, -1);
  for (int x = 0; x < degree_; ++x) {
    int r = find(x);
    if (index[r] < 0) {
      index[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[index[r]].push_back(x);
  }
  return out;
}

std::vector<int> PermGroup::orbit_of(int point) const {
  for (auto& o : orbits())
    if (std::find(o.begin(), o.end(), point) != o.end()) return o;
  return {point};
}

PermGroup PermGroup::stabilizer(int point) const {
  if (point < 0 || point >= degree_) throw GroupError("stabilizer: point out of range");
  std::vector<int> prefix{point};
  for (const Level& l : levels_) prefix.push_back(l.point);
  PermGroup rebased(degree_, strong_, prefix);
  std::vector<Permutation> fixing;
  for (const Permutation& s : rebased.strong_)
    if (s[point] == point) fixing.push_back(s);
  std::vector<int> rest;
  for (size_t l = 1; l < rebased.levels_.size(); ++l) rest.push_back(rebased.levels_[l].point);
  return PermGroup(degree_, std::move(fixing), std::move(rest));
}

std::optional<std::vector<Permutation>> PermGroup::elements(std::uint64_t limit) const {
  if (order() > BigInt(std::to_string(limit))) return std::nullopt;
  std::vector<Permutation> out{Permutation(degree_)};
  // Every element is uniquely u_{L-1} * ... * u_0 with u_l from level l.
  for (long l = static_cast<long>(levels_.size()) - 1; l >= 0; --l) {
    std::vector<Permutation> next;
    next.reserve(out.size() * levels_[l].transversal.size());
    for (const Permutation& x : out)
      for (const Permutation& u : levels_[l].transversal) next.push_back(x * u);
    out = std::move(next);
  }
  return out;
}

std::vector<std::vector<int>> orbits(const PermGroup& g) { return g.orbits(); }
PermGroup stabilizer(const PermGroup& g, int point) { return g.stabilizer(point); }
BigInt group_order(const PermGroup& g) { return g.order(); }

PermGroup restrict_group(const PermGroup& g, std::span<const int> subset) {
  std::vector<int> index(g.degree(), -1);
  for (size_t k = 0; k < subset.size(); ++k) {
    if (subset[k] < 0 || subset[k] >= g.degree() || index[subset[k]] >= 0)
      throw GroupError("restrict_group: invalid subset");
    index[subset[k]] = static_cast<int>(k);
  }
  std::vector<Permutation> gens;
  for (const Permutation& p : g.generators()) {
    std::vector<int> img(subset.size());
    for (size_t k = 0; k < subset.size(); ++k) {
      int y = index[p[subset[k]]];
      if (y < 0) throw GroupError("restrict_group: subset is not invariant");
      img[k] = y;
    }
    gens.emplace_back(std::move(img));
  }
  return PermGroup(static_cast<int>(subset.size()), std::move(gens));
}

bool same_group(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree() || a.order() != b.order()) return false;
  for (const Permutation& p : a.generators())
    if (!b.contains(p)) return false;
  for (const Permutation& p : b.generators())
    if (!a.contains(p)) return false;
  return true;
}

std::string to_string(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::isomorphic:
      return "isomorphic";
    case IsoVerdict::not_isomorphic:
      return "not-isomorphic";
    case IsoVerdict::undecided:
      return "undecided";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Bounded abstract isomorphism.

namespace {

// Elements of a group indexed 0..N-1 (0 = identity) with a full
// multiplication table.
struct RegularRep {
  std::vector<std::vector<int>> mul;  // mul[x][y] = x*y
  std::vector<long> order;
  int size() const { return static_cast<int>(order.size()); }
};

RegularRep regular_rep(const PermGroup& g) {
  std::map<std::vector<int>, int> index;
  // Re-enumerate by BFS from the identity so each element has a parent edge.
  std::vector<Permutation> bfs{Permutation(g.degree())};
  std::vector<int> parent{-1}, via{-1};
  index[bfs[0].images()] = 0;
  const auto& gens = g.generators();
  std::vector<std::vector<int>> right(gens.size());
  for (size_t k = 0; k < bfs.size(); ++k) {
    for (size_t s = 0; s < gens.size(); ++s) {
      Permutation y = bfs[k] * gens[s];
      auto [it, fresh] = index.emplace(y.images(), static_cast<int>(bfs.size()));
      if (fresh) {
        bfs.push_back(std::move(y));
        parent.push_back(static_cast<int>(k));
        via.push_back(static_cast<int>(s));
      }
      right[s].push_back(it->second);
    }
  }
  RegularRep rep;
  const int n = static_cast<int>(bfs.size());
  if (BigInt(n) != g.order()) throw GroupError("regular representation size mismatch");
  rep.mul.assign(n, std::vector<int>(n, 0));
  for (int x = 0; x < n; ++x) {
    rep.mul[x][0] = x;
    for (int y = 1; y < n; ++y) rep.mul[x][y] = right[via[y]][rep.mul[x][parent[y]]];
  }
  rep.order.resize(n);
  for (int x = 0; x < n; ++x) rep.order[x] = bfs[x].order().get_si();
  return rep;
}

struct IsoSearch {
  const RegularRep& a;
  const RegularRep& b;
  std::vector<int> gens;  // generating elements of a
  std::vector<int> images;

  // Checks that the assignment gens[0..k) -> images[0..k) extends to an
  // injective homomorphism on the subgroup they generate.
  bool consistent(size_t k) const {
    std::vector<int> phi(a.size(), -1), used(b.size(), 0);
    std::vector<int> queue{0};
    phi[0] = 0;
    used[0] = 1;
    for (size_t q = 0; q < queue.size(); ++q) {
      const int x = queue[q];
      for (size_t i = 0; i < k; ++i) {
        const int y = a.mul[x][gens[i]];
        const int img = b.mul[phi[x]][images[i]];
        if (phi[y] < 0) {
          if (used[img]) return false;
          phi[y] = img;
          used[img] = 1;
          queue.push_back(y);
        } else if (phi[y] != img) {
          return false;
        }
      }
    }
    return true;
  }

  bool search(size_t k) {
    if (k == gens.size()) return true;
    const long want = a.order[gens[k]];
    for (int c = 0; c < b.size(); ++c) {
      if (b.order[c] != want) continue;
      images[k] = c;
      if (consistent(k + 1) && search(k + 1)) return true;
    }
    return false;
  }
};

std::vector<int> greedy_generators(const RegularRep& a) {
  std::vector<int> by_order(a.size());
  std::iota(by_order.begin(), by_order.end(), 0);
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](int x, int y) { return a.order[x] > a.order[y]; });
  std::vector<int> chosen;
  std::vector<char> in(a.size(), 0);
  in[0] = 1;
  int covered = 1;
  while (covered < a.size()) {
    int pick = *std::find_if(by_order.begin(), by_order.end(), [&](int x) { return !in[x]; });
    chosen.push_back(pick);
    std::vector<int> queue;
    for (int x = 0; x < a.size(); ++x)
      if (in[x]) queue.push_back(x);
    for (size_t q = 0; q < queue.size(); ++q)
      for (int g : chosen) {
        int y = a.mul[queue[q]][g];
        if (!in[y]) {
          in[y] = 1;
          ++covered;
          queue.push_back(y);
        }
      }
  }
  return chosen;
}

}  // namespace

IsoVerdict groups_isomorphic(const PermGroup& a, const PermGroup& b, std::uint64_t bound) {
  if (a.order() != b.order()) return IsoVerdict::not_isomorphic;
  if (a.order() > BigInt(std::to_string(bound))) return IsoVerdict::undecided;
  RegularRep ra = regular_rep(a), rb = regular_rep(b);
  std::vector<long> pa(ra.order), pb(rb.order);
  std::sort(pa.begin(), pa.end());
  std::sort(pb.begin(), pb.end());
  if (pa != pb) return IsoVerdict::not_isomorphic;
  IsoSearch s{ra, rb, greedy_generators(ra), {}};
  s.images.assign(s.gens.size(), 0);
  return s.search(0) ? IsoVerdict::isomorphic : IsoVerdict::not_isomorphic;
}

}  // namespace nut
