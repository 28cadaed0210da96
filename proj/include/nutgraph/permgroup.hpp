#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nutgraph/kernel.hpp"

namespace nut {

class GroupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Bijection on 0..degree-1.  Products compose left to right: x^(a*b) = (x^a)^b.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree);
  explicit Permutation(std::vector<int> images);  // throws GroupError if not a bijection

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  BigInt order() const;
  int first_moved_point() const;  // -1 for the identity

  // 1-based disjoint-cycle notation, "()" for the identity.
  std::string cycles() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
};

// Parses 1-based disjoint-cycle notation such as "(1,2,3)(4,5)".  Points not
// mentioned are fixed.  Throws GroupError on malformed text, a repeated point
// or a point outside 1..degree.
Permutation parse_cycles(std::string_view text, int degree);

// Semicolon-separated list of cycle-notation generators.
std::vector<Permutation> parse_generator_list(std::string_view text, int degree);

// Permutation group stored as a base and strong generating set built by the
// deterministic Schreier-Sims algorithm.
class PermGroup {
 public:
  PermGroup() : PermGroup(0, {}) {}
  // `base_prefix` seeds the base; points are appended as needed.
  PermGroup(int degree, std::vector<Permutation> generators, std::vector<int> base_prefix = {});

  static PermGroup trivial(int degree) { return PermGroup(degree, {}); }

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  std::vector<int> base() const;
  const std::vector<Permutation>& strong_generators() const { return strong_; }
  std::vector<int> fundamental_orbit_sizes() const;

  BigInt order() const;
  bool contains(const Permutation& p) const;

  std::vector<std::vector<int>> orbits() const;
  std::vector<int> orbit_of(int point) const;

  PermGroup stabilizer(int point) const;

  // All elements, in a deterministic order, when order() <= limit.
  std::optional<std::vector<Permutation>> elements(std::uint64_t limit) const;

 private:
  struct Level {
    int point = 0;
    std::vector<Permutation> gens;     // strong generators fixing earlier base points
    std::vector<int> orbit;            // BFS order
    std::vector<int> slot;             // point -> index into orbit / transversal, or -1
    std::vector<Permutation> transversal;      // maps point -> orbit[k]
    std::vector<Permutation> transversal_inv;
  };

  void schreier_sims();
  void rebuild_level(size_t l);
  // Sifts g through levels [from, size); returns the residue and the level at
  // which sifting stopped (levels_.size() when it went all the way through).
  std::pair<Permutation, size_t> strip(Permutation g, size_t from) const;

  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> strong_;
  std::vector<Level> levels_;
};

std::vector<std::vector<int>> orbits(const PermGroup& g);
PermGroup stabilizer(const PermGroup& g, int point);
BigInt group_order(const PermGroup& g);

// Action on `subset` (which must be setwise invariant), relabelled so that
// subset[k] becomes point k.  Throws GroupError if a generator moves a point
// of the subset outside it.
PermGroup restrict_group(const PermGroup& g, std::span<const int> subset);

// Same elements on the same point set (compared via membership of generators
// in both directions and equal orders).
bool same_group(const PermGroup& a, const PermGroup& b);

enum class IsoVerdict { isomorphic, not_isomorphic, undecided };
std::string to_string(IsoVerdict v);

inline constexpr std::uint64_t kIsomorphismOrderBound = 2000;

// Abstract isomorphism of two permutation groups, decided exactly when both
// orders are at most `bound` and reported as undecided otherwise.
IsoVerdict groups_isomorphic(const PermGroup& a, const PermGroup& b,
                             std::uint64_t bound = kIsomorphismOrderBound);

}  // namespace nut
