#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "symbreak/error.hpp"

namespace symbreak {

// Bijection on {0..n-1}; image[v] is where v goes.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> image);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int v) const { return image_[v]; }
  const std::vector<int>& image() const { return image_; }

  bool is_identity() const;
  Permutation inverse() const;
  // (a.then(b))(v) = b(a(v))
  Permutation then(const Permutation& b) const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> image_;
};

// Permutation group on m points given by generators; Schreier-Sims stabilizer
// chain with base 0,1,...,m-1 (trivial levels skipped). Deterministic: orbits
// ascending, transversal entries chosen by first-found breadth-first search.
class PermGroup {
 public:
  static PermGroup from_generators(int degree, std::vector<Permutation> generators);

  int degree() const { return degree_; }
  uint64_t order() const { return order_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  // all elements, identity first, lexicographic in base images; throws
  // enumeration_cap_exceeded when order > cap
  std::vector<Permutation> enumerate(uint64_t cap) const;

  bool contains(const Permutation& p) const;

 private:
  struct Level {
    int base = 0;                             // base point
    std::vector<int> orbit;                   // ascending, orbit[0] == base
    std::vector<Permutation> transversal;     // transversal[i] maps base -> orbit[i]
  };
  void build(std::vector<Permutation> gens);
  int degree_ = 0;
  uint64_t order_ = 1;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
};

}  // namespace symbreak
