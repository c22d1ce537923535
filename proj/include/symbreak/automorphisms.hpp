#pragma once

#include <cstdint>
#include <vector>

#include "symbreak/graph.hpp"
#include "symbreak/permgroup.hpp"

namespace symbreak {

struct AutOptions {
  int vertex_cap = 32;
  uint64_t enumeration_cap = 1'000'000;
};

// Reads SYMBREAK_AUT_VERTEX_CAP / SYMBREAK_AUT_ENUM_CAP when set.
AutOptions default_aut_options();

struct AutomorphismGroup {
  int n = 0;
  uint64_t order = 1;
  bool enumerated = false;
  std::vector<Permutation> generators;  // identity excluded
  std::vector<Permutation> elements;    // identity first, present iff enumerated
};

// Exact automorphism group via a stabilizer chain over vertices 0..n-1; each
// transversal entry comes from a refinement-pruned backtracking search. When
// the order exceeds the enumeration cap, elements stay empty (generators and
// exact order are still returned).
AutomorphismGroup automorphism_group(const Graph& g, const AutOptions& opts = {});

// Automorphisms preserving a vertex coloring; a labeling is distinguishing
// exactly when this group is trivial.
AutomorphismGroup automorphism_group_colored(const Graph& g, const std::vector<int>& colors,
                                             const AutOptions& opts = {});

bool is_automorphism(const Graph& g, const Permutation& p);

struct VertexLabeling {
  std::vector<int> labels;  // labels[v] in 1..r
};

struct EdgeLabeling {
  std::vector<std::pair<int, int>> edges;  // sorted, u < v (the graph's edge order)
  std::vector<int> labels;                 // parallel to edges
  int label_of(int u, int v) const;
};

EdgeLabeling make_edge_labeling(const Graph& g, std::vector<int> labels);

// permutation induced on the sorted edge list
std::vector<int> edge_permutation(const Graph& g, const Permutation& p);
bool acts_trivially_on_edges(const Graph& g, const Permutation& p);

// True iff every non-identity automorphism moves some label.
bool is_distinguishing_vertex_labeling(const Graph& g, const AutomorphismGroup& aut,
                                       const VertexLabeling& labeling);

// True iff every label-preserving automorphism acts as the identity on the
// edge set (flips of K_2 components and isolated-vertex swaps never move an
// edge, so they cannot be broken by any edge labeling).
bool is_distinguishing_edge_labeling(const Graph& g, const AutomorphismGroup& aut,
                                     const EdgeLabeling& labeling);

// Deduplicated non-identity permutations of an item domain, flattened for the
// kernels (images, inverses, final decision position per permutation).
struct ActionTable {
  int num_items = 0;
  size_t count = 0;
  size_t stride = 0;             // pad_for_kernel(num_items)
  std::vector<uint8_t> images;   // count * stride
  std::vector<uint8_t> inverses;
  std::vector<int> final_pos;    // last position at which the perm is decided
};

ActionTable build_action_table(std::span<const std::vector<int>> perms, int num_items);

// vertex action of the full group (requires enumerated)
ActionTable vertex_action_table(const AutomorphismGroup& aut);
// deduplicated edge action of the full group (requires enumerated)
ActionTable edge_action_table(const Graph& g, const AutomorphismGroup& aut);

// The edge action as an abstract permutation group (built from generators, so
// it works for groups too large to enumerate on vertices).
PermGroup edge_action_group(const Graph& g, const AutomorphismGroup& aut);

}  // namespace symbreak
