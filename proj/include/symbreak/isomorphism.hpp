#pragma once

#include <optional>
#include <vector>

#include "symbreak/graph.hpp"

namespace symbreak {

// Iterated color refinement (degree, then multiset of neighbor colors) until
// stable. Color ids are dense and deterministic. Two graphs refined jointly
// get comparable ids, so refine the disjoint union when matching them.
std::vector<int> refine_colors(const Graph& g, std::vector<int> colors);

// Backtracking search for a color-preserving isomorphism A -> B. Initial
// colors constrain the mapping (vertex u may map to v only if colA[u] ==
// colB[v]); both colorings are refined jointly first. Returns the image
// vector, or nullopt.
std::optional<std::vector<int>> find_colored_isomorphism(const Graph& a, const std::vector<int>& col_a,
                                                         const Graph& b, const std::vector<int>& col_b);

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b, int size_cap = 16);
bool are_isomorphic(const Graph& a, const Graph& b, int size_cap = 16);

// Canonical adjacency string. Exhaustive over the refinement's branch tree,
// so keep it to small orders (the enumeration tests use it at n <= 8).
std::string canonical_form(const Graph& g, int size_cap = 10);

}  // namespace symbreak
