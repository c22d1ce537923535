#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "symbreak/error.hpp"

namespace symbreak {

// Fixed-universe set of vertex indices, packed into 64-bit words.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe) : n_(universe), words_((universe + 63) / 64, 0) {}

  int universe() const { return n_; }
  bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1; }
  void set(int v) { words_[v >> 6] |= uint64_t{1} << (v & 63); }
  void reset(int v) { words_[v >> 6] &= ~(uint64_t{1} << (v & 63)); }

  int count() const;
  bool empty() const;
  bool intersects(const VertexSet& other) const;
  VertexSet intersect(const VertexSet& other) const;
  // strict subset: subset and not equal
  bool is_subset_of(const VertexSet& other) const;
  bool is_strict_subset_of(const VertexSet& other) const;

  bool operator==(const VertexSet& other) const = default;

  // ascending member list
  std::vector<int> members() const;
  // iterate members ascending
  template <typename F>
  void for_each(F&& f) const {
    for (size_t w = 0; w < words_.size(); ++w) {
      uint64_t bits = words_[w];
      while (bits) {
        int v = static_cast<int>(w * 64) + __builtin_ctzll(bits);
        f(v);
        bits &= bits - 1;
      }
    }
  }

 private:
  int n_ = 0;
  std::vector<uint64_t> words_;
};

// Simple undirected graph on vertices 0..n-1. No loops, no multi-edges;
// adjacency is kept symmetric by construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return edge_count_; }
  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);  // duplicates collapse silently, loops rejected
  const VertexSet& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }

  // all edges as (u, v) with u < v, lexicographically sorted
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph& other) const = default;

 private:
  void check_vertex(int v) const;
  int n_ = 0;
  int edge_count_ = 0;
  std::vector<VertexSet> adj_;
};

// Disjoint vertex classes covering 0..n-1, each class ascending, classes
// ordered by minimum element.
struct Partition {
  std::vector<std::vector<int>> classes;
  bool operator==(const Partition& other) const = default;
};

struct Bipartition {
  bool bipartite = false;
  // sides[0] holds the lowest-index vertex of every component
  std::array<std::vector<int>, 2> sides;
};

Graph build_graph(int n, std::span<const std::pair<int, int>> edges);
Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);
Bipartition bipartition(const Graph& g);
Partition connected_components(const Graph& g);
Partition r_equivalence_classes(const Graph& g);
bool is_r_thin(const Graph& g);
bool is_connected(const Graph& g);

// induced subgraph on the given vertices (in the given order)
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

// standard families
Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int m, int n);
// part_sizes need not be sorted; parts are laid out consecutively
Graph complete_multipartite_graph(std::span<const int> part_sizes);
Graph star_graph(int leaves);  // K_{1,n}, vertex 0 is the center
Graph matching_graph(int k);   // k disjoint K_2

}  // namespace symbreak
