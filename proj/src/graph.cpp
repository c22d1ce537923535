#include "symbreak/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>

namespace symbreak {

const char* errc_name(errc code) {
  switch (code) {
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::loop_rejected: return "LoopRejected";
    case errc::size_cap_exceeded: return "SizeCapExceeded";
    case errc::enumeration_cap_exceeded: return "EnumerationCapExceeded";
    case errc::group_not_enumerated: return "GroupNotEnumerated";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::no_edges: return "NoEdges";
    case errc::label_range_mismatch: return "LabelRangeMismatch";
    case errc::invalid_power: return "InvalidPower";
    case errc::not_bipartite: return "NotBipartite";
    case errc::not_boolean_square_edge: return "NotBooleanSquareEdge";
    case errc::domain_error: return "DomainError";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::parse_error: return "ParseError";
    case errc::unknown_suite: return "UnknownSuite";
  }
  return "UnknownError";
}

int VertexSet::count() const {
  int total = 0;
  for (uint64_t w : words_) total += std::popcount(w);
  return total;
}

bool VertexSet::empty() const {
  for (uint64_t w : words_)
    if (w) return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  size_t k = std::min(words_.size(), other.words_.size());
  for (size_t i = 0; i < k; ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

VertexSet VertexSet::intersect(const VertexSet& other) const {
  VertexSet out(std::min(n_, other.n_));
  for (size_t i = 0; i < out.words_.size(); ++i) out.words_[i] = words_[i] & other.words_[i];
  return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  for (size_t i = 0; i < words_.size(); ++i) {
    uint64_t mine = words_[i];
    uint64_t theirs = i < other.words_.size() ? other.words_[i] : 0;
    if (mine & ~theirs) return false;
  }
  return true;
}

bool VertexSet::is_strict_subset_of(const VertexSet& other) const {
  return is_subset_of(other) && !(other.is_subset_of(*this));
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  for_each([&](int v) { out.push_back(v); });
  return out;
}

Graph::Graph(int n) : n_(n), adj_(n, VertexSet(n)) {
  if (n < 0) fail(errc::index_out_of_range, "negative vertex count");
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    fail(errc::index_out_of_range,
         "vertex " + std::to_string(v) + " out of range [0," + std::to_string(n_) + ")");
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return u != v && adj_[u].test(v);
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) fail(errc::loop_rejected, "loop at vertex " + std::to_string(u));
  if (adj_[u].test(v)) return;
  adj_[u].set(v);
  adj_[v].set(u);
  ++edge_count_;
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u)
    adj_[u].for_each([&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

Graph build_graph(int n, std::span<const std::pair<int, int>> edges) {
  return Graph::from_edges(n, edges);
}

Graph complement(const Graph& g) {
  int n = g.vertex_count();
  Graph out(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  int off = g.vertex_count();
  Graph out(off + h.vertex_count());
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : h.edges()) out.add_edge(u + off, v + off);
  return out;
}

Bipartition bipartition(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> color(n, -1);
  Bipartition result;
  result.bipartite = true;
  for (int start = 0; start < n; ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      bool odd_edge = false;
      g.neighbors(u).for_each([&](int v) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          odd_edge = true;
        }
      });
      if (odd_edge) {
        result.bipartite = false;
        return result;
      }
    }
  }
  for (int v = 0; v < n; ++v) result.sides[color[v]].push_back(v);
  return result;
}

Partition connected_components(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  int num = 0;
  for (int start = 0; start < n; ++start) {
    if (comp[start] != -1) continue;
    comp[start] = num;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      g.neighbors(u).for_each([&](int v) {
        if (comp[v] == -1) {
          comp[v] = num;
          queue.push_back(v);
        }
      });
    }
    ++num;
  }
  Partition p;
  p.classes.resize(num);
  for (int v = 0; v < n; ++v) p.classes[comp[v]].push_back(v);
  return p;
}

Partition r_equivalence_classes(const Graph& g) {
  int n = g.vertex_count();
  // group vertices by identical open neighborhoods, classes ordered by min vertex
  std::vector<int> rep(n, -1);
  Partition p;
  for (int v = 0; v < n; ++v) {
    bool placed = false;
    for (auto& cls : p.classes) {
      if (g.neighbors(cls[0]) == g.neighbors(v)) {
        cls.push_back(v);
        placed = true;
        break;
      }
    }
    if (!placed) p.classes.push_back({v});
  }
  return p;
}

bool is_r_thin(const Graph& g) {
  auto p = r_equivalence_classes(g);
  for (const auto& cls : p.classes)
    if (cls.size() > 1) return false;
  return true;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  return connected_components(g).classes.size() == 1;
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  int k = static_cast<int>(vertices.size());
  std::vector<int> pos(g.vertex_count(), -1);
  for (int i = 0; i < k; ++i) pos[vertices[i]] = i;
  Graph out(k);
  for (int i = 0; i < k; ++i)
    g.neighbors(vertices[i]).for_each([&](int v) {
      if (pos[v] > i) out.add_edge(i, pos[v]);
    });
  return out;
}

Graph empty_graph(int n) { return Graph(n); }

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph complete_bipartite_graph(int m, int n) {
  Graph g(m + n);
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < n; ++v) g.add_edge(u, m + v);
  return g;
}

Graph complete_multipartite_graph(std::span<const int> part_sizes) {
  int n = 0;
  for (int s : part_sizes) n += s;
  Graph g(n);
  std::vector<int> part_of;
  for (size_t i = 0; i < part_sizes.size(); ++i)
    for (int j = 0; j < part_sizes[i]; ++j) part_of.push_back(static_cast<int>(i));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) g.add_edge(u, v);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

Graph matching_graph(int k) {
  Graph g(2 * k);
  for (int i = 0; i < k; ++i) g.add_edge(2 * i, 2 * i + 1);
  return g;
}

}  // namespace symbreak
