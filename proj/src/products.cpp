#include "symbreak/products.hpp"

#include <algorithm>

namespace symbreak {

long ProductVertexMap::flatten(std::span<const int> coords) const {
  long index = 0;
  for (size_t i = 0; i < factor_dims.size(); ++i) {
    if (coords[i] < 0 || coords[i] >= factor_dims[i])
      fail(errc::index_out_of_range, "coordinate out of range");
    index = index * factor_dims[i] + coords[i];
  }
  return index;
}

std::vector<int> ProductVertexMap::unflatten(long index) const {
  std::vector<int> coords(factor_dims.size());
  for (size_t i = factor_dims.size(); i-- > 0;) {
    coords[i] = static_cast<int>(index % factor_dims[i]);
    index /= factor_dims[i];
  }
  return coords;
}

Graph kronecker(const Graph& g, const Graph& h) {
  int nh = h.vertex_count();
  Graph out(g.vertex_count() * nh);
  auto g_edges = g.edges();
  auto h_edges = h.edges();
  for (auto [u, v] : g_edges)
    for (auto [x, y] : h_edges) {
      out.add_edge(u * nh + x, v * nh + y);
      out.add_edge(u * nh + y, v * nh + x);
    }
  return out;
}

Graph cartesian(const Graph& g, const Graph& h) {
  int ng = g.vertex_count(), nh = h.vertex_count();
  Graph out(ng * nh);
  for (auto [x, y] : h.edges())
    for (int u = 0; u < ng; ++u) out.add_edge(u * nh + x, u * nh + y);
  for (auto [u, v] : g.edges())
    for (int x = 0; x < nh; ++x) out.add_edge(u * nh + x, v * nh + x);
  return out;
}

Graph product_power(ProductKind kind, const Graph& g, int k) {
  if (k < 1) fail(errc::invalid_power, "product power requires k >= 1");
  Graph acc = g;
  for (int i = 1; i < k; ++i)
    acc = kind == ProductKind::kronecker ? kronecker(acc, g) : cartesian(acc, g);
  return acc;
}

BipartiteSplit bipartite_split(const Graph& g, const Graph& h) {
  Bipartition bg = bipartition(g);
  Bipartition bh = bipartition(h);
  if (!bg.bipartite || !bh.bipartite)
    fail(errc::not_bipartite, "bipartite_split requires bipartite factors");

  int nh = h.vertex_count();
  std::vector<int> side_g(g.vertex_count()), side_h(nh);
  for (int s = 0; s < 2; ++s) {
    for (int v : bg.sides[s]) side_g[v] = s;
    for (int v : bh.sides[s]) side_h[v] = s;
  }
  BipartiteSplit split;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int x = 0; x < nh; ++x) split.classes[side_g[u] ^ side_h[x]].push_back(u * nh + x);
  split.exact_components = is_connected(g) && is_connected(h);
  return split;
}

WeichselPrediction weichsel_prediction(const Graph& g, const Graph& h) {
  bool both_connected = is_connected(g) && is_connected(h);
  bool g_bip = bipartition(g).bipartite;
  bool h_bip = bipartition(h).bipartite;
  if (both_connected && (!g_bip || !h_bip)) return {true, 1};
  if (both_connected && g_bip && h_bip) return {false, 2};
  return {false, -1};
}

}  // namespace symbreak
