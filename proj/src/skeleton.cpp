#include "symbreak/skeleton.hpp"

namespace symbreak {

BooleanSquare boolean_square(const Graph& g) {
  int n = g.vertex_count();
  BooleanSquare out{Graph(n), VertexSet(n)};
  for (int x = 0; x < n; ++x) {
    if (!g.neighbors(x).empty()) out.loop_vertices.set(x);
    for (int y = x + 1; y < n; ++y)
      if (g.neighbors(x).intersects(g.neighbors(y))) out.base.add_edge(x, y);
  }
  return out;
}

bool is_dispensable(const Graph& g, int x, int y) {
  if (x == y) {
    if (g.neighbors(x).empty())
      fail(errc::not_boolean_square_edge, "no loop at an isolated vertex");
    return true;
  }
  if (!g.neighbors(x).intersects(g.neighbors(y)))
    fail(errc::not_boolean_square_edge, "pair is not an edge of the Boolean square");

  const VertexSet& nx = g.neighbors(x);
  const VertexSet& ny = g.neighbors(y);
  VertexSet nx_ny = nx.intersect(ny);
  for (int z = 0; z < g.vertex_count(); ++z) {
    const VertexSet& nz = g.neighbors(z);
    bool cond1 = nx_ny.is_strict_subset_of(nx.intersect(nz)) ||
                 (nx.is_strict_subset_of(nz) && nz.is_strict_subset_of(ny));
    if (!cond1) continue;
    bool cond2 = nx_ny.is_strict_subset_of(ny.intersect(nz)) ||
                 (ny.is_strict_subset_of(nz) && nz.is_strict_subset_of(nx));
    if (cond2) return true;
  }
  return false;
}

Graph cartesian_skeleton(const Graph& g) {
  BooleanSquare square = boolean_square(g);
  Graph out(g.vertex_count());
  for (auto [x, y] : square.base.edges())
    if (!is_dispensable(g, x, y)) out.add_edge(x, y);
  return out;
}

}  // namespace symbreak
