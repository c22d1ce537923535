#include "symbreak/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace symbreak {

std::vector<int> refine_colors(const Graph& g, std::vector<int> colors) {
  int n = g.vertex_count();
  if (n == 0) return colors;
  for (int round = 0; round < n; ++round) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(colors[v]);
      std::vector<int> neigh;
      g.neighbors(v).for_each([&](int u) { neigh.push_back(colors[u]); });
      std::sort(neigh.begin(), neigh.end());
      sig[v].insert(sig[v].end(), neigh.begin(), neigh.end());
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
    std::vector<int> next(n);
    int c = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++c;
      next[order[i]] = c;
    }
    if (next == colors) break;
    colors = std::move(next);
  }
  return colors;
}

namespace {

// joint refinement of two graphs with comparable color ids
void refine_jointly(const Graph& a, std::vector<int>& col_a, const Graph& b, std::vector<int>& col_b) {
  Graph both = disjoint_union(a, b);
  std::vector<int> colors(col_a);
  colors.insert(colors.end(), col_b.begin(), col_b.end());
  colors = refine_colors(both, std::move(colors));
  col_a.assign(colors.begin(), colors.begin() + a.vertex_count());
  col_b.assign(colors.begin() + a.vertex_count(), colors.end());
}

struct IsoSearch {
  const Graph& a;
  const Graph& b;
  const std::vector<int>& col_a;
  const std::vector<int>& col_b;
  std::vector<int> image;    // a-vertex -> b-vertex or -1
  std::vector<char> used;    // b-vertex taken
  std::vector<int> order;    // a-vertices, most constrained first

  bool extend(size_t depth) {
    if (depth == order.size()) return true;
    int u = order[depth];
    for (int v = 0; v < b.vertex_count(); ++v) {
      if (used[v] || col_b[v] != col_a[u]) continue;
      bool ok = true;
      for (size_t i = 0; i < depth && ok; ++i) {
        int w = order[i];
        if (a.has_edge(u, w) != b.has_edge(image[w], v)) ok = false;
      }
      if (!ok) continue;
      image[u] = v;
      used[v] = 1;
      if (extend(depth + 1)) return true;
      image[u] = -1;
      used[v] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_colored_isomorphism(const Graph& a, const std::vector<int>& col_a_in,
                                                         const Graph& b, const std::vector<int>& col_b_in) {
  int n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return std::nullopt;
  std::vector<int> col_a = col_a_in, col_b = col_b_in;
  refine_jointly(a, col_a, b, col_b);

  // color class sizes must agree
  std::map<int, int> balance;
  for (int c : col_a) ++balance[c];
  for (int c : col_b) --balance[c];
  for (auto [c, diff] : balance)
    if (diff != 0) return std::nullopt;

  std::map<int, int> class_size;
  for (int c : col_a) ++class_size[c];

  IsoSearch search{a, b, col_a, col_b, std::vector<int>(n, -1), std::vector<char>(n, 0), {}};
  search.order.resize(n);
  std::iota(search.order.begin(), search.order.end(), 0);
  std::sort(search.order.begin(), search.order.end(), [&](int u, int v) {
    int su = class_size[col_a[u]], sv = class_size[col_a[v]];
    if (su != sv) return su < sv;
    return u < v;
  });
  if (!search.extend(0)) return std::nullopt;
  return search.image;
}

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b, int size_cap) {
  if (a.vertex_count() > size_cap || b.vertex_count() > size_cap)
    fail(errc::size_cap_exceeded, "isomorphism test beyond configured cap of " + std::to_string(size_cap));
  std::vector<int> zero_a(a.vertex_count(), 0), zero_b(b.vertex_count(), 0);
  return find_colored_isomorphism(a, zero_a, b, zero_b);
}

bool are_isomorphic(const Graph& a, const Graph& b, int size_cap) {
  return find_isomorphism(a, b, size_cap).has_value();
}

namespace {

std::string adjacency_string(const Graph& g, const std::vector<int>& perm_to_slot) {
  // perm_to_slot[v] = canonical position of vertex v
  int n = g.vertex_count();
  std::vector<int> at(n);
  for (int v = 0; v < n; ++v) at[perm_to_slot[v]] = v;
  std::string s;
  s.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s.push_back(g.has_edge(at[i], at[j]) ? '1' : '0');
  return s;
}

void canon_recurse(const Graph& g, std::vector<int> colors, std::string& best, bool& have_best) {
  int n = g.vertex_count();
  colors = refine_colors(g, std::move(colors));

  // find first non-singleton color class (by smallest color id)
  std::map<int, std::vector<int>> cells;
  for (int v = 0; v < n; ++v) cells[colors[v]].push_back(v);
  const std::vector<int>* target = nullptr;
  for (auto& [c, cell] : cells)
    if (cell.size() > 1) {
      target = &cell;
      break;
    }

  if (!target) {
    // discrete: colors give the canonical slots directly
    std::vector<int> slot(n);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int u, int v) { return colors[u] < colors[v]; });
    for (int i = 0; i < n; ++i) slot[order[i]] = i;
    std::string s = adjacency_string(g, slot);
    if (!have_best || s < best) {
      best = std::move(s);
      have_best = true;
    }
    return;
  }
  for (int v : *target) {
    std::vector<int> child = colors;
    for (int u = 0; u < n; ++u)
      if (child[u] >= child[v] && u != v) child[u] += 1;
    canon_recurse(g, std::move(child), best, have_best);
  }
}

}  // namespace

std::string canonical_form(const Graph& g, int size_cap) {
  if (g.vertex_count() > size_cap)
    fail(errc::size_cap_exceeded, "canonical form beyond configured cap");
  std::string best;
  bool have_best = false;
  canon_recurse(g, std::vector<int>(g.vertex_count(), 0), best, have_best);
  return std::to_string(g.vertex_count()) + ":" + best;
}

}  // namespace symbreak
