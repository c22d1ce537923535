#include "symbreak/automorphisms.hpp"

#include <algorithm>
#include <cstdlib>

#include "symbreak/isomorphism.hpp"
#include "symbreak/kernels.hpp"

namespace symbreak {

AutOptions default_aut_options() {
  AutOptions opts;
  if (const char* s = std::getenv("SYMBREAK_AUT_VERTEX_CAP")) opts.vertex_cap = std::atoi(s);
  if (const char* s = std::getenv("SYMBREAK_AUT_ENUM_CAP")) opts.enumeration_cap = std::strtoull(s, nullptr, 10);
  return opts;
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.size() != g.vertex_count()) return false;
  for (auto [u, v] : g.edges())
    if (!g.has_edge(p(u), p(v))) return false;
  return true;
}

namespace {

// one color-preserving automorphism fixing 0..prefix-1 pointwise and mapping
// prefix -> target
std::optional<Permutation> stabilizer_witness(const Graph& g, const std::vector<int>& base_colors,
                                              int prefix, int target) {
  int n = g.vertex_count();
  std::vector<int> col_dom(n), col_rng(n);
  for (int v = 0; v < n; ++v) col_dom[v] = col_rng[v] = base_colors[v] * (n + 2);
  for (int j = 0; j < prefix; ++j) {
    col_dom[j] += j + 1;
    col_rng[j] += j + 1;
  }
  col_dom[prefix] += n + 1;
  col_rng[target] += n + 1;
  auto image = find_colored_isomorphism(g, col_dom, g, col_rng);
  if (!image) return std::nullopt;
  return Permutation(std::move(*image));
}

AutomorphismGroup chain_group(const Graph& g, const std::vector<int>& base_colors,
                              const AutOptions& opts) {
  int n = g.vertex_count();
  if (n > opts.vertex_cap)
    fail(errc::size_cap_exceeded, "automorphism search beyond vertex cap of " +
                                      std::to_string(opts.vertex_cap) + " (graph has " +
                                      std::to_string(n) + ")");
  AutomorphismGroup aut;
  aut.n = n;

  struct Level {
    std::vector<Permutation> transversal;  // [0] is the identity
  };
  std::vector<Level> levels;

  for (int i = 0; i < n; ++i) {
    Level lvl;
    lvl.transversal.push_back(Permutation::identity(n));
    for (int u = i + 1; u < n; ++u) {
      if (base_colors[u] != base_colors[i]) continue;
      auto witness = stabilizer_witness(g, base_colors, i, u);
      if (witness) lvl.transversal.push_back(std::move(*witness));
    }
    aut.order *= lvl.transversal.size();
    if (lvl.transversal.size() > 1) {
      for (size_t t = 1; t < lvl.transversal.size(); ++t) aut.generators.push_back(lvl.transversal[t]);
      levels.push_back(std::move(lvl));
    }
  }

  if (aut.order <= opts.enumeration_cap) {
    aut.enumerated = true;
    size_t depth = levels.size();
    if (depth == 0) {
      aut.elements.push_back(Permutation::identity(n));
      return aut;
    }
    aut.elements.reserve(aut.order);
    std::vector<size_t> idx(depth, 0);
    std::vector<Permutation> prefix(depth);
    auto recompute_from = [&](size_t k) {
      for (size_t l = k; l < depth; ++l) {
        const Permutation& t = levels[l].transversal[idx[l]];
        prefix[l] = (l == 0) ? t : t.then(prefix[l - 1]);
      }
    };
    recompute_from(0);
    while (true) {
      aut.elements.push_back(prefix[depth - 1]);
      size_t k = depth;
      while (k > 0 && idx[k - 1] + 1 == levels[k - 1].transversal.size()) {
        idx[k - 1] = 0;
        --k;
      }
      if (k == 0) break;
      ++idx[k - 1];
      recompute_from(k - 1);
    }
  }
  return aut;
}

}  // namespace

AutomorphismGroup automorphism_group(const Graph& g, const AutOptions& opts) {
  return chain_group(g, std::vector<int>(g.vertex_count(), 0), opts);
}

AutomorphismGroup automorphism_group_colored(const Graph& g, const std::vector<int>& colors,
                                             const AutOptions& opts) {
  if (static_cast<int>(colors.size()) != g.vertex_count())
    fail(errc::label_range_mismatch, "color vector size mismatch");
  return chain_group(g, colors, opts);
}

int EdgeLabeling::label_of(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
  if (it == edges.end() || *it != std::make_pair(u, v))
    fail(errc::label_range_mismatch, "pair is not an edge of the labeled graph");
  return labels[it - edges.begin()];
}

EdgeLabeling make_edge_labeling(const Graph& g, std::vector<int> labels) {
  EdgeLabeling out;
  out.edges = g.edges();
  if (labels.size() != out.edges.size())
    fail(errc::label_range_mismatch, "edge labeling size does not match edge count");
  out.labels = std::move(labels);
  return out;
}

std::vector<int> edge_permutation(const Graph& g, const Permutation& p) {
  auto edges = g.edges();
  std::vector<int> out(edges.size());
  auto index_of = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
    return static_cast<int>(it - edges.begin());
  };
  for (size_t e = 0; e < edges.size(); ++e) out[e] = index_of(p(edges[e].first), p(edges[e].second));
  return out;
}

bool acts_trivially_on_edges(const Graph& g, const Permutation& p) {
  for (auto [u, v] : g.edges()) {
    int a = p(u), b = p(v);
    if (a > b) std::swap(a, b);
    if (a != u || b != v) return false;
  }
  return true;
}

ActionTable build_action_table(std::span<const std::vector<int>> perms, int num_items) {
  if (num_items > 255)
    fail(errc::size_cap_exceeded, "action tables are byte-indexed and cap out at 255 items");
  ActionTable table;
  table.num_items = num_items;
  table.stride = kernels::pad_for_kernel(static_cast<size_t>(num_items));

  // dedupe, drop identity
  std::vector<const std::vector<int>*> rows;
  rows.reserve(perms.size());
  for (const auto& p : perms) {
    bool ident = true;
    for (int i = 0; i < num_items && ident; ++i) ident = p[i] == i;
    if (!ident) rows.push_back(&p);
  }
  auto final_of = [num_items](const std::vector<int>& p) {
    int last = 0;
    for (int i = 0; i < num_items; ++i)
      if (p[i] != i) last = std::max({last, i, p[i]});
    return last;
  };
  // sorted by decision position so that, at any search depth, the alive list
  // starts with the permutations that become fully decided there
  std::sort(rows.begin(), rows.end(), [&](const std::vector<int>* a, const std::vector<int>* b) {
    int fa = final_of(*a), fb = final_of(*b);
    if (fa != fb) return fa < fb;
    return *a < *b;
  });
  rows.erase(std::unique(rows.begin(), rows.end(),
                         [](const std::vector<int>* a, const std::vector<int>* b) { return *a == *b; }),
             rows.end());

  table.count = rows.size();
  table.images.assign(table.count * table.stride, 0);
  table.inverses.assign(table.count * table.stride, 0);
  table.final_pos.reserve(table.count);
  for (size_t row = 0; row < rows.size(); ++row) {
    const std::vector<int>& p = *rows[row];
    uint8_t* img = table.images.data() + row * table.stride;
    uint8_t* inv = table.inverses.data() + row * table.stride;
    for (int i = 0; i < num_items; ++i) {
      img[i] = static_cast<uint8_t>(p[i]);
      inv[p[i]] = static_cast<uint8_t>(i);
    }
    table.final_pos.push_back(final_of(p));
  }
  return table;
}

ActionTable vertex_action_table(const AutomorphismGroup& aut) {
  if (!aut.enumerated) fail(errc::group_not_enumerated, "vertex action needs an enumerated group");
  std::vector<std::vector<int>> perms;
  perms.reserve(aut.elements.size());
  for (const auto& p : aut.elements) perms.push_back(p.image());
  return build_action_table(perms, aut.n);
}

ActionTable edge_action_table(const Graph& g, const AutomorphismGroup& aut) {
  if (!aut.enumerated) fail(errc::group_not_enumerated, "edge action needs an enumerated group");
  std::vector<std::vector<int>> perms;
  perms.reserve(aut.elements.size());
  for (const auto& p : aut.elements) perms.push_back(edge_permutation(g, p));
  return build_action_table(perms, g.edge_count());
}

PermGroup edge_action_group(const Graph& g, const AutomorphismGroup& aut) {
  std::vector<Permutation> gens;
  for (const auto& p : aut.generators) gens.emplace_back(edge_permutation(g, p));
  return PermGroup::from_generators(g.edge_count(), std::move(gens));
}

namespace {

bool labels_in_range(std::span<const int> labels) {
  for (int l : labels)
    if (l < 1 || l > 255) return false;
  return true;
}

bool distinguishing_against_table(const ActionTable& table, std::span<const int> labels) {
  std::vector<uint8_t> padded(kernels::pad_for_kernel(labels.size()), 0);
  for (size_t i = 0; i < labels.size(); ++i) padded[i] = static_cast<uint8_t>(labels[i]);
  return kernels::find_first_preserving(table.images.data(), table.count, table.stride, padded.data(),
                                        labels.size()) < 0;
}

}  // namespace

bool is_distinguishing_vertex_labeling(const Graph& g, const AutomorphismGroup& aut,
                                       const VertexLabeling& labeling) {
  if (!aut.enumerated)
    fail(errc::group_not_enumerated, "distinguishing check requires a fully enumerated group");
  if (static_cast<int>(labeling.labels.size()) != g.vertex_count())
    fail(errc::label_range_mismatch, "vertex labeling size mismatch");
  if (!labels_in_range(labeling.labels)) {
    // wide labels: plain loop
    for (const auto& p : aut.elements) {
      if (p.is_identity()) continue;
      bool preserved = true;
      for (int v = 0; v < g.vertex_count() && preserved; ++v)
        preserved = labeling.labels[p(v)] == labeling.labels[v];
      if (preserved) return false;
    }
    return true;
  }
  return distinguishing_against_table(vertex_action_table(aut), labeling.labels);
}

bool is_distinguishing_edge_labeling(const Graph& g, const AutomorphismGroup& aut,
                                     const EdgeLabeling& labeling) {
  if (!aut.enumerated)
    fail(errc::group_not_enumerated, "distinguishing check requires a fully enumerated group");
  if (labeling.edges != g.edges())
    fail(errc::label_range_mismatch, "edge labeling domain is not the graph's edge set");
  if (!labels_in_range(labeling.labels)) {
    for (const auto& p : aut.elements) {
      auto eperm = edge_permutation(g, p);
      bool trivial = true;
      for (size_t e = 0; e < eperm.size() && trivial; ++e) trivial = eperm[e] == static_cast<int>(e);
      if (trivial) continue;
      bool preserved = true;
      for (size_t e = 0; e < eperm.size() && preserved; ++e)
        preserved = labeling.labels[eperm[e]] == labeling.labels[e];
      if (preserved) return false;
    }
    return true;
  }
  return distinguishing_against_table(edge_action_table(g, aut), labeling.labels);
}

}  // namespace symbreak
