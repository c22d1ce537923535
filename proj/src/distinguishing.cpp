#include "symbreak/distinguishing.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>
#include <random>

#include "symbreak/isomorphism.hpp"
#include "symbreak/kernels.hpp"
#include "symbreak/products.hpp"

namespace symbreak {

SearchBudget default_budget() {
  SearchBudget b;
  if (const char* s = std::getenv("SYMBREAK_MAX_VERTICES")) b.max_vertices = std::atoi(s);
  if (const char* s = std::getenv("SYMBREAK_MAX_LABELINGS"))
    b.max_labelings_enumerated = std::strtoull(s, nullptr, 10);
  if (const char* s = std::getenv("SYMBREAK_TIME_CAP_MS")) b.time_cap_ms = std::atoll(s);
  return b;
}

// ---------------------------------------------------------------- search ---

LabelingSearch::LabelingSearch(const ActionTable& table, int num_items)
    : table_(table), num_items_(num_items) {}

namespace {

using Deadline = std::chrono::steady_clock::time_point;

Deadline deadline_from(const SearchBudget& budget) {
  if (budget.time_cap_ms <= 0) return Deadline::max();
  return std::chrono::steady_clock::now() + std::chrono::milliseconds(budget.time_cap_ms);
}

struct DfsState {
  const ActionTable& table;
  int num_items;
  int k;
  uint64_t budget;
  Deadline deadline;
  // restricted growth: try only labels 1..(used so far)+1. Sound for
  // existence and refutation (distinguishing labelings are closed under label
  // renaming, and the lexicographically least one uses labels in
  // first-appearance order); never use it to count labelings.
  bool restricted_growth;
  uint64_t nodes = 0;
  uint64_t work = 0;  // alive-list elements scanned; drives the deadline check
  uint64_t next_deadline_check = uint64_t{1} << 17;
  bool out_of_budget = false;
  std::vector<int> labels = {};
  std::vector<std::vector<uint32_t>> alive = {};
  const std::function<bool(std::span<const int>)>* on_found = nullptr;
  bool stopped = false;

  // returns false when the caller asked to stop
  bool descend(int pos, int used) {
    const uint8_t* images = table.images.data();
    const uint8_t* inverses = table.inverses.data();
    const size_t stride = table.stride;
    auto& parent = alive[pos];
    auto& child = alive[pos + 1];
    const int top = restricted_growth ? std::min(k, used + 1) : k;
    for (int c = 1; c <= top; ++c) {
      if (++nodes > budget) {
        out_of_budget = true;
        return false;
      }
      work += parent.size() + 1;
      if (work >= next_deadline_check) {
        next_deadline_check = work + (uint64_t{1} << 17);
        if (std::chrono::steady_clock::now() > deadline) {
          out_of_budget = true;
          return false;
        }
      }
      labels[pos] = c;
      child.clear();
      bool prune = false;
      // parent is ordered by decision position: permutations decided here
      // come first, so hopeless branches are detected before any copying
      for (uint32_t idx : parent) {
        const uint8_t* img = images + idx * stride;
        const uint8_t* inv = inverses + idx * stride;
        int a = img[pos];
        if (a < pos && labels[a] != c) continue;  // killed
        int b = inv[pos];
        if (b < pos && labels[b] != c) continue;  // killed
        if (table.final_pos[idx] == pos) {
          prune = true;  // fully decided and still consistent
          break;
        }
        child.push_back(idx);
      }
      if (prune) continue;
      if (pos + 1 == num_items) {
        if (!(*on_found)(std::span<const int>(labels.data(), num_items))) {
          stopped = true;
          return false;
        }
        continue;
      }
      if (!descend(pos + 1, std::max(used, c))) return false;
    }
    return true;
  }
};

}  // namespace

SearchOutcome LabelingSearch::enumerate(int k, uint64_t node_budget,
                                        const std::function<bool(std::span<const int>)>& on_found,
                                        bool restricted_growth) {
  SearchOutcome out;
  if (num_items_ == 0) {
    // the empty labeling is distinguishing iff no nontrivial action exists
    if (table_.count == 0) on_found(std::span<const int>());
    out.status = SearchOutcome::Status::refuted;
    return out;
  }
  Deadline deadline = time_cap_ms_ <= 0 ? Deadline::max()
                                        : std::chrono::steady_clock::now() +
                                              std::chrono::milliseconds(time_cap_ms_);
  DfsState state{table_, num_items_, k, node_budget, deadline, restricted_growth};
  state.labels.assign(num_items_, 0);
  state.on_found = &on_found;
  state.alive.resize(num_items_ + 1);
  state.alive[0].resize(table_.count);
  for (uint32_t i = 0; i < table_.count; ++i) state.alive[0][i] = i;
  state.descend(0, 0);
  out.nodes = state.nodes;
  if (state.stopped)
    out.status = SearchOutcome::Status::found;
  else if (state.out_of_budget)
    out.status = SearchOutcome::Status::budget;
  else
    out.status = SearchOutcome::Status::refuted;
  return out;
}

SearchOutcome LabelingSearch::find_first(int k, uint64_t node_budget) {
  std::vector<int> found;
  SearchOutcome out = enumerate(
      k, node_budget,
      [&](std::span<const int> labels) {
        found.assign(labels.begin(), labels.end());
        return false;
      },
      /*restricted_growth=*/true);
  if (num_items_ == 0 && table_.count == 0) {
    out.status = SearchOutcome::Status::found;
    out.labeling = {};
    return out;
  }
  if (out.status == SearchOutcome::Status::found) out.labeling = std::move(found);
  return out;
}

// ------------------------------------------------------------- the solver ---

namespace {

bool table_preserves(const ActionTable& table, std::span<const int> labels) {
  std::vector<uint8_t> padded(kernels::pad_for_kernel(labels.size()), 0);
  for (size_t i = 0; i < labels.size(); ++i) padded[i] = static_cast<uint8_t>(labels[i]);
  return kernels::find_first_preserving(table.images.data(), table.count, table.stride, padded.data(),
                                        labels.size()) >= 0;
}

std::vector<int> all_distinct_labels(int n) {
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = i + 1;
  return out;
}

// Exact search given a (deduplicated, nontrivial) action table.
DistinguishingResult solve_with_table(const ActionTable& table, int num_items,
                                      const SearchBudget& budget, uint64_t seed) {
  DistinguishingResult result;
  if (table.count == 0) {
    result.value = num_items == 0 ? 0 : 1;
    result.certificate.assign(num_items, 1);
    result.exhaustive_lower_bound_proof = true;
    return result;
  }
  LabelingSearch search(table, num_items);
  search.set_time_cap(budget.time_cap_ms);
  const Deadline deadline = deadline_from(budget);
  // k = 1 is refuted by the existence of a nontrivial action
  bool all_refuted_exactly = true;
  const bool attempt_full = num_items <= budget.max_vertices;
  const uint64_t per_level_budget =
      attempt_full ? budget.max_labelings_enumerated
                   : std::min<uint64_t>(budget.max_labelings_enumerated, 500'000);
  for (int k = 2; k <= num_items + 1; ++k) {
    SearchOutcome outcome = search.find_first(k, per_level_budget);
    result.nodes_explored += outcome.nodes;
    if (outcome.status == SearchOutcome::Status::found) {
      result.value = k;
      result.certificate = std::move(outcome.labeling);
      result.exhaustive_lower_bound_proof = all_refuted_exactly;
      return result;
    }
    if (outcome.status == SearchOutcome::Status::refuted) continue;
    // budget hit: randomized certified upper bounds from here on
    all_refuted_exactly = false;
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + k);
    for (int k2 = k; k2 <= num_items; ++k2) {
      std::uniform_int_distribution<int> pick(1, k2);
      std::vector<int> trial(num_items);
      for (int t = 0; t < 4000; ++t) {
        if ((t & 0xff) == 0 && std::chrono::steady_clock::now() > deadline) break;
        for (int i = 0; i < num_items; ++i) trial[i] = pick(rng);
        if (!table_preserves(table, trial)) {
          result.value = k2;
          result.certificate = trial;
          result.exhaustive_lower_bound_proof = k2 == 2;  // k=1 was refuted exactly
          return result;
        }
      }
    }
    result.value = num_items;
    result.certificate = all_distinct_labels(num_items);
    result.exhaustive_lower_bound_proof = false;
    return result;
  }
  // unreachable: all-distinct labelings are always distinguishing
  fail(errc::domain_error, "labeling search failed to terminate");
}

AutomorphismGroup group_for_solver(const Graph& g) {
  AutOptions opts = default_aut_options();
  opts.vertex_cap = std::max(opts.vertex_cap, g.vertex_count());
  return automorphism_group(g, opts);
}

// min k such that at least `want` pairwise inequivalent distinguishing
// k-labelings exist; returns the lexicographically least representatives.
struct ClassRequirement {
  int k = 0;
  std::vector<std::vector<int>> labelings;
  bool exhaustive = true;
  uint64_t nodes = 0;
};

ClassRequirement class_requirement(const ActionTable& table,
                                   const std::vector<std::vector<int>>& acting_perms, int num_items,
                                   uint64_t want, const SearchBudget& budget) {
  ClassRequirement req;
  LabelingSearch search(table, num_items);
  search.set_time_cap(budget.time_cap_ms);
  std::vector<int> composed(num_items);
  auto is_orbit_minimum = [&](std::span<const int> labels) {
    for (const auto& perm : acting_perms) {
      for (int i = 0; i < num_items; ++i) composed[i] = labels[perm[i]];
      if (std::lexicographical_compare(composed.begin(), composed.end(), labels.begin(), labels.end()))
        return false;
    }
    return true;
  };
  for (int k = 1;; ++k) {
    if (k > num_items + static_cast<int>(want) + 1)
      fail(errc::budget_exceeded, "class requirement search failed to terminate");
    req.labelings.clear();
    SearchOutcome outcome = search.enumerate(
        k, budget.max_labelings_enumerated,
        [&](std::span<const int> labels) {
          // the lex-first hit is always its orbit's minimum
          if (!req.labelings.empty() && !is_orbit_minimum(labels)) return true;
          req.labelings.emplace_back(labels.begin(), labels.end());
          return req.labelings.size() < want;
        },
        /*restricted_growth=*/want == 1);
    req.nodes += outcome.nodes;
    if (outcome.status == SearchOutcome::Status::found && req.labelings.size() >= want) {
      req.k = k;
      return req;
    }
    if (outcome.status == SearchOutcome::Status::budget) {
      req.exhaustive = false;
      if (req.labelings.size() >= want) {
        req.k = k;
        return req;
      }
      fail(errc::budget_exceeded, "class counting exceeded the labeling budget");
    }
    // refuted: fewer than `want` classes exist with k labels; try k+1
  }
}

struct ComponentData {
  Graph graph;
  std::vector<int> vertices;  // ascending global ids
};

DistinguishingResult solve_by_components(const Graph& g, LabelKind kind, const SearchBudget& budget);

DistinguishingResult solve_kind(const Graph& g, LabelKind kind, const SearchBudget& budget,
                                uint64_t seed) {
  const int n = g.vertex_count();
  if (kind == LabelKind::edge && g.edge_count() == 0)
    fail(errc::no_edges, "distinguishing index needs at least one edge");
  if (n == 0) return DistinguishingResult{0, {}, true, 0};

  AutomorphismGroup aut = group_for_solver(g);
  const uint64_t enum_cap = default_aut_options().enumeration_cap;

  if (kind == LabelKind::vertex) {
    if (aut.order == 1) return DistinguishingResult{1, std::vector<int>(n, 1), true, 0};
    if (aut.enumerated) {
      ActionTable table = vertex_action_table(aut);
      return solve_with_table(table, n, budget, seed);
    }
  } else {
    PermGroup edge_group = edge_action_group(g, aut);
    if (edge_group.order() == 1)
      return DistinguishingResult{1, std::vector<int>(g.edge_count(), 1), true, 0};
    if (edge_group.order() <= enum_cap) {
      auto elements = edge_group.enumerate(enum_cap);
      std::vector<std::vector<int>> perms;
      perms.reserve(elements.size());
      for (const auto& p : elements) perms.push_back(p.image());
      ActionTable table = build_action_table(perms, g.edge_count());
      return solve_with_table(table, g.edge_count(), budget, seed);
    }
  }

  if (connected_components(g).classes.size() > 1) return solve_by_components(g, kind, budget);

  // connected and too symmetric to enumerate: certified fallback
  if (kind == LabelKind::vertex) {
    // verify candidates by computing the labeling-stabilizer order directly
    std::mt19937_64 rng(seed * 0x2545f4914f6cdd1dULL + 17);
    for (int k = 2; k <= n; ++k) {
      std::uniform_int_distribution<int> pick(1, k);
      std::vector<int> trial(n);
      for (int t = 0; t < 200; ++t) {
        for (int i = 0; i < n; ++i) trial[i] = pick(rng);
        AutOptions opts = default_aut_options();
        opts.vertex_cap = std::max(opts.vertex_cap, n);
        if (automorphism_group_colored(g, trial, opts).order == 1)
          return DistinguishingResult{k, trial, k == 2, 0};
      }
    }
    return DistinguishingResult{n, all_distinct_labels(n), false, 0};
  }
  // all-distinct edge labels are preserved only by edge-identity actions
  return DistinguishingResult{g.edge_count(), all_distinct_labels(g.edge_count()), false, 0};
}

DistinguishingResult solve_by_components(const Graph& g, LabelKind kind, const SearchBudget& budget) {
  Partition comps = connected_components(g);
  std::vector<ComponentData> parts;
  for (auto& cls : comps.classes) {
    ComponentData data{induced_subgraph(g, cls), cls};
    if (kind == LabelKind::edge && data.graph.edge_count() == 0) continue;  // edge-trivial
    parts.push_back(std::move(data));
  }

  // group components into isomorphism classes
  std::vector<std::vector<size_t>> classes;
  for (size_t i = 0; i < parts.size(); ++i) {
    bool placed = false;
    for (auto& members : classes) {
      const Graph& rep = parts[members[0]].graph;
      int cap = std::max(rep.vertex_count(), parts[i].graph.vertex_count());
      if (are_isomorphic(rep, parts[i].graph, cap)) {
        members.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({i});
  }

  DistinguishingResult result;
  result.exhaustive_lower_bound_proof = true;
  const uint64_t enum_cap = std::max<uint64_t>(default_aut_options().enumeration_cap, 1'000'000);
  const int total_items = kind == LabelKind::vertex ? g.vertex_count() : g.edge_count();
  result.certificate.assign(total_items, 1);

  // global edge index lookup for edge certificates
  std::map<std::pair<int, int>, int> edge_index;
  if (kind == LabelKind::edge) {
    auto edges = g.edges();
    for (size_t e = 0; e < edges.size(); ++e) edge_index[edges[e]] = static_cast<int>(e);
  }

  for (auto& members : classes) {
    const Graph& rep = parts[members[0]].graph;
    AutOptions opts = default_aut_options();
    opts.vertex_cap = std::max(opts.vertex_cap, rep.vertex_count());
    // per-component enumeration keeps the built-in headroom even when the
    // whole-graph cap was tightened
    opts.enumeration_cap = std::max<uint64_t>(opts.enumeration_cap, 1'000'000);
    AutomorphismGroup aut = automorphism_group(rep, opts);

    std::vector<std::vector<int>> acting;
    int num_items;
    if (kind == LabelKind::vertex) {
      if (!aut.enumerated)
        fail(errc::enumeration_cap_exceeded, "component group too large to enumerate");
      num_items = rep.vertex_count();
      for (const auto& p : aut.elements) acting.push_back(p.image());
    } else {
      PermGroup edge_group = edge_action_group(rep, aut);
      num_items = rep.edge_count();
      for (const auto& p : edge_group.enumerate(enum_cap)) acting.push_back(p.image());
    }
    ActionTable table = build_action_table(acting, num_items);
    ClassRequirement req = class_requirement(table, acting, num_items, members.size(), budget);
    result.nodes_explored += req.nodes;
    result.value = std::max(result.value, req.k);
    result.exhaustive_lower_bound_proof =
        result.exhaustive_lower_bound_proof && req.exhaustive;

    for (size_t copy = 0; copy < members.size(); ++copy) {
      const ComponentData& part = parts[members[copy]];
      // isomorphism from the representative onto this copy (in local indices)
      std::vector<int> to_copy(part.graph.vertex_count());
      if (copy == 0) {
        for (size_t i = 0; i < to_copy.size(); ++i) to_copy[i] = static_cast<int>(i);
      } else {
        auto iso = find_isomorphism(rep, part.graph,
                                    std::max(rep.vertex_count(), part.graph.vertex_count()));
        to_copy = *iso;
      }
      const std::vector<int>& labeling = req.labelings[copy];
      if (kind == LabelKind::vertex) {
        for (int v = 0; v < rep.vertex_count(); ++v)
          result.certificate[part.vertices[to_copy[v]]] = labeling[v];
      } else {
        auto rep_edges = rep.edges();
        for (size_t e = 0; e < rep_edges.size(); ++e) {
          int u = part.vertices[to_copy[rep_edges[e].first]];
          int v = part.vertices[to_copy[rep_edges[e].second]];
          if (u > v) std::swap(u, v);
          result.certificate[edge_index.at({u, v})] = labeling[e];
        }
      }
    }
  }
  return result;
}

}  // namespace

DistinguishingResult distinguishing_number(const Graph& g, const SearchBudget& budget, uint64_t seed) {
  return solve_kind(g, LabelKind::vertex, budget, seed);
}

DistinguishingResult distinguishing_index(const Graph& g, const SearchBudget& budget, uint64_t seed) {
  return solve_kind(g, LabelKind::edge, budget, seed);
}

uint64_t count_inequivalent_distinguishing(const Graph& g, int k, LabelKind kind,
                                           const SearchBudget& budget) {
  const int num_items = kind == LabelKind::vertex ? g.vertex_count() : g.edge_count();
  if (k == 0) return num_items == 0 ? 1 : 0;
  if (num_items == 0) return 1;
  if (k > 255) fail(errc::domain_error, "label alphabets are capped at 255");

  double space = 1;
  for (int i = 0; i < num_items; ++i) {
    space *= k;
    if (space > static_cast<double>(budget.max_labelings_enumerated))
      fail(errc::budget_exceeded, "k^items exceeds the labeling budget");
  }

  AutomorphismGroup aut = group_for_solver(g);
  if (!aut.enumerated)
    fail(errc::enumeration_cap_exceeded, "counting requires a fully enumerated group");
  ActionTable table =
      kind == LabelKind::vertex ? vertex_action_table(aut) : edge_action_table(g, aut);
  const uint64_t action_size = table.count + 1;  // plus identity

  std::vector<int> labels(num_items, 1);
  std::vector<uint8_t> padded(kernels::pad_for_kernel(num_items), 0);
  uint64_t distinguishing = 0;
  while (true) {
    for (int i = 0; i < num_items; ++i) padded[i] = static_cast<uint8_t>(labels[i]);
    if (kernels::find_first_preserving(table.images.data(), table.count, table.stride, padded.data(),
                                       num_items) < 0)
      ++distinguishing;
    int pos = num_items - 1;
    while (pos >= 0 && labels[pos] == k) {
      labels[pos] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++labels[pos];
  }
  if (distinguishing % action_size != 0)
    fail(errc::domain_error, "distinguishing labeling count is not divisible by the action size");
  return distinguishing / action_size;
}

EdgeLabeling lift_kronecker_edge_labeling(const Graph& g, const EdgeLabeling& lg, const Graph& h,
                                          const EdgeLabeling& lh, int a, int b,
                                          const EdgeLabeling& lk) {
  for (int l : lg.labels)
    if (l < 1 || l > a) fail(errc::label_range_mismatch, "factor labeling exceeds range 1..a");
  for (int l : lh.labels)
    if (l < 1 || l > b) fail(errc::label_range_mismatch, "factor labeling exceeds range 1..b");
  Graph pattern = complete_bipartite_graph(a, b);
  if (lk.edges != pattern.edges())
    fail(errc::label_range_mismatch, "pattern labeling is not over K_{a,b}");
  if (lg.edges != g.edges() || lh.edges != h.edges())
    fail(errc::label_range_mismatch, "factor labeling domain mismatch");

  Graph product = kronecker(g, h);
  std::map<std::pair<int, int>, int> edge_index;
  auto product_edges = product.edges();
  for (size_t e = 0; e < product_edges.size(); ++e) edge_index[product_edges[e]] = static_cast<int>(e);

  const int nh = h.vertex_count();
  std::vector<int> labels(product_edges.size(), 0);
  auto assign = [&](int x1, int y1, int x2, int y2, int label) {
    int u = x1 * nh + y1, v = x2 * nh + y2;
    if (u > v) std::swap(u, v);
    labels[edge_index.at({u, v})] = label;
  };
  for (size_t eg = 0; eg < lg.edges.size(); ++eg) {
    auto [v, vp] = lg.edges[eg];
    int i = lg.labels[eg];
    for (size_t eh = 0; eh < lh.edges.size(); ++eh) {
      auto [w, wp] = lh.edges[eh];
      int p = lh.labels[eh];
      int pattern_label = lk.label_of(i - 1, a + p - 1);
      assign(v, w, vp, wp, pattern_label);
      assign(v, wp, vp, w, pattern_label);
    }
  }
  return make_edge_labeling(product, std::move(labels));
}

}  // namespace symbreak
