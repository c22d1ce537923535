#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "symbreak/automorphisms.hpp"
#include "symbreak/graph.hpp"

namespace symbreak {

struct SearchBudget {
  // max item count (vertices for D, edges for D') for attempting exhaustive
  // per-level refutation; larger instances get searched certificates with
  // exhaustive proofs only where a level completes anyway
  int max_vertices = 12;
  // node cap per search level
  uint64_t max_labelings_enumerated = 10'000'000;
  // wall clock safety, 0 = off (never rely on it for results)
  int64_t time_cap_ms = 0;
};

// Reads SYMBREAK_MAX_VERTICES / SYMBREAK_MAX_LABELINGS / SYMBREAK_TIME_CAP_MS.
SearchBudget default_budget();

struct DistinguishingResult {
  int value = 0;
  // labels 1..value per item: vertex index for D, sorted-edge index for D'
  std::vector<int> certificate;
  // every level below value was exhaustively refuted
  bool exhaustive_lower_bound_proof = false;
  uint64_t nodes_explored = 0;
};

DistinguishingResult distinguishing_number(const Graph& g, const SearchBudget& budget = default_budget(),
                                           uint64_t seed = 1);
DistinguishingResult distinguishing_index(const Graph& g, const SearchBudget& budget = default_budget(),
                                          uint64_t seed = 1);

enum class LabelKind { vertex, edge };

// Number of orbits of distinguishing k-labelings under the automorphism
// action (edge labelings: under the induced edge action). Enumerates all
// k^items labelings; throws budget_exceeded beyond the labeling cap.
uint64_t count_inequivalent_distinguishing(const Graph& g, int k, LabelKind kind,
                                           const SearchBudget& budget = default_budget());

// Edge labeling of kronecker(g, h) obtained by routing each (g-edge label i,
// h-edge label p) pair through the label of edge {z_i, z'_p} of the complete
// bipartite pattern K_{a,b} (vertices 0..a-1 and a..a+b-1); both diagonal
// product edges of a factor-edge pair receive the same label.
EdgeLabeling lift_kronecker_edge_labeling(const Graph& g, const EdgeLabeling& lg, const Graph& h,
                                          const EdgeLabeling& lh, int a, int b, const EdgeLabeling& lk);

// --- search engine (exposed for tests and the verify harness) ---

struct SearchOutcome {
  enum class Status { found, refuted, budget } status;
  std::vector<int> labeling;
  uint64_t nodes = 0;
};

// Lexicographic DFS over item labelings with incremental automorphism
// bookkeeping: a permutation, once violated, stays violated; a branch dies
// when a fully-decided permutation is still consistent. Every leaf reached is
// a distinguishing labeling; exhausting the tree refutes existence.
class LabelingSearch {
 public:
  LabelingSearch(const ActionTable& table, int num_items);
  // wall-clock cap per search call; 0 disables it. Deadline expiry reports as
  // a budget outcome.
  void set_time_cap(int64_t ms) { time_cap_ms_ = ms; }
  SearchOutcome find_first(int k, uint64_t node_budget);
  // enumerate distinguishing k-labelings in lexicographic order; stop early
  // when on_found returns false (status found); refuted = tree exhausted.
  // restricted_growth limits labels to first-appearance order: sound for
  // existence and refutation, wrong for counting.
  SearchOutcome enumerate(int k, uint64_t node_budget,
                          const std::function<bool(std::span<const int>)>& on_found,
                          bool restricted_growth = false);

 private:
  const ActionTable& table_;
  int num_items_;
  int64_t time_cap_ms_ = 0;
};

}  // namespace symbreak
