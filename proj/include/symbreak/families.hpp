#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symbreak/distinguishing.hpp"

namespace symbreak {

struct FormulaResult {
  enum class Kind { exact, interval, upper_bound };
  Kind kind = Kind::exact;
  int64_t value = 1;          // exact value, lower interval endpoint, or bound
  int64_t hi = 0;             // value + 1 for intervals
  bool fallback = false;      // upper_bound produced by a fallback route

  static FormulaResult exact(int64_t v);
  static FormulaResult interval(int64_t lo);
  static FormulaResult upper(int64_t v, bool from_fallback = false);

  bool admits(int64_t observed) const;  // exact match / membership / bound
  std::string to_string() const;
  bool operator==(const FormulaResult&) const = default;
};

// j_i parts of size a_i, sizes strictly decreasing
struct MultipartiteSpec {
  std::vector<std::pair<int64_t, int64_t>> parts;  // (a_i, j_i)
  explicit MultipartiteSpec(std::vector<std::pair<int64_t, int64_t>> p);
};

// D(K_k x K_n) threshold evaluation with d = ceil(n^(1/k)), integer arithmetic
// throughout. The quantity is symmetric in (k, n) while the thresholds are
// not, so arguments are sorted first; D(K_2 x K_2) = D(2K_2) = 3 and
// D(K_3 x K_3) = 3 do not follow the thresholds and are returned exactly.
FormulaResult d_kron_complete(int64_t k, int64_t n);

// min p with C(p, a_i) >= j_i for all i
FormulaResult d_complete_multipartite(const MultipartiteSpec& spec);

// D(K_{m,n} x K_{p,q}) with m >= n, q >= p: mq + 1 when m == n and p == q,
// else mq
FormulaResult d_kron_complete_bipartite(int64_t m, int64_t n, int64_t p, int64_t q);

// D(K_{1,n} x K_{1,m}) = nm for n, m >= 3
FormulaResult d_kron_stars(int64_t n, int64_t m);

// D'(x K_2^k) = 2^(k-1) for k >= 2
FormulaResult dprime_k2_power(int64_t k);

// D'(P_m x P_n): 3 for {3,2}, 4 for {3,3}, else 2 (order-insensitive)
FormulaResult dprime_kron_paths(int64_t m, int64_t n);

// D'(P_m x K_{1,n}): n for m >= 4, n+1 for m = 2, 2n for m = 3
FormulaResult dprime_kron_path_star(int64_t m, int64_t n);

// D'(K_{1,n} x K_{1,m}) = nm for n >= m >= 3
FormulaResult dprime_kron_stars(int64_t n, int64_t m);

// D'(K_{n,m}) <= ceil(n^(1/m)) + 1 for n >= m >= 1
FormulaResult dprime_bipartite_upper(int64_t n, int64_t m);

// D'(G x H) <= D'(K_{D'(G),D'(H)}): solves the pattern graph exactly when it
// fits the budget, otherwise falls back to the root bound (flagged)
FormulaResult dprime_kron_upper(int64_t a, int64_t b, const SearchBudget& budget = default_budget());

// exact integer helpers (exposed for tests)
int64_t integer_kth_root_floor(int64_t n, int64_t k);  // largest r with r^k <= n
int64_t ceil_log_base(int64_t base, int64_t value);    // smallest t with base^t >= value
int64_t binomial_capped(int64_t p, int64_t a, int64_t cap);

}  // namespace symbreak
