#include "symbreak/families.hpp"

#include <algorithm>

namespace symbreak {

FormulaResult FormulaResult::exact(int64_t v) {
  if (v < 1) fail(errc::domain_error, "formula values are at least 1");
  return {Kind::exact, v, 0, false};
}

FormulaResult FormulaResult::interval(int64_t lo) {
  if (lo < 1) fail(errc::domain_error, "formula values are at least 1");
  return {Kind::interval, lo, lo + 1, false};
}

FormulaResult FormulaResult::upper(int64_t v, bool from_fallback) {
  if (v < 1) fail(errc::domain_error, "formula values are at least 1");
  return {Kind::upper_bound, v, 0, from_fallback};
}

bool FormulaResult::admits(int64_t observed) const {
  switch (kind) {
    case Kind::exact: return observed == value;
    case Kind::interval: return observed == value || observed == hi;
    case Kind::upper_bound: return observed <= value;
  }
  return false;
}

std::string FormulaResult::to_string() const {
  switch (kind) {
    case Kind::exact: return "exact " + std::to_string(value);
    case Kind::interval: return "interval {" + std::to_string(value) + "," + std::to_string(hi) + "}";
    case Kind::upper_bound: return "upper_bound " + std::to_string(value);
  }
  return "?";
}

MultipartiteSpec::MultipartiteSpec(std::vector<std::pair<int64_t, int64_t>> p) : parts(std::move(p)) {
  if (parts.empty()) fail(errc::domain_error, "multipartite spec needs at least one part size");
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].first < 1 || parts[i].second < 1)
      fail(errc::domain_error, "part sizes and multiplicities are positive");
    if (i > 0 && parts[i - 1].first <= parts[i].first)
      fail(errc::domain_error, "part sizes must be strictly decreasing");
  }
}

namespace {
// overflow-safe power comparison: base^exp vs limit
bool power_at_most(int64_t base, int64_t exp, int64_t limit) {
  int64_t acc = 1;
  for (int64_t i = 0; i < exp; ++i) {
    if (acc > limit / base) return false;
    acc *= base;
    if (acc > limit) return false;
  }
  return true;
}
}  // namespace

int64_t integer_kth_root_floor(int64_t n, int64_t k) {
  if (n < 1 || k < 1) fail(errc::domain_error, "kth root needs positive arguments");
  int64_t r = 1;
  while (power_at_most(r + 1, k, n)) ++r;
  return r;
}

int64_t ceil_log_base(int64_t base, int64_t value) {
  if (base < 2 || value < 1) fail(errc::domain_error, "log needs base >= 2, value >= 1");
  int64_t t = 0, acc = 1;
  while (acc < value) {
    acc *= base;
    ++t;
  }
  return t;
}

int64_t binomial_capped(int64_t p, int64_t a, int64_t cap) {
  if (a < 0 || a > p) return 0;
  a = std::min(a, p - a);
  int64_t result = 1;
  for (int64_t i = 1; i <= a; ++i) {
    result = result * (p - a + i) / i;  // exact at every step
    if (result > cap) return cap + 1;
  }
  return result;
}

FormulaResult d_kron_complete(int64_t k, int64_t n) {
  if (k < 2 || n < 2) fail(errc::domain_error, "d_kron_complete needs k, n >= 2");
  if (k > n) std::swap(k, n);  // K_k x K_n is symmetric, the thresholds are not
  // the threshold rule misses the two smallest squares
  if (k == 2 && n == 2) return FormulaResult::exact(3);  // D(2K_2) = D(C_4) = 3
  if (k == 3 && n == 3) return FormulaResult::exact(3);  // D(K_3 x K_3) = 3

  // d = ceil(n^(1/k)) by integer root: bump the floor root when d^k < n
  int64_t d = integer_kth_root_floor(n, k);
  if (power_at_most(d, k, n - 1)) ++d;
  if (d < 2) fail(errc::domain_error, "threshold formula needs d >= 2");
  // re-check the defining inequality (d-1)^k < n <= d^k with plain integers
  if (!power_at_most(d - 1, k, n - 1) || power_at_most(d, k, n - 1))
    fail(errc::domain_error, "root computation failed the defining inequality");

  int64_t correction = ceil_log_base(d, k);  // ceil(log_d k)
  // threshold = d^k - correction
  int64_t dk = 1;
  for (int64_t i = 0; i < k; ++i) dk *= d;
  int64_t threshold = dk - correction;
  if (n <= threshold - 1) return FormulaResult::exact(d);
  if (n >= threshold + 1) return FormulaResult::exact(d + 1);
  return FormulaResult::interval(d);
}

FormulaResult d_complete_multipartite(const MultipartiteSpec& spec) {
  for (int64_t p = 1;; ++p) {
    bool ok = true;
    for (auto [a, j] : spec.parts)
      if (binomial_capped(p, a, j) < j) {
        ok = false;
        break;
      }
    if (ok) return FormulaResult::exact(p);
  }
}

FormulaResult d_kron_complete_bipartite(int64_t m, int64_t n, int64_t p, int64_t q) {
  if (n < 1 || p < 1) fail(errc::domain_error, "part sizes are positive");
  if (m < n || q < p)
    fail(errc::precondition_violated, "d_kron_complete_bipartite needs m >= n and q >= p");
  if (m == n && p == q) return FormulaResult::exact(m * q + 1);
  return FormulaResult::exact(m * q);
}

FormulaResult d_kron_stars(int64_t n, int64_t m) {
  if (n < 3 || m < 3)
    fail(errc::domain_error, "d_kron_stars needs n, m >= 3; use d_kron_complete_bipartite below that");
  return FormulaResult::exact(n * m);
}

FormulaResult dprime_k2_power(int64_t k) {
  if (k < 2 || k > 62) fail(errc::domain_error, "dprime_k2_power needs 2 <= k <= 62");
  return FormulaResult::exact(int64_t{1} << (k - 1));
}

FormulaResult dprime_kron_paths(int64_t m, int64_t n) {
  if (m < 2 || n < 2) fail(errc::domain_error, "dprime_kron_paths needs m, n >= 2");
  if (m < n) std::swap(m, n);
  if (m == 3 && n == 2) return FormulaResult::exact(3);
  if (m == 3 && n == 3) return FormulaResult::exact(4);
  return FormulaResult::exact(2);
}

FormulaResult dprime_kron_path_star(int64_t m, int64_t n) {
  if (m < 2 || n < 2) fail(errc::domain_error, "dprime_kron_path_star needs m, n >= 2");
  if (m == 2) return FormulaResult::exact(n + 1);
  if (m == 3) return FormulaResult::exact(2 * n);
  return FormulaResult::exact(n);
}

FormulaResult dprime_kron_stars(int64_t n, int64_t m) {
  if (m < 3) fail(errc::domain_error, "dprime_kron_stars needs m >= 3");
  if (n < m) fail(errc::precondition_violated, "dprime_kron_stars needs n >= m");
  return FormulaResult::exact(n * m);
}

FormulaResult dprime_bipartite_upper(int64_t n, int64_t m) {
  if (m < 1 || n < m) fail(errc::domain_error, "dprime_bipartite_upper needs n >= m >= 1");
  int64_t root = integer_kth_root_floor(n, m);
  if (power_at_most(root, m, n - 1)) ++root;  // ceiling
  return FormulaResult::upper(root + 1);
}

FormulaResult dprime_kron_upper(int64_t a, int64_t b, const SearchBudget& budget) {
  if (a < 1 || b < 1 || std::max(a, b) < 2)
    fail(errc::domain_error, "dprime_kron_upper needs a, b >= 1 with max(a, b) >= 2");
  int64_t edges = a * b;
  if (edges <= budget.max_vertices) {
    Graph pattern = complete_bipartite_graph(static_cast<int>(a), static_cast<int>(b));
    DistinguishingResult solved = distinguishing_index(pattern, budget);
    if (solved.exhaustive_lower_bound_proof) return FormulaResult::upper(solved.value);
  }
  FormulaResult bound = dprime_bipartite_upper(std::max(a, b), std::min(a, b));
  return FormulaResult::upper(bound.value, /*from_fallback=*/true);
}

}  // namespace symbreak
