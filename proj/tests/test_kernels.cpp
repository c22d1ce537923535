#include <numeric>
#include <random>

#include "doctest.h"
#include "symbreak/kernels.hpp"

using namespace symbreak::kernels;

TEST_CASE("scalar kernel semantics") {
  uint8_t identity[4] = {0, 1, 2, 3};
  uint8_t swap01[4] = {1, 0, 2, 3};
  uint8_t labels[4] = {5, 5, 7, 9};
  CHECK(labels_preserved_scalar(identity, labels, 4));
  CHECK(labels_preserved_scalar(swap01, labels, 4));
  uint8_t labels2[4] = {5, 6, 7, 9};
  CHECK(!labels_preserved_scalar(swap01, labels2, 4));
}

TEST_CASE("simd variant agrees with the scalar reference") {
  if (!cpu_has_avx2()) {
    MESSAGE("AVX2 not available; dispatched kernel is the scalar one");
    return;
  }
  std::mt19937 rng(67);
  for (int n = 1; n <= 32; ++n) {
    for (int trial = 0; trial < 400; ++trial) {
      std::vector<uint8_t> perm(pad_for_kernel(n), 0);
      std::vector<uint8_t> labels(pad_for_kernel(n), 0);
      std::vector<uint8_t> p(n);
      std::iota(p.begin(), p.end(), 0);
      std::shuffle(p.begin(), p.end(), rng);
      for (int i = 0; i < n; ++i) perm[i] = p[i];
      // small label alphabet makes both outcomes common
      std::uniform_int_distribution<int> lab(1, trial % 2 ? 2 : 4);
      for (int i = 0; i < n; ++i) labels[i] = static_cast<uint8_t>(lab(rng));
      bool scalar = labels_preserved_scalar(perm.data(), labels.data(), n);
      bool simd = labels_preserved(perm.data(), labels.data(), n);
      REQUIRE(scalar == simd);
    }
  }
}

TEST_CASE("dispatch handles sizes above the vector width") {
  std::mt19937 rng(71);
  for (int n : {33, 40, 64, 100}) {
    std::vector<uint8_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<uint8_t> labels(n, 1);
    CHECK(labels_preserved(perm.data(), labels.data(), n));
    labels[n / 2] = 2;
    bool scalar = labels_preserved_scalar(perm.data(), labels.data(), n);
    CHECK(labels_preserved(perm.data(), labels.data(), n) == scalar);
  }
}

TEST_CASE("find_first_preserving") {
  // three perms on 3 items: rotation, swap, identity-like fixed under labels
  std::vector<uint8_t> table(3 * pad_for_kernel(3), 0);
  uint8_t rot[3] = {1, 2, 0}, swp[3] = {1, 0, 2}, fix[3] = {0, 2, 1};
  std::copy(rot, rot + 3, table.begin());
  std::copy(swp, swp + 3, table.begin() + pad_for_kernel(3));
  std::copy(fix, fix + 3, table.begin() + 2 * pad_for_kernel(3));
  std::vector<uint8_t> labels(pad_for_kernel(3), 0);
  labels[0] = 1, labels[1] = 1, labels[2] = 2;
  // rot maps labels (1,1,2)->(1,2,1) mismatch; swp preserves
  CHECK(find_first_preserving(table.data(), 3, pad_for_kernel(3), labels.data(), 3) == 1);
  labels[1] = 3;
  CHECK(find_first_preserving(table.data(), 3, pad_for_kernel(3), labels.data(), 3) == -1);
}
