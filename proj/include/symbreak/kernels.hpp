#pragma once

#include <cstddef>
#include <cstdint>

namespace symbreak::kernels {

// Core inner loop of every distinguishing-labeling check: does the
// permutation preserve the labeling, i.e. labels[perm[i]] == labels[i] for
// all i < n? perm entries are < n and n <= 255.
bool labels_preserved_scalar(const uint8_t* perm, const uint8_t* labels, size_t n);

#if defined(SYMBREAK_HAVE_AVX2_TU)
// AVX2 variant for n <= 32; callers must provide 32 readable bytes in both
// buffers (entries past n are ignored).
bool labels_preserved_avx2(const uint8_t* perm, const uint8_t* labels, size_t n);
#endif

bool cpu_has_avx2();

// Runtime-dispatched check. For n <= 32 on AVX2 hardware both buffers must
// be readable for 32 bytes; pad_for_kernel() sizes buffers accordingly.
bool labels_preserved(const uint8_t* perm, const uint8_t* labels, size_t n);

constexpr size_t pad_for_kernel(size_t n) { return n <= 32 ? 32 : n; }

// Scans a table of permutations (fixed stride, >= pad_for_kernel(n)) and
// returns the index of the first one preserving the labels, or -1.
long find_first_preserving(const uint8_t* table, size_t count, size_t stride, const uint8_t* labels,
                           size_t n);

}  // namespace symbreak::kernels
