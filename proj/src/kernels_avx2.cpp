#include <immintrin.h>

#include "symbreak/kernels.hpp"

namespace symbreak::kernels {

// Gather labels through a byte permutation with in-register shuffles and
// compare against the original. _mm256_shuffle_epi8 only shuffles within
// 128-bit lanes, so both 16-byte halves of the label vector are broadcast
// across lanes and selected per index.
bool labels_preserved_avx2(const uint8_t* perm, const uint8_t* labels, size_t n) {
  const __m256i p = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(perm));
  const __m256i l = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(labels));
  const __m256i lo = _mm256_permute2x128_si256(l, l, 0x00);
  const __m256i hi = _mm256_permute2x128_si256(l, l, 0x11);
  const __m256i from_lo = _mm256_shuffle_epi8(lo, p);
  const __m256i from_hi = _mm256_shuffle_epi8(hi, p);
  const __m256i use_hi = _mm256_cmpgt_epi8(p, _mm256_set1_epi8(15));
  const __m256i gathered = _mm256_blendv_epi8(from_lo, from_hi, use_hi);
  const __m256i eq = _mm256_cmpeq_epi8(gathered, l);
  const uint32_t mask = static_cast<uint32_t>(_mm256_movemask_epi8(eq));
  const uint32_t want = n >= 32 ? 0xffffffffu : ((1u << n) - 1u);
  return (mask & want) == want;
}

}  // namespace symbreak::kernels
