#include "symbreak/kernels.hpp"

namespace symbreak::kernels {

bool labels_preserved_scalar(const uint8_t* perm, const uint8_t* labels, size_t n) {
  for (size_t i = 0; i < n; ++i)
    if (labels[perm[i]] != labels[i]) return false;
  return true;
}

bool cpu_has_avx2() {
#if defined(SYMBREAK_HAVE_AVX2_TU) && (defined(__x86_64__) || defined(_M_X64))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

namespace {
bool dispatch_init(const uint8_t* perm, const uint8_t* labels, size_t n);

using KernelFn = bool (*)(const uint8_t*, const uint8_t*, size_t);
KernelFn g_kernel32 = dispatch_init;  // resolved on first call

bool dispatch_init(const uint8_t* perm, const uint8_t* labels, size_t n) {
#if defined(SYMBREAK_HAVE_AVX2_TU)
  g_kernel32 = cpu_has_avx2() ? labels_preserved_avx2 : labels_preserved_scalar;
#else
  g_kernel32 = labels_preserved_scalar;
#endif
  return g_kernel32(perm, labels, n);
}
}  // namespace

bool labels_preserved(const uint8_t* perm, const uint8_t* labels, size_t n) {
  if (n <= 32) return g_kernel32(perm, labels, n);
  return labels_preserved_scalar(perm, labels, n);
}

long find_first_preserving(const uint8_t* table, size_t count, size_t stride, const uint8_t* labels,
                           size_t n) {
  for (size_t i = 0; i < count; ++i)
    if (labels_preserved(table + i * stride, labels, n)) return static_cast<long>(i);
  return -1;
}

}  // namespace symbreak::kernels
