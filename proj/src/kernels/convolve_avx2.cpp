#include "howe/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define HOWE_HAVE_X86 1
#endif

namespace howe::kernels {

#ifdef HOWE_HAVE_X86

// _mm256_mul_epi32 multiplies the signed low 32 bits of each 64-bit lane,
// which is exact under the |x| < 2^31 precondition.
__attribute__((target("avx2"))) void convolve_i64_avx2(
    const std::int64_t* a, std::size_t na, const std::int64_t* b,
    std::size_t nb, std::int64_t* c) {
  const std::size_t nb4 = nb & ~std::size_t{3};
  for (std::size_t i = 0; i < na; ++i) {
    const std::int64_t ai = a[i];
    if (ai == 0) continue;
    const __m256i va = _mm256_set1_epi64x(ai);
    std::int64_t* ci = c + i;
    std::size_t j = 0;
    for (; j < nb4; j += 4) {
      const __m256i vb =
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + j));
      __m256i vc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(ci + j));
      vc = _mm256_add_epi64(vc, _mm256_mul_epi32(va, vb));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(ci + j), vc);
    }
    for (; j < nb; ++j) ci[j] += ai * b[j];
  }
}

#else

void convolve_i64_avx2(const std::int64_t* a, std::size_t na,
                       const std::int64_t* b, std::size_t nb,
                       std::int64_t* c) {
  convolve_i64_scalar(a, na, b, nb, c);
}

#endif

}  // namespace howe::kernels
