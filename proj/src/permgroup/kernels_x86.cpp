// Byte-shuffle products. An image table indexes the right factor, which is
// exactly what pshufb computes: out[k] = g[in[k]] for indices below 16.
#include "oeg/permgroup/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

namespace oeg::perm::detail {

__attribute__((target("ssse3"))) void mul_perm_ssse3(const Permutation* in, std::size_t n,
                                                     const Permutation& g, Permutation* out) {
  const __m128i table = _mm_load_si128(reinterpret_cast<const __m128i*>(g.data()));
  for (std::size_t i = 0; i < n; ++i) {
    const __m128i idx = _mm_load_si128(reinterpret_cast<const __m128i*>(in[i].data()));
    _mm_store_si128(reinterpret_cast<__m128i*>(out[i].data()), _mm_shuffle_epi8(table, idx));
  }
}

__attribute__((target("ssse3"))) void mul_pair_ssse3(const PairElement* in, std::size_t n,
                                                     const PairElement& g, PairElement* out) {
  const __m128i tl = _mm_load_si128(reinterpret_cast<const __m128i*>(g.left.data()));
  const __m128i tr = _mm_load_si128(reinterpret_cast<const __m128i*>(g.right.data()));
  for (std::size_t i = 0; i < n; ++i) {
    const __m128i l = _mm_load_si128(reinterpret_cast<const __m128i*>(in[i].left.data()));
    const __m128i r = _mm_load_si128(reinterpret_cast<const __m128i*>(in[i].right.data()));
    _mm_store_si128(reinterpret_cast<__m128i*>(out[i].left.data()), _mm_shuffle_epi8(tl, l));
    _mm_store_si128(reinterpret_cast<__m128i*>(out[i].right.data()), _mm_shuffle_epi8(tr, r));
  }
}

// vpshufb shuffles within each 128-bit lane, so two permutations go through
// per instruction against a table broadcast to both lanes.
__attribute__((target("avx2"))) void mul_perm_avx2(const Permutation* in, std::size_t n,
                                                   const Permutation& g, Permutation* out) {
  const __m256i table =
      _mm256_broadcastsi128_si256(_mm_load_si128(reinterpret_cast<const __m128i*>(g.data())));
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256i idx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in[i].data()));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out[i].data()), _mm256_shuffle_epi8(table, idx));
  }
  if (i < n) {
    const __m128i idx = _mm_load_si128(reinterpret_cast<const __m128i*>(in[i].data()));
    _mm_store_si128(reinterpret_cast<__m128i*>(out[i].data()),
                    _mm_shuffle_epi8(_mm256_castsi256_si128(table), idx));
  }
}

__attribute__((target("avx2"))) void mul_pair_avx2(const PairElement* in, std::size_t n,
                                                   const PairElement& g, PairElement* out) {
  const __m256i table = _mm256_load_si256(reinterpret_cast<const __m256i*>(g.left.data()));
  for (std::size_t i = 0; i < n; ++i) {
    const __m256i idx = _mm256_load_si256(reinterpret_cast<const __m256i*>(in[i].left.data()));
    _mm256_store_si256(reinterpret_cast<__m256i*>(out[i].left.data()), _mm256_shuffle_epi8(table, idx));
  }
}

}  // namespace oeg::perm::detail

#endif
