#include "oeg/permgroup/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace oeg::perm::detail {

void mul_perm_neon(const Permutation* in, std::size_t n, const Permutation& g, Permutation* out) {
  const uint8x16_t table = vld1q_u8(g.data());
  for (std::size_t i = 0; i < n; ++i) {
    vst1q_u8(out[i].data(), vqtbl1q_u8(table, vld1q_u8(in[i].data())));
  }
}

void mul_pair_neon(const PairElement* in, std::size_t n, const PairElement& g, PairElement* out) {
  const uint8x16_t tl = vld1q_u8(g.left.data());
  const uint8x16_t tr = vld1q_u8(g.right.data());
  for (std::size_t i = 0; i < n; ++i) {
    vst1q_u8(out[i].left.data(), vqtbl1q_u8(tl, vld1q_u8(in[i].left.data())));
    vst1q_u8(out[i].right.data(), vqtbl1q_u8(tr, vld1q_u8(in[i].right.data())));
  }
}

}  // namespace oeg::perm::detail

#endif
