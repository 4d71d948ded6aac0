#include "oeg/permgroup/kernels.hpp"

namespace oeg::perm::detail {

void mul_perm_scalar(const Permutation* in, std::size_t n, const Permutation& g, Permutation* out) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = in[i] * g;
  }
}

void mul_pair_scalar(const PairElement* in, std::size_t n, const PairElement& g, PairElement* out) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = in[i] * g;
  }
}

}  // namespace oeg::perm::detail
