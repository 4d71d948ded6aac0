#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "oeg/permgroup/permutation.hpp"

namespace oeg::perm {

enum class Isa { scalar, ssse3, avx2, neon };

std::string_view isa_name(Isa isa);

/// Batched right multiplication: out[i] = in[i] * g.
/// `in` and `out` may alias exactly.
struct Kernels {
  Isa isa;
  void (*mul_perm)(const Permutation* in, std::size_t n, const Permutation& g, Permutation* out);
  void (*mul_pair)(const PairElement* in, std::size_t n, const PairElement& g, PairElement* out);
};

/// Widest variant this CPU runs; OEG_ISA=scalar|ssse3|avx2|neon narrows it.
const Kernels& kernels();
/// Throws std::invalid_argument when `isa` is not usable here.
const Kernels& kernels_for(Isa isa);
std::vector<Isa> supported_isas();

namespace detail {
void mul_perm_scalar(const Permutation* in, std::size_t n, const Permutation& g, Permutation* out);
void mul_pair_scalar(const PairElement* in, std::size_t n, const PairElement& g, PairElement* out);
#if defined(__x86_64__) || defined(__i386__)
void mul_perm_ssse3(const Permutation* in, std::size_t n, const Permutation& g, Permutation* out);
void mul_pair_ssse3(const PairElement* in, std::size_t n, const PairElement& g, PairElement* out);
void mul_perm_avx2(const Permutation* in, std::size_t n, const Permutation& g, Permutation* out);
void mul_pair_avx2(const PairElement* in, std::size_t n, const PairElement& g, PairElement* out);
#endif
#if defined(__aarch64__)
void mul_perm_neon(const Permutation* in, std::size_t n, const Permutation& g, Permutation* out);
void mul_pair_neon(const PairElement* in, std::size_t n, const PairElement& g, PairElement* out);
#endif
}  // namespace detail

}  // namespace oeg::perm
