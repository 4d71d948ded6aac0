#include <cstdlib>
#include <stdexcept>
#include <string>

#include "oeg/permgroup/kernels.hpp"

namespace oeg::perm {

namespace {

constexpr Kernels kScalar{Isa::scalar, detail::mul_perm_scalar, detail::mul_pair_scalar};
#if defined(__x86_64__) || defined(__i386__)
constexpr Kernels kSsse3{Isa::ssse3, detail::mul_perm_ssse3, detail::mul_pair_ssse3};
constexpr Kernels kAvx2{Isa::avx2, detail::mul_perm_avx2, detail::mul_pair_avx2};
#endif
#if defined(__aarch64__)
constexpr Kernels kNeon{Isa::neon, detail::mul_perm_neon, detail::mul_pair_neon};
#endif

bool usable(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
#if defined(__x86_64__) || defined(__i386__)
    case Isa::ssse3:
      return __builtin_cpu_supports("ssse3");
    case Isa::avx2:
      return __builtin_cpu_supports("avx2");
#endif
#if defined(__aarch64__)
    case Isa::neon:
      return true;
#endif
    default:
      return false;
  }
}

const Kernels& table_for(Isa isa) {
  switch (isa) {
#if defined(__x86_64__) || defined(__i386__)
    case Isa::ssse3:
      return kSsse3;
    case Isa::avx2:
      return kAvx2;
#endif
#if defined(__aarch64__)
    case Isa::neon:
      return kNeon;
#endif
    default:
      return kScalar;
  }
}

const Kernels& select() {
  if (const char* env = std::getenv("OEG_ISA")) {
    const std::string want(env);
    for (Isa isa : supported_isas()) {
      if (isa_name(isa) == want) {
        return table_for(isa);
      }
    }
  }
  return table_for(supported_isas().back());
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::ssse3:
      return "ssse3";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "unknown";
}

std::vector<Isa> supported_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::scalar, Isa::ssse3, Isa::avx2, Isa::neon}) {
    if (usable(isa)) {
      out.push_back(isa);
    }
  }
  return out;
}

const Kernels& kernels_for(Isa isa) {
  if (!usable(isa)) {
    throw std::invalid_argument("ISA " + std::string(isa_name(isa)) + " is not available");
  }
  return table_for(isa);
}

const Kernels& kernels() {
  static const Kernels& chosen = select();
  return chosen;
}

}  // namespace oeg::perm
