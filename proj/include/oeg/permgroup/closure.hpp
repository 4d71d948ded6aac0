#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "oeg/permgroup/kernels.hpp"
#include "oeg/permgroup/permutation.hpp"

namespace oeg::perm {

class ClosureLimitExceeded : public std::runtime_error {
 public:
  explicit ClosureLimitExceeded(std::uint64_t cap)
      : std::runtime_error("closure exceeded " + std::to_string(cap) + " elements") {}
};

struct ClosureOptions {
  std::uint64_t max_elements = 10'000;
  /// Kernel table to multiply with; the dispatched one when unset.
  const Kernels* kernels = nullptr;
};

/// Every element of <gens>, identity first, in breadth-first order.
/// Throws std::invalid_argument for an empty generator list.
std::vector<Permutation> closure(std::span<const Permutation> gens, const ClosureOptions& opt = {});
std::vector<PairElement> closure(std::span<const PairElement> gens, const ClosureOptions& opt = {});

std::uint64_t closure_order(std::span<const Permutation> gens, const ClosureOptions& opt = {});
std::uint64_t closure_order(std::span<const PairElement> gens, const ClosureOptions& opt = {});

}  // namespace oeg::perm
