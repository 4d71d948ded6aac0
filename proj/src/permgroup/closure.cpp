#include "oeg/permgroup/closure.hpp"

#include <unordered_set>

namespace oeg::perm {

namespace {

template <class E>
void multiply(const Kernels& k, const E* in, std::size_t n, const E& g, E* out) {
  if constexpr (std::is_same_v<E, Permutation>) {
    k.mul_perm(in, n, g, out);
  } else {
    k.mul_pair(in, n, g, out);
  }
}

template <class E, class Hash>
std::vector<E> closure_impl(std::span<const E> gens, const ClosureOptions& opt) {
  if (gens.empty()) {
    throw std::invalid_argument("closure of an empty generator list");
  }
  const Kernels& k = opt.kernels != nullptr ? *opt.kernels : kernels();
  std::vector<E> elements{E{}};
  std::unordered_set<E, Hash> seen{E{}};
  std::vector<E> products;
  // elements[begin, end) is the current frontier.
  std::size_t begin = 0;
  while (begin < elements.size()) {
    const std::size_t end = elements.size();
    products.resize(end - begin);
    for (const E& g : gens) {
      multiply(k, elements.data() + begin, end - begin, g, products.data());
      for (const E& p : products) {
        if (seen.insert(p).second) {
          if (elements.size() >= opt.max_elements) {
            throw ClosureLimitExceeded(opt.max_elements);
          }
          elements.push_back(p);
        }
      }
    }
    begin = end;
  }
  return elements;
}

}  // namespace

std::vector<Permutation> closure(std::span<const Permutation> gens, const ClosureOptions& opt) {
  return closure_impl<Permutation, PermutationHash>(gens, opt);
}

std::vector<PairElement> closure(std::span<const PairElement> gens, const ClosureOptions& opt) {
  return closure_impl<PairElement, PairElementHash>(gens, opt);
}

std::uint64_t closure_order(std::span<const Permutation> gens, const ClosureOptions& opt) {
  return closure(gens, opt).size();
}

std::uint64_t closure_order(std::span<const PairElement> gens, const ClosureOptions& opt) {
  return closure(gens, opt).size();
}

}  // namespace oeg::perm
