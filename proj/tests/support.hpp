#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "oeg/fpgroup/presentation.hpp"
#include "oeg/permgroup/permutation.hpp"

namespace oeg::test {

inline std::string data_path(const std::string& rel) { return std::string(OEG_TEST_DATA_DIR) + "/" + rel; }

using Rng = std::mt19937_64;

/// Uniform word of the given length over `gens` generators, not reduced.
inline std::vector<fp::Letter> random_letters(Rng& rng, std::uint32_t gens, std::size_t len) {
  std::uniform_int_distribution<std::uint32_t> code(0, 2 * gens - 1);
  std::vector<fp::Letter> out;
  for (std::size_t i = 0; i < len; ++i) out.push_back(fp::Letter::from_code(code(rng)));
  return out;
}

inline fp::Word random_word(Rng& rng, std::uint32_t gens, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  const auto letters = random_letters(rng, gens, len(rng));
  return fp::Word(std::span<const fp::Letter>(letters));
}

/// Image of `w` under the map sending generator i to images[i].
inline perm::Permutation evaluate(const fp::Word& w, const std::vector<perm::Permutation>& images) {
  perm::Permutation r;
  for (fp::Letter l : w.letters()) {
    const auto& g = images.at(l.generator());
    r = r * (l.is_inverse() ? g.inverse() : g);
  }
  return r;
}

inline bool satisfies(const fp::Presentation& p, const std::vector<perm::Permutation>& images) {
  for (const auto& r : p.relators()) {
    if (!evaluate(r, images).is_identity()) return false;
  }
  return true;
}

}  // namespace oeg::test
