#include "oeg/permgroup/permutation.hpp"

#include <cctype>
#include <numeric>
#include <vector>

namespace oeg::perm {

Permutation Permutation::from_images(std::span<const std::uint8_t> images) {
  if (images.size() > kMaxDegree) {
    throw std::invalid_argument("degree above 16");
  }
  Permutation p;
  std::array<bool, kMaxDegree> hit{};
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] >= images.size() || hit[images[i]]) {
      throw std::invalid_argument("image table is not a bijection");
    }
    hit[images[i]] = true;
    p.img_[i] = images[i];
  }
  return p;
}

Permutation Permutation::inverse() const {
  Permutation r;
  for (std::uint8_t i = 0; i < kMaxDegree; ++i) {
    r.img_[img_[i]] = i;
  }
  return r;
}

std::uint32_t Permutation::order() const {
  std::uint32_t result = 1;
  std::array<bool, kMaxDegree> seen{};
  for (std::size_t i = 0; i < kMaxDegree; ++i) {
    if (seen[i]) {
      continue;
    }
    std::uint32_t len = 0;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::size_t Permutation::degree() const {
  for (std::size_t i = kMaxDegree; i > 0; --i) {
    if (img_[i - 1] != i - 1) {
      return i;
    }
  }
  return 0;
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::array<bool, kMaxDegree> seen{};
  for (std::size_t i = 0; i < kMaxDegree; ++i) {
    if (seen[i] || img_[i] == i) {
      continue;
    }
    out += '(';
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      if (j != i) {
        out += ' ';
      }
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::uint32_t PairElement::order() const { return std::lcm(left.order(), right.order()); }

Permutation parse_cycles(std::string_view text) {
  auto fail = [](const std::string& what, std::size_t pos) {
    throw std::invalid_argument("cycle notation at " + std::to_string(pos + 1) + ": " + what);
  };
  std::array<std::uint8_t, Permutation::kMaxDegree> img{};
  for (std::uint8_t i = 0; i < Permutation::kMaxDegree; ++i) {
    img[i] = i;
  }
  std::array<bool, Permutation::kMaxDegree> used{};
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
  };
  skip();
  if (i == text.size()) {
    fail("empty input", i);
  }
  std::vector<std::uint8_t> cycle;
  while (i < text.size()) {
    if (text[i] != '(') {
      fail("expected '('", i);
    }
    ++i;
    cycle.clear();
    for (;;) {
      skip();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
        fail("expected a point or ')'", i);
      }
      const std::size_t start = i;
      unsigned v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<unsigned>(text[i] - '0');
        if (v > Permutation::kMaxDegree) {
          fail("point out of range 1..16", start);
        }
        ++i;
      }
      if (v == 0) {
        fail("point out of range 1..16", start);
      }
      const auto pt = static_cast<std::uint8_t>(v - 1);
      if (used[pt]) {
        fail("point " + std::to_string(v) + " repeated", start);
      }
      used[pt] = true;
      cycle.push_back(pt);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      img[cycle[k]] = cycle[(k + 1) % cycle.size()];
    }
    skip();
  }
  return Permutation::from_images(img);
}

}  // namespace oeg::perm
