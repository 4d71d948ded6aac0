#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace oeg::perm {

/// Permutation of {0..15}, stored as its image table. Points beyond the
/// degree of interest are fixed, so one layout covers every degree in scope
/// and a product is a single byte shuffle.
class alignas(16) Permutation {
 public:
  static constexpr std::size_t kMaxDegree = 16;

  Permutation() {
    for (std::uint8_t i = 0; i < kMaxDegree; ++i) {
      img_[i] = i;
    }
  }

  /// `images[i]` is the 0-based image of point i. Throws
  /// std::invalid_argument unless this is a bijection of {0..n-1}.
  static Permutation from_images(std::span<const std::uint8_t> images);

  std::uint8_t operator[](std::size_t i) const { return img_[i]; }
  const std::uint8_t* data() const { return img_.data(); }
  std::uint8_t* data() { return img_.data(); }

  /// Apply this, then `b`: (a * b)[i] = b[a[i]].
  Permutation operator*(const Permutation& b) const {
    Permutation r;
    for (std::size_t i = 0; i < kMaxDegree; ++i) {
      r.img_[i] = b.img_[img_[i]];
    }
    return r;
  }
  Permutation inverse() const;
  /// lcm of the cycle lengths.
  std::uint32_t order() const;
  bool is_identity() const { return *this == Permutation(); }
  /// Largest moved point, 1-based; 0 for the identity.
  std::size_t degree() const;
  /// 1-based cycle notation, `()` for the identity.
  std::string to_cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::array<std::uint8_t, kMaxDegree> img_;
};

/// Element (left, right) of a direct product S x S, laid out so both
/// halves fit one 256-bit register.
struct alignas(32) PairElement {
  Permutation left;
  Permutation right;

  PairElement operator*(const PairElement& b) const {
    return PairElement{left * b.left, right * b.right};
  }
  PairElement inverse() const { return PairElement{left.inverse(), right.inverse()}; }
  std::uint32_t order() const;
  bool is_identity() const { return left.is_identity() && right.is_identity(); }
  std::string to_string() const { return "[" + left.to_cycles() + ", " + right.to_cycles() + "]"; }

  friend bool operator==(const PairElement&, const PairElement&) = default;
  friend auto operator<=>(const PairElement&, const PairElement&) = default;
};

static_assert(sizeof(Permutation) == 16);
static_assert(sizeof(PairElement) == 32);

/// Parses `(1 2)(3 4 5)`; `()` is the identity. Points are 1-based and at
/// most 16. Throws std::invalid_argument with a position on bad input.
Permutation parse_cycles(std::string_view text);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    std::memcpy(&lo, p.data(), 8);
    std::memcpy(&hi, p.data() + 8, 8);
    return static_cast<std::size_t>((lo * 0x9E3779B97F4A7C15ull) ^ (hi + 0x632BE59BD9B4E019ull + (lo >> 29)));
  }
};

struct PairElementHash {
  std::size_t operator()(const PairElement& e) const {
    const PermutationHash h;
    const std::size_t a = h(e.left);
    return a ^ (h(e.right) + 0x9E3779B97F4A7C15ull + (a << 6) + (a >> 2));
  }
};

}  // namespace oeg::perm
