#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace oeg::fp {

/// A generator or its formal inverse.
///
/// Letters are encoded as `2 * generator + inverse`, which is also the column
/// index used by the coset table, so `inverse()` is a single bit flip.
class Letter {
 public:
  constexpr Letter() = default;

  static constexpr Letter of(std::uint32_t generator, bool inverse = false) {
    return Letter{2 * generator + (inverse ? 1u : 0u)};
  }
  static constexpr Letter from_code(std::uint32_t code) { return Letter{code}; }

  constexpr std::uint32_t generator() const { return code_ >> 1; }
  constexpr bool is_inverse() const { return (code_ & 1u) != 0; }
  constexpr Letter inverse() const { return Letter{code_ ^ 1u}; }
  constexpr std::uint32_t code() const { return code_; }

  constexpr auto operator<=>(const Letter&) const = default;

 private:
  constexpr explicit Letter(std::uint32_t code) : code_(code) {}
  std::uint32_t code_ = 0;
};

/// Cancels adjacent `x x^-1` pairs until none remain.
std::vector<Letter> free_reduce(std::span<const Letter> letters);

/// A freely reduced word over the generators of some presentation. The empty
/// word is the identity.
class Word {
 public:
  Word() = default;
  explicit Word(std::span<const Letter> letters) : letters_(free_reduce(letters)) {}
  Word(std::initializer_list<Letter> letters)
      : letters_(free_reduce(std::span<const Letter>(letters.begin(), letters.size()))) {}

  static Word generator(std::uint32_t g, int exponent = 1);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const;
  Word pow(int exponent) const;
  /// Strips matching inverse letters from both ends. The result is a
  /// conjugate of this word.
  Word cyclically_reduced() const;

  /// Largest generator index used plus one, or 0 for the identity.
  std::uint32_t generator_bound() const;

  friend Word operator*(const Word& a, const Word& b);
  Word& operator*=(const Word& other);

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<Letter> letters_;
};

/// Sum of the exponents of generator `g` in `w`.
int exponent_sum(const Word& w, std::uint32_t g);

}  // namespace oeg::fp
