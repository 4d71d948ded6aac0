#include "oeg/fpgroup/word.hpp"

#include <algorithm>
#include <cstdlib>

namespace oeg::fp {

std::vector<Letter> free_reduce(std::span<const Letter> letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (Letter l : letters) {
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word Word::generator(std::uint32_t g, int exponent) {
  Word w;
  const Letter l = Letter::of(g, exponent < 0);
  w.letters_.assign(static_cast<std::size_t>(std::abs(exponent)), l);
  return w;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    w.letters_.push_back(it->inverse());
  }
  return w;
}

Word Word::pow(int exponent) const {
  const Word base = exponent < 0 ? inverse() : *this;
  Word result;
  for (int i = 0; i < std::abs(exponent); ++i) {
    result *= base;
  }
  return result;
}

Word Word::cyclically_reduced() const {
  std::size_t lo = 0;
  std::size_t hi = letters_.size();
  while (hi - lo >= 2 && letters_[lo] == letters_[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  Word w;
  w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(lo),
                    letters_.begin() + static_cast<std::ptrdiff_t>(hi));
  return w;
}

std::uint32_t Word::generator_bound() const {
  std::uint32_t bound = 0;
  for (Letter l : letters_) {
    bound = std::max(bound, l.generator() + 1);
  }
  return bound;
}

Word& Word::operator*=(const Word& other) {
  // Only the junction can cancel; both operands are already reduced.
  std::size_t consumed = 0;
  while (consumed < other.letters_.size() && !letters_.empty() &&
         letters_.back() == other.letters_[consumed].inverse()) {
    letters_.pop_back();
    ++consumed;
  }
  letters_.insert(letters_.end(),
                  other.letters_.begin() + static_cast<std::ptrdiff_t>(consumed),
                  other.letters_.end());
  return *this;
}

Word operator*(const Word& a, const Word& b) {
  Word w = a;
  w *= b;
  return w;
}

int exponent_sum(const Word& w, std::uint32_t g) {
  int sum = 0;
  for (Letter l : w.letters()) {
    if (l.generator() == g) {
      sum += l.is_inverse() ? -1 : 1;
    }
  }
  return sum;
}

}  // namespace oeg::fp
