#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oeg/permgroup/permutation.hpp"

namespace oeg::perm {

enum class SmallGroup { A4, S4, A5 };

std::string_view small_group_name(SmallGroup s);
/// Throws std::invalid_argument on anything but A4, S4, A5.
SmallGroup parse_small_group(std::string_view name);
/// All elements, identity first.
std::vector<Permutation> small_group_elements(SmallGroup s);

struct Lemma62Options {
  /// Keep one involution per conjugacy class of S x S. The sweep result is
  /// unchanged because conjugating (a, b) conjugates <a, b>.
  bool dedupe_conjugacy = false;
  /// 0 means one per hardware thread.
  unsigned workers = 0;
};

struct Lemma62Counterexample {
  PairElement a;
  PairElement b;
  std::uint64_t order = 0;
};

struct Lemma62Report {
  SmallGroup group = SmallGroup::A4;
  std::uint64_t group_order = 0;
  std::uint64_t involutions = 0;      // a values swept
  std::uint64_t order_three = 0;      // b values swept
  std::uint64_t pairs_checked = 0;
  std::uint64_t surjective_pairs = 0; // both projections onto S
  std::uint64_t counterexamples = 0;
  std::optional<Lemma62Counterexample> first_counterexample;
  /// Projections of <a, b> disagreed with the groups generated by the
  /// projected generators. Always 0 unless the closure code is broken.
  std::uint64_t projection_mismatches = 0;

  bool pass() const { return counterexamples == 0 && projection_mismatches == 0; }
};

/// For every a of order 2 and b of order 3 in S x S, with H = <a, b>:
/// whenever both projections of H are onto S, require |H| = |S|.
Lemma62Report verify_lemma_6_2(SmallGroup s, const Lemma62Options& opt = {});

}  // namespace oeg::perm
