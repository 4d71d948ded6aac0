#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "oeg/fpgroup/presentation.hpp"

namespace oeg::fp {

enum class Strategy {
  hlt,     // relator-based definitions with lookahead when the cap is hit
  felsch,  // first-gap definitions with full deduction processing
};

struct EnumerationLimits {
  std::uint64_t max_live_cosets = 1'000'000;
  Strategy strategy = Strategy::hlt;

  /// Defaults, with the cap overridden by OEG_MAX_COSETS when it parses.
  static EnumerationLimits from_environment();
};

enum class EnumerationStatus { completed, limit_exceeded };

/// Closed coset table on cosets 0..size()-1, coset 0 being H itself.
class CosetTable {
 public:
  CosetTable() = default;
  CosetTable(std::uint32_t columns, std::vector<std::uint32_t> rows)
      : columns_(columns), rows_(std::move(rows)) {}

  std::uint32_t size() const {
    return columns_ == 0 ? (rows_.empty() ? 1u : static_cast<std::uint32_t>(rows_.size()))
                         : static_cast<std::uint32_t>(rows_.size() / columns_);
  }
  std::uint32_t act(std::uint32_t coset, Letter l) const {
    return rows_[static_cast<std::size_t>(coset) * columns_ + l.code()];
  }
  std::uint32_t act(std::uint32_t coset, const Word& w) const {
    for (Letter l : w.letters()) {
      coset = act(coset, l);
    }
    return coset;
  }

 private:
  std::uint32_t columns_ = 0;
  std::vector<std::uint32_t> rows_;
};

struct EnumerationResult {
  EnumerationStatus status = EnumerationStatus::limit_exceeded;
  std::optional<std::uint64_t> index;  // set iff completed
  std::uint64_t cosets_defined = 0;
  std::uint64_t cosets_max_live = 0;
  std::optional<CosetTable> table;     // set iff completed

  bool completed() const { return status == EnumerationStatus::completed; }
};

class EnumerationLimitExceeded : public std::runtime_error {
 public:
  explicit EnumerationLimitExceeded(std::uint64_t cap)
      : std::runtime_error("coset enumeration exceeded " + std::to_string(cap) + " live cosets"),
        cap_(cap) {}
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t cap_;
};

/// Todd-Coxeter enumeration of the cosets of H = <subgroup_gens> in the
/// group of `p`. Throws std::invalid_argument for words over generators
/// that `p` does not have.
EnumerationResult coset_enumerate(const Presentation& p, const std::vector<Word>& subgroup_gens,
                                  const EnumerationLimits& limits = {});

/// [G : H] for the named subgroup of `p`; throws std::out_of_range if absent
/// and EnumerationLimitExceeded when the run is undecided.
std::uint64_t subgroup_index(const Presentation& p, std::string_view subgroup,
                             const EnumerationLimits& limits = {});

std::uint64_t group_order(const Presentation& p, const EnumerationLimits& limits = {});

}  // namespace oeg::fp
