#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oeg/fpgroup/presentation.hpp"

namespace oeg::cat {

/// An edge-killing refutation: after killing `killed`, the orbifold group
/// collapses to `quotient` while the surface group maps onto the subgroup
/// generated by `image`. A proper image means the inclusion is not
/// surjective, so the candidate is not allowable.
struct RejectionFixture {
  std::string id;      // "15B.arc"
  std::string entry;   // catalog entry id
  std::string target;  // the rejected edge or dashed arc
  std::string killed;  // what gets killed, in words
  std::string note;
  /// Cited fixtures carry no presentation; the argument is recorded only.
  bool cited = false;
  std::optional<fp::Presentation> quotient;
  std::vector<fp::Word> image;
  std::uint64_t expected_order = 0;
  std::uint64_t expected_index = 0;
};

/// Block format: `rejection <id>` ... `end` with fields entry, target,
/// killed, note, status (checked|cited), gens, rel (comma separated),
/// image (comma separated, `1` for trivial), expected_order,
/// expected_index.
std::vector<RejectionFixture> parse_rejections(std::string_view text);
std::vector<RejectionFixture> load_rejections(const std::string& path);

}  // namespace oeg::cat
