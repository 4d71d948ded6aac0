#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "oeg/fpgroup/word.hpp"

namespace oeg::fp {

/// Raised on malformed presentation text; carries a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct NamedSubgroup {
  std::string name;
  std::vector<Word> generators;
};

/// Generators plus freely and cyclically reduced relators. Named subgroup
/// generator sets ride along so that fixtures can keep them next to the
/// relators they refer to.
class Presentation {
 public:
  Presentation() = default;
  explicit Presentation(std::vector<std::string> generators,
                        std::vector<Word> relators = {});

  const std::vector<std::string>& generators() const { return generators_; }
  std::uint32_t generator_count() const {
    return static_cast<std::uint32_t>(generators_.size());
  }
  const std::vector<Word>& relators() const { return relators_; }
  const std::vector<NamedSubgroup>& subgroups() const { return subgroups_; }

  std::optional<std::uint32_t> find_generator(std::string_view name) const;
  /// Throws std::out_of_range for an unknown name.
  std::uint32_t generator_id(std::string_view name) const;
  const NamedSubgroup* find_subgroup(std::string_view name) const;

  std::uint32_t add_generator(std::string name);
  /// Stores the cyclically reduced form; the identity is dropped.
  void add_relator(const Word& w);
  void add_subgroup(NamedSubgroup subgroup);

  /// Renders `w` with these generator names, e.g. `x^2 y^-1 z`.
  std::string format(const Word& w) const;
  /// Round-trippable text in the fixture grammar.
  std::string to_text() const;

 private:
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
  std::vector<NamedSubgroup> subgroups_;
};

/// Parses the line-oriented fixture grammar (`gens:`, `rel:`, `sub <name>:`,
/// `#` comments).
Presentation parse_presentation(std::string_view text);
Presentation load_presentation(const std::string& path);

/// Parses a single word against the generators of `p`. `=` is accepted when
/// `allow_equation` is set and yields `lhs * rhs^-1`.
Word parse_word(std::string_view text, const Presentation& p, bool allow_equation = false);

/// Adds the one-letter relator `g` for every generator in `killed`.
/// Throws std::out_of_range for names that are not generators of `p`.
Presentation kill_generators(const Presentation& p, const std::set<std::string>& killed);

}  // namespace oeg::fp
