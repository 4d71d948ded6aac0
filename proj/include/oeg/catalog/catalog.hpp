#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "oeg/fpgroup/presentation.hpp"
#include "oeg/orbifold/riemann_hurwitz.hpp"
#include "oeg/util/expression.hpp"

namespace oeg::cat {

class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FeatureKind { edge, dashed_arc };
enum class Type33 { none, I, II };
/// Footnote on a realization: plain = unknotted only, k = knotted only,
/// uk = both.
enum class Knotting { plain, k, uk };

std::string_view to_string(FeatureKind k);
std::string_view to_string(Type33 t);
std::string_view to_string(Knotting k);
Knotting parse_knotting(std::string_view text);
/// plain+k and anything with uk give uk.
Knotting merge(Knotting a, Knotting b);
bool realizes_unknotted(Knotting k);
bool realizes_knotted(Knotting k);

/// A singular type whose entries may mention the entry parameter, e.g.
/// `2,2,2,n`.
struct TypeFormula {
  std::array<util::Expression, 4> q;

  static TypeFormula parse(std::string_view text);
  orb::SingularType at(const util::Bindings& b) const;
  std::string text() const;
};

struct Feature {
  std::string name;
  FeatureKind kind = FeatureKind::edge;
  /// Absent only for non-allowable features whose type is not recorded.
  std::optional<TypeFormula> singular_type;
  Type33 type33 = Type33::none;
  std::optional<util::Expression> genus;
  Knotting knotting = Knotting::plain;
  bool allowable = true;
  /// Source text, either `@name` for a subgroup of the entry presentation
  /// or comma-separated words.
  std::optional<std::string> subgroup_gens_text;
  /// Resolved against the entry presentation at load.
  std::optional<std::vector<fp::Word>> subgroup_gens;
  std::uint64_t expected_index = 1;
  std::string note;
};

struct Parameter {
  std::string name;
  long long lower = 0;
};

struct CatalogEntry {
  std::string id;
  std::string table;  // IV, V or VI
  util::Expression group_order;
  std::optional<Parameter> parameter;
  std::optional<std::string> presentation_path;
  std::optional<fp::Presentation> presentation;
  std::vector<Feature> features;
  std::string note;

  bool parametric() const { return parameter.has_value(); }
  /// Throws CatalogError for a parametric entry.
  long long order() const;
  long long order_at(long long n) const;
  util::Bindings bind(std::optional<long long> n) const;
  const Feature* find_feature(std::string_view name) const;
};

struct Catalog {
  std::vector<CatalogEntry> entries;

  const CatalogEntry* find(std::string_view id) const;
  std::size_t feature_count() const;
};

/// Parses the block format. Presentation paths are resolved against
/// `base_dir` when it is non-empty; otherwise they are recorded unloaded.
Catalog parse_catalog(std::string_view text, const std::string& base_dir = {});
Catalog load_catalog(const std::string& path);

/// Throws CatalogError naming the entry and field on the first invariant
/// failure. Parametric entries are checked for n from the lower bound up
/// to `parametric_span` above it.
void validate(const Catalog& c, long long parametric_span = 64);

}  // namespace oeg::cat
