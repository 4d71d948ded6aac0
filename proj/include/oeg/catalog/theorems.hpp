#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oeg/catalog/catalog.hpp"

namespace oeg::cat {

/// Direct lookups in the maximal-order tables. Throw std::invalid_argument
/// for g < 2.
long long oe(long long g);
long long oe_u(long long g);
long long oe_k(long long g);

/// Which row of the OE_g table produced oe(g), e.g. "12(g-1)" or
/// "4(g+1)"; ties go to the first row listed.
std::string oe_row(long long g);

/// Square genera k^2 whose square row is overridden, as listed.
const std::vector<long long>& square_exclusions();

/// Problems found when checking the exclusion list against the maximum
/// rule up to g_max: an excluded k must lose to another row, and a kept
/// k must not. Empty means consistent.
std::vector<std::string> check_square_exclusions(long long g_max);

struct Realization {
  long long order = 0;
  std::optional<orb::SingularType> type;
  Type33 type33 = Type33::none;
  Knotting knotting = Knotting::plain;
  std::string source;  // "34.b", "15E.a[n=12]", "cage", "knotted-arc"
};

struct GenusRecord {
  long long g = 0;
  long long oe = 0;
  long long oe_u = 0;
  long long oe_k = 0;
  std::vector<Realization> realizations;
};

/// Allowable catalog features at genus g, plus the cage floor 4(g+1)
/// (unknotted) and the knotted-arc floor 4(g-1). Throws CatalogError when
/// the maxima disagree with oe / oe_u / oe_k.
GenusRecord derive_genus_record(long long g, const Catalog& c);
/// Same collection without the lookup comparison.
GenusRecord collect_genus_record(long long g, const Catalog& c);

struct GenusMark {
  long long g = 0;
  Knotting knotting = Knotting::plain;
  friend bool operator==(const GenusMark&, const GenusMark&) = default;
};

struct MainRow {
  std::string key;                  // "12(g-1)", "6(g-1) I", "4n(g-1)/(n-2)", ...
  std::vector<GenusMark> genera;    // sorted by g
  std::vector<std::string> symbolic;  // parametric genus formulas, family row only
  friend bool operator==(const MainRow&, const MainRow&) = default;
};

struct MainTable {
  std::vector<MainRow> rows;
  const MainRow* find(std::string_view key) const;
};

/// Row keys in display order.
const std::vector<std::string>& main_table_keys();
/// Row key of an allowable realization at |G| > 4(g-1).
std::string main_row_key(const orb::SingularType& t, Type33 t33);

/// Groups allowable realizations with g <= g_max by ratio family. Rows
/// for (2,2,2,n), n = 3, 4, 5, include instances of the parametric
/// entries; larger n go to the family row as the parametric formulas.
MainTable derive_main_table(const Catalog& c, long long g_max);

/// `key | 2, 3, 9_uk, {21, 481}_k` lines; braces share a footnote.
MainTable parse_main_table(std::string_view text);
MainTable load_main_table(const std::string& path);
std::string format_row(const MainRow& r);

struct CageResult {
  long long genus = 0;
  long long order = 0;
  std::optional<long long> square_order;  // m == n only
};

/// Throws std::invalid_argument for m or n below 2.
CageResult cage_construction(long long m, long long n);

}  // namespace oeg::cat
