#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "oeg/dunbar/montesinos.hpp"
#include "oeg/util/expression.hpp"

namespace oeg::dunbar {

enum class FamilyId { f233, f234, f235, f22n, fnn1 };

inline constexpr FamilyId kAllFamilies[] = {FamilyId::f233, FamilyId::f234, FamilyId::f235, FamilyId::f22n,
                                            FamilyId::fnn1};

/// "2,3,3", "2,3,4", "2,3,5", "2,2,n", "n,n,1".
std::string family_name(FamilyId f);
/// Accepts the names above, with or without parentheses or commas.
FamilyId parse_family(std::string_view text);

/// (k, m1, m2, m3) for the fixed families, (k, m1, m2, m3, n) for 2,2,n and
/// (k, m1, m2, n) for n,n,1.
using Solution = std::vector<long long>;

std::size_t solution_width(FamilyId f);
/// Throws std::invalid_argument on a wrong width.
MontesinosParams params_of(FamilyId f, const Solution& s);
std::string format_solution(const Solution& s);

struct Bounds {
  long long max_n = 200;
  long long max_m = 200;
  long long max_d = 200;
};

/// A tuple of expressions in single-letter parameters, each optionally led
/// by `+-` or `-+` (read with a shared sign s as s*e and -s*e), plus lower
/// bounds for the parameters, e.g.
///   0, +-1, 0, -+m d, (1+2m)d | m>=0 d>=3
class SolutionPattern {
 public:
  static SolutionPattern parse(std::string_view text);

  /// All instances with m <= max_m, other parameters <= max_d, and n (the
  /// last entry of the parametric families) <= max_n, for both signs.
  std::vector<Solution> instantiate(FamilyId f, const Bounds& b) const;
  /// True when raising max_m and max_d by one adds instances, i.e. those
  /// bounds rather than max_n cut the list short.
  bool truncated(FamilyId f, const Bounds& b) const;

  const std::string& text() const { return text_; }
  std::string canonical() const;

  friend bool operator==(const SolutionPattern& a, const SolutionPattern& b) {
    return a.canonical() == b.canonical();
  }

 private:
  struct Entry {
    int sign = 0;  // 0 none, +1 for +-, -1 for -+
    util::Expression expr;
  };
  std::string text_;
  std::vector<Entry> entries_;
  std::vector<std::pair<std::string, long long>> lower_;
};

/// Closed forms for the parametric sweeps (empty for the fixed families).
std::vector<SolutionPattern> builtin_patterns(FamilyId f, int case_no);

struct SolutionFamily {
  FamilyId family = FamilyId::f233;
  int case_no = 1;
  Bounds bounds;
  /// Every constraint-passing, determinant +-1 tuple in bounds, sorted.
  std::vector<Solution> solutions;

  std::vector<SolutionPattern> patterns;
  /// Patterns with no instance inside the bounds.
  std::vector<std::string> unwitnessed;
  /// Patterns whose instance list the m or d bound cut short.
  std::vector<std::string> truncated;
  /// Instances of `patterns` equal `solutions` as sets. Vacuous when the
  /// family and case have no closed forms.
  bool patterns_match = true;
  std::vector<Solution> missing_from_patterns;
  std::vector<Solution> extra_in_patterns;
};

/// Sweeps k in {-1,0,1} and every admissible (m_i, n_i) of the family.
SolutionFamily solve_family(FamilyId f, int case_no, const Bounds& bounds = {});

struct Orbit {
  Solution representative;  // lexicographically least member
  std::vector<Solution> members;
};

/// Orbits under the simultaneous sign change of (k, m1, m2, m3) and, when
/// n1 = n2, the swap of m1 and m2.
std::vector<Orbit> normalize_solutions(FamilyId f, const std::vector<Solution>& solutions);

/// Golden list: `family <name>`, `case <1|2>`, then one tuple per line
/// (whitespace separated) or `pattern <text>`.
struct GoldenList {
  FamilyId family = FamilyId::f233;
  int case_no = 1;
  std::vector<Solution> solutions;
  std::vector<SolutionPattern> patterns;

  /// Explicit tuples plus pattern instances, sorted and deduplicated.
  std::vector<Solution> expand(const Bounds& b) const;
};

GoldenList parse_golden(std::string_view text);
GoldenList load_golden(const std::string& path);

}  // namespace oeg::dunbar
