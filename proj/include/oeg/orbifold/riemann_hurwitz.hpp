#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace oeg::orb {

using Rational = boost::rational<long long>;

std::string to_string(const Rational& r);

/// Closed 2-orbifold: a genus-`base_genus` surface with cone points.
struct Orbifold2 {
  long long base_genus = 0;
  std::vector<long long> cone_indices;  // each >= 2

  /// Throws std::invalid_argument on a negative genus or an index below 2.
  void validate() const;
};

/// Sorted cone indices of a sphere with four cone points.
class SingularType {
 public:
  /// Sorts; throws std::invalid_argument on an index below 2.
  SingularType(long long a, long long b, long long c, long long d);
  /// Parses `2,2,3,4` or `(2,2,3,4)`.
  static SingularType parse(const std::string& text);

  const std::array<long long, 4>& q() const { return q_; }
  long long operator[](std::size_t i) const { return q_[i]; }
  Orbifold2 quotient() const { return Orbifold2{0, {q_[0], q_[1], q_[2], q_[3]}}; }
  /// One of (2,2,2,n) with n >= 3, (2,2,3,3), (2,2,3,4), (2,2,3,5).
  bool in_lemma_list() const;
  std::string to_string() const;

  friend bool operator==(const SingularType&, const SingularType&) = default;
  friend auto operator<=>(const SingularType&, const SingularType&) = default;

 private:
  std::array<long long, 4> q_;
};

/// 2 - 2*base_genus - sum(1 - 1/q).
Rational orbifold_euler_characteristic(const Orbifold2& o);

struct GenusResult {
  /// 1 - |G| chi / 2, exact.
  Rational value;
  /// The genus when `value` is a non-negative integer.
  std::optional<long long> genus;

  bool realizable() const { return genus.has_value(); }
};

/// Solves 2 - 2g = |G| chi(o). Throws std::invalid_argument for |G| < 1.
GenusResult quotient_genus(long long group_order, const Orbifold2& o);

/// |G| forced by genus `g` and a type from the lemma list. Throws
/// std::invalid_argument for other types or g < 2.
Rational order_from_type(long long g, const SingularType& t);

/// Types in the lemma list whose forced order at genus `g` equals `order`.
std::vector<SingularType> admissible_types(long long order, long long g);

enum class LocalModel { cyclic, dihedral, tetrahedral, octahedral, icosahedral };

struct VertexModel {
  LocalModel model;
  long long n = 0;             // for cyclic and dihedral
  long long group_order = 0;   // 2 / (1/a + 1/b + 1/c - 1)
};

/// Local model at a vertex with incident labels a, b, c. A label of 1 is a
/// smoothed point on an edge, so only (1, n, n) passes with a 1 present.
std::optional<VertexModel> vertex_model(long long a, long long b, long long c);

}  // namespace oeg::orb
