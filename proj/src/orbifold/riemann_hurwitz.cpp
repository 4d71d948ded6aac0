#include "oeg/orbifold/riemann_hurwitz.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace oeg::orb {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) {
    return std::to_string(r.numerator());
  }
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

void Orbifold2::validate() const {
  if (base_genus < 0) {
    throw std::invalid_argument("negative base genus");
  }
  for (long long q : cone_indices) {
    if (q < 2) {
      throw std::invalid_argument("cone index " + std::to_string(q) + " below 2");
    }
  }
}

SingularType::SingularType(long long a, long long b, long long c, long long d) : q_{a, b, c, d} {
  std::sort(q_.begin(), q_.end());
  if (q_[0] < 2) {
    throw std::invalid_argument("singular index " + std::to_string(q_[0]) + " below 2");
  }
}

SingularType SingularType::parse(const std::string& text) {
  std::string t;
  for (char c : text) {
    if (c == ',' ) {
      t += ' ';
    } else if (c != '(' && c != ')') {
      t += c;
    }
  }
  std::istringstream in(t);
  long long v[4];
  for (long long& x : v) {
    if (!(in >> x)) {
      throw std::invalid_argument("singular type needs four integers: '" + text + "'");
    }
  }
  std::string rest;
  if (in >> rest) {
    throw std::invalid_argument("singular type needs four integers: '" + text + "'");
  }
  return SingularType(v[0], v[1], v[2], v[3]);
}

bool SingularType::in_lemma_list() const {
  if (q_[0] != 2 || q_[1] != 2) {
    return false;
  }
  if (q_[2] == 2) {
    return q_[3] >= 3;
  }
  return q_[2] == 3 && q_[3] >= 3 && q_[3] <= 5;
}

std::string SingularType::to_string() const {
  return "(" + std::to_string(q_[0]) + "," + std::to_string(q_[1]) + "," + std::to_string(q_[2]) + "," +
         std::to_string(q_[3]) + ")";
}

Rational orbifold_euler_characteristic(const Orbifold2& o) {
  o.validate();
  Rational chi(2 - 2 * o.base_genus);
  for (long long q : o.cone_indices) {
    chi -= Rational(q - 1, q);
  }
  return chi;
}

GenusResult quotient_genus(long long group_order, const Orbifold2& o) {
  if (group_order < 1) {
    throw std::invalid_argument("group order must be positive");
  }
  GenusResult r;
  r.value = Rational(1) - Rational(group_order) * orbifold_euler_characteristic(o) / 2;
  if (r.value.denominator() == 1 && r.value.numerator() >= 0) {
    r.genus = r.value.numerator();
  }
  return r;
}

Rational order_from_type(long long g, const SingularType& t) {
  if (g < 2) {
    throw std::invalid_argument("genus must be at least 2");
  }
  if (!t.in_lemma_list()) {
    throw std::invalid_argument("singular type " + t.to_string() + " is not of the admissible kinds");
  }
  const long long n = t[3];
  if (t[2] == 2) {
    return Rational(4 * n * (g - 1), n - 2);
  }
  switch (n) {
    case 3:
      return Rational(6 * (g - 1));
    case 4:
      return Rational(24 * (g - 1), 5);
    default:
      return Rational(30 * (g - 1), 7);
  }
}

std::vector<SingularType> admissible_types(long long order, long long g) {
  std::vector<SingularType> out;
  if (g < 2 || order <= 4 * (g - 1)) {
    return out;
  }
  // (2,2,2,n): order (n - 2) = 4n(g - 1), so n = 2 order / (order - 4(g - 1)).
  const long long num = 2 * order;
  const long long den = order - 4 * (g - 1);
  if (num % den == 0 && num / den >= 3) {
    out.emplace_back(2, 2, 2, num / den);
  }
  for (long long n : {3, 4, 5}) {
    const SingularType t(2, 2, 3, n);
    if (order_from_type(g, t) == Rational(order)) {
      out.push_back(t);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<VertexModel> vertex_model(long long a, long long b, long long c) {
  std::array<long long, 3> v{a, b, c};
  std::sort(v.begin(), v.end());
  if (v[0] < 1) {
    return std::nullopt;
  }
  if (v[0] == 1) {
    if (v[1] != v[2]) {
      return std::nullopt;
    }
    return VertexModel{LocalModel::cyclic, v[1], v[1]};
  }
  const Rational s = Rational(1, v[0]) + Rational(1, v[1]) + Rational(1, v[2]) - 1;
  if (s <= 0) {
    return std::nullopt;
  }
  const Rational ord = Rational(2) / s;
  const long long order = ord.numerator();
  if (v[1] == 2) {
    return VertexModel{LocalModel::dihedral, v[2], order};
  }
  switch (v[2]) {
    case 3:
      return VertexModel{LocalModel::tetrahedral, 0, order};
    case 4:
      return VertexModel{LocalModel::octahedral, 0, order};
    default:
      return VertexModel{LocalModel::icosahedral, 0, order};
  }
}

}  // namespace oeg::orb
