#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "oeg/fpgroup/presentation.hpp"

namespace oeg::dunbar {

/// gcd(|m|, n) with gcd(0, n) = n.
long long strut_gcd(long long m, long long n);

/// Parameters (k, m_i, n_i) of a fibred diagram with three exceptional
/// fibres.
struct MontesinosParams {
  long long k = 0;
  std::array<long long, 3> m{};
  std::array<long long, 3> n{1, 1, 1};

  long long d(std::size_t i) const { return strut_gcd(m[i], n[i]); }
  long long m_prime(std::size_t i) const { return m[i] / d(i); }
  long long n_prime(std::size_t i) const { return n[i] / d(i); }

  /// n_i >= 1 and |2 m_i| <= n_i. Throws std::invalid_argument.
  void validate() const;
  std::string to_string() const;
};

/// k n1'n2'n3' + m1'n2'n3' + n1'm2'n3' + n1'n2'm3'. Validates first.
long long determinant(const MontesinosParams& p);

struct ConstraintCheck {
  bool pass = false;
  std::string reason;  // empty on pass
};

/// Case 1: some m_i zero, some nonzero, and the sorted d_i are (1,2,d) with
/// d > 2, (1,3,4) or (1,3,5). Case 2: the sorted d_i are (1,1,3) or
/// (1,3,3). Throws std::invalid_argument for another case number.
ConstraintCheck check_constraints(const MontesinosParams& p, int case_no);

/// <x,y,z,t | x^n1' t^m1', y^n2' t^m2', z^n3' t^m3', x y z t^-k,
///  [x,t], [y,t], [z,t]>.
fp::Presentation montesinos_presentation(const MontesinosParams& p);

}  // namespace oeg::dunbar
