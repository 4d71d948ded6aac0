#pragma once

// Naive Montesinos sweep that shares no code with the solver.

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <vector>

#include "oeg/dunbar/solver.hpp"

namespace oeg::test {

using Mat4 = std::array<std::array<long long, 4>, 4>;

inline long long det3(const Mat4& m, int skip_row, int skip_col) {
  long long a[3][3];
  for (int i = 0, r = 0; i < 4; ++i) {
    if (i == skip_row) continue;
    for (int j = 0, c = 0; j < 4; ++j) {
      if (j == skip_col) continue;
      a[r][c++] = m[i][j];
    }
    ++r;
  }
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

inline long long det4(const Mat4& m) {
  long long s = 0;
  for (int j = 0; j < 4; ++j) s += (j % 2 ? -1 : 1) * m[0][j] * det3(m, 0, j);
  return s;
}

inline long long d_of(long long m, long long n) { return m == 0 ? n : std::gcd(m < 0 ? -m : m, n); }

// Abelianized relator matrix of the double cover, columns x y z t.
inline long long oracle_det(long long k, std::array<long long, 3> m, std::array<long long, 3> n) {
  Mat4 a{};
  for (int i = 0; i < 3; ++i) {
    const long long d = d_of(m[i], n[i]);
    a[i][i] = n[i] / d;
    a[i][3] = m[i] / d;
  }
  a[3] = {1, 1, 1, -k};
  return det4(a);
}

inline bool oracle_constraints(std::array<long long, 3> m, std::array<long long, 3> n, int case_no) {
  std::multiset<long long> d;
  for (int i = 0; i < 3; ++i) d.insert(d_of(m[i], n[i]));
  if (case_no == 1) {
    const int zeros = static_cast<int>(std::count(m.begin(), m.end(), 0));
    if (zeros == 0 || zeros == 3) return false;
    const std::vector<long long> v(d.begin(), d.end());
    return (v[0] == 1 && v[1] == 2 && v[2] > 2) || v == std::vector<long long>{1, 3, 4} ||
           v == std::vector<long long>{1, 3, 5};
  }
  return d == std::multiset<long long>{1, 1, 3} || d == std::multiset<long long>{1, 3, 3};
}

// Straight nested loops over k and every m_i with |2 m_i| <= n_i.
inline std::vector<dunbar::Solution> brute_force(dunbar::FamilyId f, int case_no, long long max_n, long long k_lo = -1, long long k_hi = 1) {
  std::vector<dunbar::Solution> out;
  auto sweep = [&](std::array<long long, 3> n, auto&& emit) {
    for (long long k = k_lo; k <= k_hi; ++k)
      for (long long m1 = -n[0] / 2; m1 <= n[0] / 2; ++m1)
        for (long long m2 = -n[1] / 2; m2 <= n[1] / 2; ++m2)
          for (long long m3 = -n[2] / 2; m3 <= n[2] / 2; ++m3) {
            const long long det = oracle_det(k, {m1, m2, m3}, n);
            if ((det == 1 || det == -1) && oracle_constraints({m1, m2, m3}, n, case_no)) emit(k, m1, m2, m3);
          }
  };
  switch (f) {
    case dunbar::FamilyId::f233:
    case dunbar::FamilyId::f234:
    case dunbar::FamilyId::f235: {
      const long long last = f == dunbar::FamilyId::f233 ? 3 : f == dunbar::FamilyId::f234 ? 4 : 5;
      sweep({2, 3, last}, [&](long long k, long long a, long long b, long long c) { out.push_back({k, a, b, c}); });
      break;
    }
    case dunbar::FamilyId::f22n:
      for (long long n = 2; n <= max_n; ++n)
        sweep({2, 2, n}, [&](long long k, long long a, long long b, long long c) { out.push_back({k, a, b, c, n}); });
      break;
    case dunbar::FamilyId::fnn1:
      for (long long n = 2; n <= max_n; ++n)
        sweep({n, n, 1}, [&](long long k, long long a, long long b, long long) { out.push_back({k, a, b, n}); });
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oeg::test
