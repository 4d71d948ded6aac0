#include "oeg/dunbar/montesinos.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace oeg::dunbar {

long long strut_gcd(long long m, long long n) {
  return m == 0 ? n : std::gcd(std::llabs(m), n);
}

void MontesinosParams::validate() const {
  for (std::size_t i = 0; i < 3; ++i) {
    if (n[i] < 1) {
      throw std::invalid_argument("n" + std::to_string(i + 1) + " must be positive");
    }
    if (2 * std::llabs(m[i]) > n[i]) {
      throw std::invalid_argument("|2 m" + std::to_string(i + 1) + "| exceeds n" + std::to_string(i + 1));
    }
  }
}

std::string MontesinosParams::to_string() const {
  std::string s = "k=" + std::to_string(k);
  for (std::size_t i = 0; i < 3; ++i) {
    s += " (" + std::to_string(m[i]) + "," + std::to_string(n[i]) + ")";
  }
  return s;
}

long long determinant(const MontesinosParams& p) {
  p.validate();
  const long long n1 = p.n_prime(0);
  const long long n2 = p.n_prime(1);
  const long long n3 = p.n_prime(2);
  return p.k * n1 * n2 * n3 + p.m_prime(0) * n2 * n3 + n1 * p.m_prime(1) * n3 + n1 * n2 * p.m_prime(2);
}

ConstraintCheck check_constraints(const MontesinosParams& p, int case_no) {
  if (case_no != 1 && case_no != 2) {
    throw std::invalid_argument("case must be 1 or 2");
  }
  for (std::size_t i = 0; i < 3; ++i) {
    if (p.n[i] < 1 || 2 * std::llabs(p.m[i]) > p.n[i]) {
      return {false, "|2m" + std::to_string(i + 1) + "| > n" + std::to_string(i + 1)};
    }
  }
  std::array<long long, 3> d{p.d(0), p.d(1), p.d(2)};
  std::sort(d.begin(), d.end());
  auto ds = [&] {
    return "{" + std::to_string(d[0]) + "," + std::to_string(d[1]) + "," + std::to_string(d[2]) + "}";
  };
  if (case_no == 1) {
    const bool some_zero = std::any_of(p.m.begin(), p.m.end(), [](long long m) { return m == 0; });
    const bool some_nonzero = std::any_of(p.m.begin(), p.m.end(), [](long long m) { return m != 0; });
    if (!some_zero) {
      return {false, "no m_i is zero"};
    }
    if (!some_nonzero) {
      return {false, "every m_i is zero"};
    }
    const bool ok = (d[0] == 1 && d[1] == 2 && d[2] > 2) || d == std::array<long long, 3>{1, 3, 4} ||
                    d == std::array<long long, 3>{1, 3, 5};
    if (!ok) {
      return {false, "d multiset " + ds() + " is not {1,2,d>2}, {1,3,4} or {1,3,5}"};
    }
    return {true, ""};
  }
  if (d != std::array<long long, 3>{1, 1, 3} && d != std::array<long long, 3>{1, 3, 3}) {
    return {false, "d multiset " + ds() + " is not {1,1,3} or {1,3,3}"};
  }
  return {true, ""};
}

fp::Presentation montesinos_presentation(const MontesinosParams& p) {
  p.validate();
  fp::Presentation pres({"x", "y", "z", "t"});
  const fp::Word t = fp::Word::generator(3);
  for (std::uint32_t i = 0; i < 3; ++i) {
    pres.add_relator(fp::Word::generator(i, static_cast<int>(p.n_prime(i))) *
                     t.pow(static_cast<int>(p.m_prime(i))));
  }
  pres.add_relator(fp::Word::generator(0) * fp::Word::generator(1) * fp::Word::generator(2) *
                   t.pow(static_cast<int>(-p.k)));
  for (std::uint32_t i = 0; i < 3; ++i) {
    const fp::Word g = fp::Word::generator(i);
    pres.add_relator(g.inverse() * t.inverse() * g * t);
  }
  return pres;
}

}  // namespace oeg::dunbar
