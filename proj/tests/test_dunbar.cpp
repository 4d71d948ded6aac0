#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "oeg/dunbar/montesinos.hpp"
#include "oeg/dunbar/solver.hpp"
#include "oeg/fpgroup/abelian.hpp"
#include "oeg/fpgroup/coset_enumeration.hpp"
#include "dunbar_oracle.hpp"
#include "support.hpp"

using namespace oeg;
using dunbar::FamilyId;
using dunbar::MontesinosParams;
using dunbar::Solution;
using test::brute_force;
using test::oracle_constraints;
using test::oracle_det;

namespace {

std::string data_file(FamilyId f, int case_no) {
  const char* stem = f == FamilyId::f233   ? "233"
                     : f == FamilyId::f234 ? "234"
                     : f == FamilyId::f235 ? "235"
                     : f == FamilyId::f22n ? "22n"
                                           : "nn1";
  return test::data_path(std::string("dunbar/") + stem + "_case" + std::to_string(case_no) + ".txt");
}

MontesinosParams params(long long k, std::array<long long, 3> m, std::array<long long, 3> n) {
  MontesinosParams p;
  p.k = k;
  p.m = m;
  p.n = n;
  return p;
}

}  // namespace

TEST_CASE("strut gcd and derived parameters") {
  CHECK(dunbar::strut_gcd(0, 7) == 7);
  CHECK(dunbar::strut_gcd(-4, 6) == 2);
  const auto p = params(0, {0, -2, 1}, {2, 6, 3});
  CHECK(p.d(0) == 2);
  CHECK(p.n_prime(0) == 1);
  CHECK(p.m_prime(1) == -1);
  CHECK(p.n_prime(1) == 3);
  CHECK_THROWS_AS(params(0, {2, 0, 0}, {3, 1, 1}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(params(0, {0, 0, 0}, {0, 1, 1}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(dunbar::determinant(params(0, {2, 0, 0}, {3, 1, 1})), std::invalid_argument);
}

TEST_CASE("determinant examples") {
  CHECK(dunbar::determinant(params(0, {0, 0, 1}, {2, 3, 3})) == 1);
  CHECK(dunbar::determinant(params(1, {-1, 0, 0}, {2, 3, 4})) == 1);
  CHECK(dunbar::determinant(params(0, {0, 0, 0}, {2, 3, 5})) == 0);
}

TEST_CASE("determinant equals the 4x4 presentation determinant up to sign") {
  test::Rng rng(47);
  for (int trial = 0; trial < 5000; ++trial) {
    std::array<long long, 3> n{}, m{};
    for (int i = 0; i < 3; ++i) {
      n[i] = 1 + static_cast<long long>(rng() % 40);
      m[i] = static_cast<long long>(rng() % (n[i] / 2 * 2 + 1)) - n[i] / 2;
    }
    const long long k = static_cast<long long>(rng() % 7) - 3;
    const long long ours = dunbar::determinant(params(k, m, n));
    const long long oracle = oracle_det(k, m, n);
    CHECK(std::llabs(ours) == std::llabs(oracle));
  }
}

TEST_CASE("constraint checks") {
  CHECK(dunbar::check_constraints(params(0, {0, 1, 0}, {2, 3, 3}), 1).pass);
  const auto all_nonzero = dunbar::check_constraints(params(0, {1, 1, 1}, {2, 3, 3}), 1);
  CHECK_FALSE(all_nonzero.pass);
  CHECK_FALSE(all_nonzero.reason.empty());
  CHECK(dunbar::check_constraints(params(1, {0, 0, 0}, {3, 3, 1}), 2).pass);
  CHECK_FALSE(dunbar::check_constraints(params(0, {0, 0, 0}, {2, 3, 3}), 1).pass);
  CHECK_THROWS_AS(dunbar::check_constraints(params(0, {0, 0, 0}, {2, 3, 3}), 3), std::invalid_argument);
  test::Rng rng(53);
  for (int trial = 0; trial < 5000; ++trial) {
    std::array<long long, 3> n{}, m{};
    for (int i = 0; i < 3; ++i) {
      n[i] = 1 + static_cast<long long>(rng() % 12);
      m[i] = static_cast<long long>(rng() % (n[i] / 2 * 2 + 1)) - n[i] / 2;
      if (rng() % 3 == 0) m[i] = 0;
    }
    for (int c : {1, 2}) {
      const auto r = dunbar::check_constraints(params(0, m, n), c);
      CHECK(r.pass == oracle_constraints(m, n, c));
      CHECK(r.pass == r.reason.empty());
    }
  }
}

TEST_CASE("solve_family examples") {
  auto sols = [](FamilyId f, int c) { return dunbar::solve_family(f, c).solutions; };
  CHECK(sols(FamilyId::f233, 1) == std::vector<Solution>{{0, 0, -1, 0}, {0, 0, 0, -1}, {0, 0, 0, 1}, {0, 0, 1, 0}});
  CHECK(sols(FamilyId::f235, 1) == std::vector<Solution>{{-1, 1, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1},
                                                         {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, -1, 0, 0}});
  CHECK(sols(FamilyId::fnn1, 2) == std::vector<Solution>{{-1, 0, 0, 3}, {0, -1, 0, 3}, {0, 0, -1, 3}, {0, 0, 1, 3},
                                                         {0, 1, 0, 3}, {1, 0, 0, 3}});
  CHECK(sols(FamilyId::f234, 2).empty());
  CHECK(sols(FamilyId::f22n, 2).empty());
  CHECK(sols(FamilyId::f234, 1).size() == 8);
  CHECK(dunbar::normalize_solutions(FamilyId::f234, sols(FamilyId::f234, 1)).size() == 4);
  CHECK(sols(FamilyId::f233, 2).size() == 12);
  CHECK_THROWS_AS(dunbar::solve_family(FamilyId::f233, 0), std::invalid_argument);
}

TEST_CASE("solver equals the naive brute force") {
  for (FamilyId f : dunbar::kAllFamilies) {
    for (int c : {1, 2}) {
      CAPTURE(dunbar::family_name(f));
      CAPTURE(c);
      dunbar::Bounds b;
      b.max_n = 60;
      const auto fam = dunbar::solve_family(f, c, b);
      CHECK(fam.solutions == brute_force(f, c, b.max_n));
      CHECK(fam.patterns_match);
      CHECK(fam.truncated.empty());
      CHECK(fam.unwitnessed.empty());
    }
  }
}

TEST_CASE("k = +-2 never solves") {
  for (FamilyId f : dunbar::kAllFamilies) {
    for (int c : {1, 2}) {
      for (const auto& s : brute_force(f, c, 40, -3, 3)) CHECK(std::llabs(s[0]) <= 1);
    }
  }
}

TEST_CASE("sign duality and the k = -1 exclusion") {
  for (FamilyId f : dunbar::kAllFamilies) {
    for (int c : {1, 2}) {
      dunbar::Bounds b;
      b.max_n = 80;
      const auto sols = dunbar::solve_family(f, c, b).solutions;
      const std::set<Solution> all(sols.begin(), sols.end());
      const std::size_t signed_width = f == FamilyId::fnn1 ? 3 : 4;
      for (const auto& s : sols) {
        Solution flip = s;
        for (std::size_t i = 0; i < signed_width; ++i) flip[i] = -flip[i];
        CHECK(all.count(flip) == 1);
        const long long det = dunbar::determinant(dunbar::params_of(f, s));
        CHECK(dunbar::determinant(dunbar::params_of(f, flip)) == -det);
        // with some m_i zero and det = +1, k is never -1
        if (c == 1 && det == 1) CHECK(s[0] != -1);
      }
    }
  }
}

TEST_CASE("double covers are simply connected") {
  for (FamilyId f : dunbar::kAllFamilies) {
    for (int c : {1, 2}) {
      dunbar::Bounds b;
      b.max_n = 24;
      for (const auto& s : dunbar::solve_family(f, c, b).solutions) {
        CAPTURE(dunbar::format_solution(s));
        CHECK(fp::group_order(dunbar::montesinos_presentation(dunbar::params_of(f, s))) == 1);
      }
    }
  }
  const auto zero = dunbar::montesinos_presentation(params(0, {0, 0, 0}, {2, 3, 5}));
  const auto inv = fp::abelian_invariants(zero);
  CHECK(std::find(inv.begin(), inv.end(), 0) != inv.end());
  CHECK(zero.generator_count() == 4);
  CHECK(zero.relators().size() == 7);
  CHECK(fp::group_order(dunbar::montesinos_presentation(params(0, {0, 0, 1}, {2, 3, 3}))) == 1);
}

TEST_CASE("non-solutions have nontrivial first homology") {
  // |det| > 1 gives a finite abelianization of that order
  std::size_t seen = 0;
  for (long long m1 = -1; m1 <= 1; ++m1) {
    for (long long m3 = -2; m3 <= 2; ++m3) {
      const auto p = params(0, {m1, 0, m3}, {2, 3, 5});
      const long long det = std::llabs(dunbar::determinant(p));
      if (det <= 1) continue;
      long long prod = 1;
      for (long long v : fp::abelian_invariants(dunbar::montesinos_presentation(p))) prod *= v;
      CHECK(prod == det);
      ++seen;
    }
  }
  CHECK(seen > 0);
}

TEST_CASE("normalization") {
  const auto o = dunbar::normalize_solutions(FamilyId::f233, {{0, 0, 0, 1}, {0, 0, 0, -1}});
  REQUIRE(o.size() == 1);
  CHECK(o[0].representative == Solution{0, 0, 0, -1});
  CHECK(o[0].members.size() == 2);
  CHECK(dunbar::normalize_solutions(FamilyId::f233, dunbar::solve_family(FamilyId::f233, 1).solutions).size() == 2);
  const auto nn = dunbar::normalize_solutions(FamilyId::fnn1, dunbar::solve_family(FamilyId::fnn1, 2).solutions);
  REQUIRE(nn.size() == 2);
  CHECK(nn[0].representative == Solution{-1, 0, 0, 3});
  CHECK(nn[0].members == std::vector<Solution>{{-1, 0, 0, 3}, {1, 0, 0, 3}});
  // swapping m1 and m2 joins the other four
  CHECK(nn[1].members.size() == 4);
  // orbits partition the input
  for (FamilyId f : dunbar::kAllFamilies) {
    for (int c : {1, 2}) {
      dunbar::Bounds b;
      b.max_n = 50;
      const auto sols = dunbar::solve_family(f, c, b).solutions;
      std::size_t total = 0;
      for (const auto& orbit : dunbar::normalize_solutions(f, sols)) {
        total += orbit.members.size();
        CHECK(orbit.representative == *std::min_element(orbit.members.begin(), orbit.members.end()));
      }
      CHECK(total == sols.size());
    }
  }
}

TEST_CASE("patterns") {
  const auto p = dunbar::SolutionPattern::parse("0, +-1, 0, -+m d, (1+2m)d | m>=0 d>=3");
  dunbar::Bounds b;
  b.max_n = 9;
  const auto inst = p.instantiate(FamilyId::f22n, b);
  // n = (1+2m)d <= 9: (m, d) in {(0,3..9), (1,3)}, both signs
  CHECK(inst.size() == 16);
  CHECK(std::find(inst.begin(), inst.end(), Solution{0, 1, 0, -3, 9}) != inst.end());
  CHECK(std::find(inst.begin(), inst.end(), Solution{0, -1, 0, 3, 9}) != inst.end());
  CHECK(p == dunbar::SolutionPattern::parse("0,+-1,0,-+md,(1+2m)d|m>=0 d>=3"));
  CHECK_FALSE(p == dunbar::SolutionPattern::parse("0, 0, +-1, -+m d, (1+2m)d | m>=0 d>=3"));

  dunbar::Bounds tiny;
  tiny.max_n = 2;
  const auto fam = dunbar::solve_family(FamilyId::f22n, 1, tiny);
  CHECK(fam.unwitnessed.size() == 4);
  dunbar::Bounds cut;
  cut.max_n = 200;
  cut.max_m = 3;
  cut.max_d = 4;
  CHECK_FALSE(dunbar::solve_family(FamilyId::f22n, 1, cut).truncated.empty());
  CHECK(dunbar::builtin_patterns(FamilyId::f233, 1).empty());
  CHECK(dunbar::builtin_patterns(FamilyId::fnn1, 1).size() == 12);
}

TEST_CASE("golden lists") {
  for (FamilyId f : dunbar::kAllFamilies) {
    for (int c : {1, 2}) {
      const auto g = dunbar::load_golden(data_file(f, c));
      CHECK(g.family == f);
      CHECK(g.case_no == c);
      dunbar::Bounds b;
      CHECK(g.expand(b) == dunbar::solve_family(f, c, b).solutions);
    }
  }
  CHECK_THROWS_AS(dunbar::parse_golden("case 1\n0 0 0 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(dunbar::parse_golden("family 2,3,3\n"), std::invalid_argument);
  CHECK_THROWS_AS(dunbar::parse_golden("family 2,3,3\ncase 3\n"), std::invalid_argument);
  CHECK_THROWS_AS(dunbar::parse_golden("family 2,3,3\ncase 1\n0 0 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(dunbar::parse_golden("family 2,3,3\ncase 1\n0 0 x 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(dunbar::parse_golden("family 9,9,9\ncase 1\n"), std::invalid_argument);
}

TEST_CASE("family names") {
  for (FamilyId f : dunbar::kAllFamilies) CHECK(dunbar::parse_family(dunbar::family_name(f)) == f);
  CHECK(dunbar::parse_family("(2,3,5)") == FamilyId::f235);
  CHECK(dunbar::parse_family("nn1") == FamilyId::fnn1);
  CHECK_THROWS_AS(dunbar::parse_family("2,3,6"), std::invalid_argument);
  CHECK_THROWS_AS(dunbar::params_of(FamilyId::f22n, {0, 0, 0, 0}), std::invalid_argument);
  CHECK(dunbar::format_solution({0, -1, 2}) == "(0, -1, 2)");
}
