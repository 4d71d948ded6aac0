#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "oeg/permgroup/closure.hpp"
#include "oeg/permgroup/kernels.hpp"
#include "oeg/permgroup/lemma62.hpp"
#include "support.hpp"

using namespace oeg;
using perm::PairElement;
using perm::Permutation;

namespace {

Permutation random_perm(test::Rng& rng, std::size_t degree) {
  std::vector<std::uint8_t> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation::from_images(img);
}

// Plain set-based closure with operator*, no kernels.
template <class E>
std::set<E> naive_closure(const std::vector<E>& gens) {
  std::set<E> seen{E{}};
  std::vector<E> todo{E{}};
  while (!todo.empty()) {
    const E e = todo.back();
    todo.pop_back();
    for (const E& g : gens) {
      if (seen.insert(e * g).second) todo.push_back(e * g);
    }
  }
  return seen;
}

}  // namespace

TEST_CASE("cycle notation") {
  const auto p = perm::parse_cycles("(1 2)(3 4 5)");
  CHECK(p[0] == 1);
  CHECK(p[1] == 0);
  CHECK(p[2] == 3);
  CHECK(p[4] == 2);
  CHECK(p.order() == 6);
  CHECK(p.degree() == 5);
  CHECK(p.to_cycles() == "(1 2)(3 4 5)");
  CHECK(perm::parse_cycles("()").is_identity());
  CHECK(perm::parse_cycles("()").to_cycles() == "()");
  CHECK(perm::parse_cycles("(16 1)").degree() == 16);
  for (const char* bad : {"(1 1)", "(0 2)", "(17 1)", "(1 2", "1 2)", "(a)"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(perm::parse_cycles(bad), std::invalid_argument);
  }
}

TEST_CASE("from_images rejects non-bijections") {
  const std::vector<std::uint8_t> dup{0, 0, 2};
  const std::vector<std::uint8_t> out_of_range{0, 3, 1};
  CHECK_THROWS_AS(Permutation::from_images(dup), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_images(out_of_range), std::invalid_argument);
  const std::vector<std::uint8_t> ok{2, 0, 1};
  CHECK(Permutation::from_images(ok).order() == 3);
}

TEST_CASE("products follow apply-left-first") {
  const auto a = perm::parse_cycles("(1 2)");
  const auto b = perm::parse_cycles("(2 3)");
  // 1 -> 2 -> 3
  CHECK((a * b)[0] == 2);
  CHECK((a * b).to_cycles() == "(1 3 2)");
  test::Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto p = random_perm(rng, 1 + rng() % 16);
    CHECK((p * p.inverse()).is_identity());
    CHECK((p.inverse() * p).is_identity());
  }
}

TEST_CASE("every kernel matches the scalar product") {
  test::Rng rng(7);
  const auto isas = perm::supported_isas();
  REQUIRE(isas.front() == perm::Isa::scalar);
  for (perm::Isa isa : isas) {
    CAPTURE(perm::isa_name(isa));
    const auto& k = perm::kernels_for(isa);
    CHECK(k.isa == isa);
    for (std::size_t n : {0u, 1u, 2u, 3u, 7u, 8u, 31u, 64u, 67u}) {
      std::vector<Permutation> in(n);
      std::vector<PairElement> pin(n);
      for (std::size_t i = 0; i < n; ++i) {
        in[i] = random_perm(rng, 16);
        pin[i] = {random_perm(rng, 5), random_perm(rng, 12)};
      }
      const Permutation g = random_perm(rng, 16);
      const PairElement pg{random_perm(rng, 16), random_perm(rng, 4)};

      std::vector<Permutation> out(n);
      std::vector<PairElement> pout(n);
      k.mul_perm(in.data(), n, g, out.data());
      k.mul_pair(pin.data(), n, pg, pout.data());
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(out[i] == in[i] * g);
        CHECK(pout[i] == pin[i] * pg);
      }
      // aliasing in place
      k.mul_perm(in.data(), n, g, in.data());
      k.mul_pair(pin.data(), n, pg, pin.data());
      CHECK(in == out);
      CHECK(pin == pout);
    }
  }
}

TEST_CASE("kernel selection") {
  const auto& k = perm::kernels();
  const auto isas = perm::supported_isas();
  CHECK(std::find(isas.begin(), isas.end(), k.isa) != isas.end());
#if defined(__x86_64__)
  CHECK_THROWS_AS(perm::kernels_for(perm::Isa::neon), std::invalid_argument);
#endif
}

TEST_CASE("closure examples") {
  const std::vector<Permutation> t{perm::parse_cycles("(1 2)")};
  CHECK(perm::closure_order(t) == 2);
  const std::vector<Permutation> s3{perm::parse_cycles("(1 2)"), perm::parse_cycles("(1 2 3)")};
  CHECK(perm::closure_order(s3) == 6);
  const auto cl = perm::closure(s3);
  CHECK(cl.front().is_identity());

  const auto a = perm::parse_cycles("(1 2)(3 4)"), b = perm::parse_cycles("(1 3 5)");
  const std::vector<Permutation> a5{a, b};
  CHECK(perm::closure_order(a5) == 60);
  const std::vector<PairElement> diag{{a, a}, {b, b}};
  CHECK(perm::closure_order(diag) == 60);
  const std::vector<PairElement> full{{a, Permutation{}}, {b, Permutation{}}, {Permutation{}, a}, {Permutation{}, b}};
  CHECK(perm::closure_order(full) == 3600);

  CHECK_THROWS_AS(perm::closure_order(std::span<const Permutation>{}), std::invalid_argument);
  perm::ClosureOptions small;
  small.max_elements = 10;
  CHECK_THROWS_AS(perm::closure_order(a5, small), perm::ClosureLimitExceeded);
}

TEST_CASE("closure agrees across kernels and with a naive closure") {
  test::Rng rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Permutation> gens;
    for (int i = 0; i < 1 + static_cast<int>(rng() % 3); ++i) gens.push_back(random_perm(rng, 6));
    const auto naive = naive_closure(gens);
    std::vector<Permutation> reference;
    for (perm::Isa isa : perm::supported_isas()) {
      perm::ClosureOptions opt;
      opt.kernels = &perm::kernels_for(isa);
      const auto cl = perm::closure(gens, opt);
      CHECK(std::set<Permutation>(cl.begin(), cl.end()) == naive);
      CHECK(cl.size() == naive.size());
      if (reference.empty()) reference = cl;
      CHECK(cl == reference);
    }
  }
}

TEST_CASE("Lagrange along subgroup chains") {
  test::Rng rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Permutation> gens{random_perm(rng, 5)};
    auto prev = perm::closure_order(gens);
    for (int step = 0; step < 3; ++step) {
      gens.push_back(random_perm(rng, 5));
      const auto next = perm::closure_order(gens);
      CHECK(next % prev == 0);
      CHECK(120 % next == 0);
      prev = next;
    }
  }
}

TEST_CASE("projection of a closure is the closure of the projections") {
  test::Rng rng(37);
  const auto s4 = perm::small_group_elements(perm::SmallGroup::S4);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<PairElement> gens;
    std::vector<Permutation> left, right;
    for (int i = 0; i < 2; ++i) {
      const PairElement e{s4[rng() % s4.size()], s4[rng() % s4.size()]};
      gens.push_back(e);
      left.push_back(e.left);
      right.push_back(e.right);
    }
    const auto h = perm::closure(gens);
    std::set<Permutation> pl, pr;
    for (const auto& e : h) {
      pl.insert(e.left);
      pr.insert(e.right);
    }
    const auto cl = perm::closure(left), cr = perm::closure(right);
    CHECK(pl == std::set<Permutation>(cl.begin(), cl.end()));
    CHECK(pr == std::set<Permutation>(cr.begin(), cr.end()));
    CHECK(h.size() % cl.size() == 0);
  }
}

TEST_CASE("pair order is the lcm of component orders") {
  test::Rng rng(41);
  for (int trial = 0; trial < 500; ++trial) {
    const PairElement e{random_perm(rng, 1 + rng() % 16), random_perm(rng, 1 + rng() % 16)};
    CHECK(e.order() == std::lcm(e.left.order(), e.right.order()));
    // brute force the element order itself
    PairElement p = e;
    std::uint32_t n = 1;
    while (!p.is_identity()) {
      p = p * e;
      ++n;
    }
    CHECK(e.order() == n);
  }
}

TEST_CASE("small groups") {
  CHECK(perm::small_group_elements(perm::SmallGroup::A4).size() == 12);
  CHECK(perm::small_group_elements(perm::SmallGroup::S4).size() == 24);
  CHECK(perm::small_group_elements(perm::SmallGroup::A5).size() == 60);
  CHECK(perm::small_group_elements(perm::SmallGroup::A5).front().is_identity());
  CHECK(perm::parse_small_group("S4") == perm::SmallGroup::S4);
  CHECK(perm::small_group_name(perm::SmallGroup::A5) == "A5");
  CHECK_THROWS_AS(perm::parse_small_group("S5"), std::invalid_argument);
}

TEST_CASE("lemma sweep matches an independent count on A4") {
  const auto s = perm::small_group_elements(perm::SmallGroup::A4);
  std::vector<PairElement> inv, three;
  for (const auto& l : s) {
    for (const auto& r : s) {
      const PairElement e{l, r};
      if (e.order() == 2) inv.push_back(e);
      if (e.order() == 3) three.push_back(e);
    }
  }
  std::uint64_t surjective = 0, bad = 0;
  for (const auto& a : inv) {
    for (const auto& b : three) {
      const auto h = naive_closure(std::vector<PairElement>{a, b});
      std::set<Permutation> pl, pr;
      for (const auto& e : h) {
        pl.insert(e.left);
        pr.insert(e.right);
      }
      if (pl.size() == s.size() && pr.size() == s.size()) {
        ++surjective;
        bad += h.size() != s.size();
      }
    }
  }
  const auto rep = perm::verify_lemma_6_2(perm::SmallGroup::A4);
  CHECK(rep.pass());
  CHECK(rep.group_order == 12);
  CHECK(rep.involutions == inv.size());
  CHECK(rep.order_three == three.size());
  CHECK(rep.pairs_checked == inv.size() * three.size());
  CHECK(rep.surjective_pairs == surjective);
  CHECK(rep.counterexamples == bad);
  CHECK(bad == 0);
}

TEST_CASE("lemma sweep on S4, with and without dedupe") {
  perm::Lemma62Options plain, dedupe;
  plain.workers = 1;
  dedupe.workers = 2;
  dedupe.dedupe_conjugacy = true;
  const auto a = perm::verify_lemma_6_2(perm::SmallGroup::S4, plain);
  const auto b = perm::verify_lemma_6_2(perm::SmallGroup::S4, dedupe);
  CHECK(a.pass());
  CHECK(b.pass());
  CHECK(a.surjective_pairs > 0);
  CHECK(b.involutions < a.involutions);
  CHECK(a.counterexamples == b.counterexamples);
  CHECK(a.projection_mismatches == 0);
}

TEST_CASE("lemma sweep on A4 is worker-independent") {
  perm::Lemma62Options one, three;
  one.workers = 1;
  three.workers = 3;
  const auto a = perm::verify_lemma_6_2(perm::SmallGroup::A4, one);
  const auto b = perm::verify_lemma_6_2(perm::SmallGroup::A4, three);
  CHECK(a.pairs_checked == b.pairs_checked);
  CHECK(a.surjective_pairs == b.surjective_pairs);
  CHECK(a.counterexamples == b.counterexamples);
}
