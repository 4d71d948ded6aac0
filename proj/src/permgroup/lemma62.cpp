#include "oeg/permgroup/lemma62.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "oeg/permgroup/closure.hpp"

namespace oeg::perm {

std::string_view small_group_name(SmallGroup s) {
  switch (s) {
    case SmallGroup::A4:
      return "A4";
    case SmallGroup::S4:
      return "S4";
    case SmallGroup::A5:
      return "A5";
  }
  return "?";
}

SmallGroup parse_small_group(std::string_view name) {
  for (SmallGroup s : {SmallGroup::A4, SmallGroup::S4, SmallGroup::A5}) {
    if (small_group_name(s) == name) {
      return s;
    }
  }
  throw std::invalid_argument("unknown group '" + std::string(name) + "' (want A4, S4 or A5)");
}

std::vector<Permutation> small_group_elements(SmallGroup s) {
  std::array<Permutation, 2> gens;
  switch (s) {
    case SmallGroup::A4:
      gens = {parse_cycles("(1 2 3)"), parse_cycles("(1 2)(3 4)")};
      break;
    case SmallGroup::S4:
      gens = {parse_cycles("(1 2)"), parse_cycles("(1 2 3 4)")};
      break;
    case SmallGroup::A5:
      gens = {parse_cycles("(1 2 3)"), parse_cycles("(1 2 3 4 5)")};
      break;
  }
  return closure(std::span<const Permutation>(gens));
}

namespace {

using PermSet = std::unordered_set<Permutation, PermutationHash>;

/// Order of <x, y> inside S, with the identity treated as no generator.
std::uint64_t sub_order(const Permutation& x, const Permutation& y) {
  std::vector<Permutation> gens;
  for (const Permutation& p : {x, y}) {
    if (!p.is_identity()) {
      gens.push_back(p);
    }
  }
  return gens.empty() ? 1 : closure_order(gens);
}

/// Class representatives of S x S acting on `elems` by conjugation.
std::vector<PairElement> conjugacy_representatives(const std::vector<PairElement>& elems,
                                                   const std::vector<Permutation>& s) {
  std::set<PairElement> remaining(elems.begin(), elems.end());
  std::vector<PairElement> reps;
  while (!remaining.empty()) {
    const PairElement a = *remaining.begin();
    reps.push_back(a);
    for (const Permutation& g : s) {
      const Permutation gi = g.inverse();
      for (const Permutation& h : s) {
        const Permutation hi = h.inverse();
        remaining.erase(PairElement{gi * a.left * g, hi * a.right * h});
      }
    }
  }
  return reps;
}

}  // namespace

Lemma62Report verify_lemma_6_2(SmallGroup s, const Lemma62Options& opt) {
  const std::vector<Permutation> elems = small_group_elements(s);
  const std::uint64_t n = elems.size();

  std::vector<PairElement> twos;
  std::vector<PairElement> threes;
  for (const Permutation& x : elems) {
    for (const Permutation& y : elems) {
      const PairElement e{x, y};
      const std::uint32_t ord = e.order();
      if (ord == 2) {
        twos.push_back(e);
      } else if (ord == 3) {
        threes.push_back(e);
      }
    }
  }
  std::sort(twos.begin(), twos.end());
  std::sort(threes.begin(), threes.end());
  if (opt.dedupe_conjugacy) {
    twos = conjugacy_representatives(twos, elems);
  }

  Lemma62Report report;
  report.group = s;
  report.group_order = n;
  report.involutions = twos.size();
  report.order_three = threes.size();

  std::mutex merge;
  auto worker = [&](std::size_t start, std::size_t step) {
    Lemma62Report local;
    for (std::size_t i = start; i < twos.size(); i += step) {
      const PairElement& a = twos[i];
      for (const PairElement& b : threes) {
        const std::array<PairElement, 2> gens{a, b};
        const std::vector<PairElement> h = closure(std::span<const PairElement>(gens));
        ++local.pairs_checked;

        PermSet left;
        PermSet right;
        for (const PairElement& e : h) {
          left.insert(e.left);
          right.insert(e.right);
        }
        if (left.size() != sub_order(a.left, b.left) || right.size() != sub_order(a.right, b.right)) {
          ++local.projection_mismatches;
        }
        if (left.size() != n || right.size() != n) {
          continue;
        }
        ++local.surjective_pairs;
        if (h.size() != n) {
          ++local.counterexamples;
          if (!local.first_counterexample) {
            local.first_counterexample = Lemma62Counterexample{a, b, h.size()};
          }
        }
      }
    }
    std::lock_guard lock(merge);
    report.pairs_checked += local.pairs_checked;
    report.surjective_pairs += local.surjective_pairs;
    report.counterexamples += local.counterexamples;
    report.projection_mismatches += local.projection_mismatches;
    if (local.first_counterexample &&
        (!report.first_counterexample ||
         std::tie(local.first_counterexample->a, local.first_counterexample->b) <
             std::tie(report.first_counterexample->a, report.first_counterexample->b))) {
      report.first_counterexample = local.first_counterexample;
    }
  };

  unsigned workers = opt.workers != 0 ? opt.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(1, twos.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) {
    pool.emplace_back(worker, w, workers);
  }
  worker(0, workers);
  for (auto& t : pool) {
    t.join();
  }
  return report;
}

}  // namespace oeg::perm
