#include "oeg/fpgroup/coset_enumeration.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

namespace oeg::fp {

EnumerationLimits EnumerationLimits::from_environment() {
  EnumerationLimits limits;
  if (const char* env = std::getenv("OEG_MAX_COSETS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) {
      limits.max_live_cosets = v;
    }
  }
  return limits;
}

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

using Codes = std::vector<std::uint32_t>;

Codes codes_of(const Word& w) {
  Codes out;
  out.reserve(w.size());
  for (Letter l : w.letters()) {
    out.push_back(l.code());
  }
  return out;
}

class Enumerator {
 public:
  Enumerator(const Presentation& p, const std::vector<Word>& subgroup, const EnumerationLimits& limits)
      : columns_(2 * p.generator_count()),
        cap_(static_cast<std::uint32_t>(
            std::min<std::uint64_t>(limits.max_live_cosets, std::numeric_limits<std::uint32_t>::max() / 4))),
        felsch_(limits.strategy == Strategy::felsch) {
    for (const Word& r : p.relators()) {
      relators_.push_back(codes_of(r));
    }
    for (const Word& h : subgroup) {
      if (h.generator_bound() > p.generator_count()) {
        throw std::invalid_argument("subgroup generator uses an undeclared generator");
      }
      if (!h.empty()) {
        subgroup_.push_back(codes_of(h));
      }
    }
    if (felsch_) {
      build_rotations();
    }
  }

  EnumerationResult run() {
    EnumerationResult result;
    if (cap_ == 0 || !new_coset()) {
      return finish(result, false);
    }
    bool ok = felsch_ ? run_felsch() : run_hlt();
    while (ok && !closed()) {
      // Never expected; a plain fill-in pass restores closure if it is.
      ok = run_hlt();
    }
    return finish(result, ok);
  }

 private:
  std::uint32_t& cell(std::uint32_t c, std::uint32_t x) {
    return table_[static_cast<std::size_t>(c) * columns_ + x];
  }
  std::uint32_t total() const { return static_cast<std::uint32_t>(parent_.size()); }
  bool live(std::uint32_t c) const { return parent_[c] == c; }

  std::uint32_t rep(std::uint32_t c) {
    std::uint32_t r = c;
    while (parent_[r] != r) {
      r = parent_[r];
    }
    while (parent_[c] != r) {
      const std::uint32_t next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  bool new_coset() {
    if (live_ >= cap_) {
      return false;
    }
    table_.resize(table_.size() + columns_, kNone);
    parent_.push_back(total());
    ++live_;
    ++defined_;
    max_live_ = std::max<std::uint64_t>(max_live_, live_);
    return true;
  }

  bool define(std::uint32_t c, std::uint32_t x) {
    if (!new_coset()) {
      return false;
    }
    const std::uint32_t d = total() - 1;
    cell(c, x) = d;
    cell(d, x ^ 1u) = c;
    push_deduction(c, x);
    return true;
  }

  void push_deduction(std::uint32_t c, std::uint32_t x) {
    if (felsch_) {
      deductions_.emplace_back(c, x);
    }
  }

  void merge(std::uint32_t a, std::uint32_t b) {
    a = rep(a);
    b = rep(b);
    if (a == b) {
      return;
    }
    if (a > b) {
      std::swap(a, b);
    }
    parent_[b] = a;
    --live_;
    queue_.push_back(b);
  }

  void coincidence(std::uint32_t a, std::uint32_t b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      const std::uint32_t g = queue_[i];
      for (std::uint32_t x = 0; x < columns_; ++x) {
        const std::uint32_t d = cell(g, x);
        if (d == kNone) {
          continue;
        }
        const std::uint32_t xi = x ^ 1u;
        if (cell(d, xi) == g) {
          cell(d, xi) = kNone;
        }
        const std::uint32_t mu = rep(g);
        const std::uint32_t nu = rep(d);
        if (cell(mu, x) != kNone) {
          merge(nu, cell(mu, x));
        } else if (cell(nu, xi) != kNone) {
          merge(mu, cell(nu, xi));
        } else {
          cell(mu, x) = nu;
          cell(nu, xi) = mu;
          push_deduction(mu, x);
        }
      }
    }
  }

  /// Traces `w` from both ends at `c`, defining cosets when `fill` is set.
  /// Returns false only when a definition was refused by the cap.
  bool scan(std::uint32_t c, const Codes& w, bool fill) {
    if (w.empty()) {
      return true;
    }
    std::uint32_t f = c;
    std::uint32_t b = c;
    std::size_t i = 0;
    std::size_t j = w.size();  // one past the last unscanned letter
    for (;;) {
      while (i < j && cell(f, w[i]) != kNone) {
        f = cell(f, w[i]);
        ++i;
      }
      if (i == j) {
        if (f != b) {
          coincidence(f, b);
        }
        return true;
      }
      while (j > i && cell(b, w[j - 1] ^ 1u) != kNone) {
        b = cell(b, w[j - 1] ^ 1u);
        --j;
      }
      if (i == j) {
        if (f != b) {
          coincidence(f, b);
        }
        return true;
      }
      if (j == i + 1) {
        cell(f, w[i]) = b;
        cell(b, w[i] ^ 1u) = f;
        push_deduction(f, w[i]);
        return true;
      }
      if (!fill) {
        return true;
      }
      if (!define(f, w[i])) {
        return false;
      }
    }
  }

  bool closed() {
    for (std::uint32_t c = 0; c < total(); ++c) {
      if (!live(c)) {
        continue;
      }
      for (std::uint32_t x = 0; x < columns_; ++x) {
        if (cell(c, x) == kNone || !live(cell(c, x))) {
          return false;
        }
      }
      for (const Codes& r : relators_) {
        if (trace(c, r) != c) {
          return false;
        }
      }
    }
    for (const Codes& h : subgroup_) {
      if (trace(0, h) != 0) {
        return false;
      }
    }
    return true;
  }

  std::uint32_t trace(std::uint32_t c, const Codes& w) {
    for (std::uint32_t x : w) {
      c = cell(c, x);
    }
    return c;
  }

  /// Renumbers live cosets consecutively, preserving order. Returns the new
  /// number of the first live coset at or after `pointer`.
  std::uint32_t compact(std::uint32_t pointer) {
    std::vector<std::uint32_t> map(total(), kNone);
    std::uint32_t next = 0;
    std::uint32_t mapped_pointer = kNone;
    for (std::uint32_t c = 0; c < total(); ++c) {
      if (c >= pointer && mapped_pointer == kNone && live(c)) {
        mapped_pointer = next;
      }
      if (live(c)) {
        map[c] = next++;
      }
    }
    std::vector<std::uint32_t> rows(static_cast<std::size_t>(next) * columns_, kNone);
    for (std::uint32_t c = 0; c < total(); ++c) {
      if (map[c] == kNone) {
        continue;
      }
      for (std::uint32_t x = 0; x < columns_; ++x) {
        const std::uint32_t d = cell(c, x);
        rows[static_cast<std::size_t>(map[c]) * columns_ + x] = d == kNone ? kNone : map[rep(d)];
      }
    }
    table_ = std::move(rows);
    parent_.resize(next);
    for (std::uint32_t c = 0; c < next; ++c) {
      parent_[c] = c;
    }
    return mapped_pointer == kNone ? next : mapped_pointer;
  }

  /// Deduction-only pass over every live coset. Returns true if it freed
  /// room under the cap.
  bool lookahead() {
    const std::uint32_t before = live_;
    for (const Codes& h : subgroup_) {
      scan(0, h, false);
    }
    for (std::uint32_t c = 0; c < total(); ++c) {
      for (const Codes& r : relators_) {
        if (!live(c)) {
          break;
        }
        scan(c, r, false);
      }
    }
    return live_ < before;
  }

  bool run_hlt() {
    for (;;) {
      bool ok = true;
      for (const Codes& h : subgroup_) {
        if (!scan(0, h, true)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        break;
      }
      if (!lookahead()) {
        return false;
      }
      compact(0);
    }
    std::uint32_t alpha = 0;
    while (alpha < total()) {
      if (total() > 2 * live_ + 4096) {
        alpha = compact(alpha);
        continue;
      }
      if (!live(alpha)) {
        ++alpha;
        continue;
      }
      bool ok = true;
      for (const Codes& r : relators_) {
        if (!live(alpha)) {
          break;
        }
        if (!scan(alpha, r, true)) {
          ok = false;
          break;
        }
      }
      for (std::uint32_t x = 0; ok && x < columns_ && live(alpha); ++x) {
        if (cell(alpha, x) == kNone && !define(alpha, x)) {
          ok = false;
        }
      }
      if (!ok) {
        if (!lookahead()) {
          return false;
        }
        alpha = compact(alpha);
        continue;
      }
      ++alpha;
    }
    return true;
  }

  void build_rotations() {
    rotations_.assign(columns_, {});
    auto add = [&](const Codes& w) {
      for (std::size_t s = 0; s < w.size(); ++s) {
        Codes rot(w.begin() + static_cast<std::ptrdiff_t>(s), w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(s));
        auto& bucket = rotations_[rot.front()];
        if (std::find(bucket.begin(), bucket.end(), rot) == bucket.end()) {
          bucket.push_back(std::move(rot));
        }
      }
    };
    for (const Codes& r : relators_) {
      add(r);
      Codes inv;
      for (auto it = r.rbegin(); it != r.rend(); ++it) {
        inv.push_back(*it ^ 1u);
      }
      add(inv);
    }
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      auto [c, x] = deductions_.back();
      deductions_.pop_back();
      if (!live(c)) {
        continue;
      }
      for (const Codes& w : rotations_[x]) {
        if (!live(c)) {
          break;
        }
        scan(c, w, false);
      }
      if (!live(c) || cell(c, x) == kNone) {
        continue;
      }
      const std::uint32_t d = cell(c, x);
      for (const Codes& w : rotations_[x ^ 1u]) {
        if (!live(d)) {
          break;
        }
        scan(d, w, false);
      }
    }
  }

  bool run_felsch() {
    for (const Codes& h : subgroup_) {
      if (!scan(0, h, true)) {
        return false;
      }
    }
    process_deductions();
    std::uint32_t alpha = 0;
    std::uint32_t x = 0;
    for (;;) {
      while (alpha < total() && (!live(alpha) || x >= columns_ || cell(alpha, x) != kNone)) {
        if (!live(alpha) || x >= columns_) {
          ++alpha;
          x = 0;
        } else {
          ++x;
        }
      }
      if (alpha >= total()) {
        return true;
      }
      if (total() > 2 * live_ + 4096) {
        alpha = compact(alpha);
        x = 0;
        continue;
      }
      if (!define(alpha, x)) {
        return false;
      }
      process_deductions();
    }
  }

  EnumerationResult& finish(EnumerationResult& result, bool ok) {
    result.cosets_defined = defined_;
    result.cosets_max_live = max_live_;
    if (!ok) {
      result.status = EnumerationStatus::limit_exceeded;
      return result;
    }
    compact(0);
    result.status = EnumerationStatus::completed;
    result.index = live_;
    if (columns_ == 0) {
      table_.clear();
    }
    result.table = CosetTable(columns_, std::move(table_));
    return result;
  }

  std::uint32_t columns_;
  std::uint32_t cap_;
  bool felsch_;
  std::vector<Codes> relators_;
  std::vector<Codes> subgroup_;
  std::vector<std::vector<Codes>> rotations_;

  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> queue_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> deductions_;
  std::uint32_t live_ = 0;
  std::uint64_t defined_ = 0;
  std::uint64_t max_live_ = 0;
};

}  // namespace

EnumerationResult coset_enumerate(const Presentation& p, const std::vector<Word>& subgroup_gens,
                                  const EnumerationLimits& limits) {
  return Enumerator(p, subgroup_gens, limits).run();
}

std::uint64_t subgroup_index(const Presentation& p, std::string_view subgroup,
                             const EnumerationLimits& limits) {
  const NamedSubgroup* h = p.find_subgroup(subgroup);
  if (h == nullptr) {
    throw std::out_of_range("no subgroup named '" + std::string(subgroup) + "'");
  }
  const EnumerationResult r = coset_enumerate(p, h->generators, limits);
  if (!r.completed()) {
    throw EnumerationLimitExceeded(limits.max_live_cosets);
  }
  return *r.index;
}

std::uint64_t group_order(const Presentation& p, const EnumerationLimits& limits) {
  const EnumerationResult r = coset_enumerate(p, {}, limits);
  if (!r.completed()) {
    throw EnumerationLimitExceeded(limits.max_live_cosets);
  }
  return *r.index;
}

}  // namespace oeg::fp
