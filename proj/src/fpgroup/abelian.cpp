#include "oeg/fpgroup/abelian.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace oeg::fp {

namespace {

/// a - q * b, refusing to wrap.
long long sub_mul(long long a, long long q, long long b) {
  long long prod = 0;
  long long out = 0;
  if (__builtin_mul_overflow(q, b, &prod) || __builtin_sub_overflow(a, prod, &out)) {
    throw std::overflow_error("Smith normal form entry overflow");
  }
  return out;
}

}  // namespace

std::vector<long long> smith_diagonal(IntMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  const std::size_t n = std::min(rows, cols);

  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // Smallest nonzero entry of the remaining block becomes the pivot.
      std::size_t pr = rows;
      std::size_t pc = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (m[i][j] != 0 && (pr == rows || std::llabs(m[i][j]) < std::llabs(m[pr][pc]))) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == rows) {
        break;
      }
      std::swap(m[t], m[pr]);
      for (auto& row : m) {
        std::swap(row[t], row[pc]);
      }

      bool clean = true;
      const long long p = m[t][t];
      for (std::size_t i = t + 1; i < rows; ++i) {
        const long long q = m[i][t] / p;
        if (q != 0) {
          for (std::size_t j = t; j < cols; ++j) {
            m[i][j] = sub_mul(m[i][j], q, m[t][j]);
          }
        }
        clean = clean && m[i][t] == 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const long long q = m[t][j] / p;
        if (q != 0) {
          for (std::size_t i = t; i < rows; ++i) {
            m[i][j] = sub_mul(m[i][j], q, m[i][t]);
          }
        }
        clean = clean && m[t][j] == 0;
      }
      if (!clean) {
        continue;
      }
      // Divisibility: fold a row holding a non-multiple into row t.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (m[i][j] % p != 0) {
            for (std::size_t k = t; k < cols; ++k) {
              m[t][k] = sub_mul(m[t][k], -1, m[i][k]);
            }
            divides = false;
            break;
          }
        }
      }
      if (divides) {
        break;
      }
    }
  }

  std::vector<long long> diag(n);
  for (std::size_t i = 0; i < n; ++i) {
    diag[i] = std::llabs(m[i][i]);
  }
  std::stable_partition(diag.begin(), diag.end(), [](long long v) { return v != 0; });
  return diag;
}

IntMatrix exponent_sum_matrix(const Presentation& p) {
  IntMatrix m;
  for (const Word& r : p.relators()) {
    std::vector<long long> row(p.generator_count(), 0);
    for (Letter l : r.letters()) {
      row[l.generator()] += l.is_inverse() ? -1 : 1;
    }
    m.push_back(std::move(row));
  }
  return m;
}

std::vector<long long> abelian_invariants(const Presentation& p) {
  const std::uint32_t gens = p.generator_count();
  IntMatrix m = exponent_sum_matrix(p);
  // Pad so every generator gets a diagonal slot; a zero row adds nothing.
  while (m.size() < gens) {
    m.emplace_back(gens, 0);
  }
  std::vector<long long> out;
  for (long long d : smith_diagonal(std::move(m))) {
    if (d != 1) {
      out.push_back(d);
    }
  }
  return out;
}

}  // namespace oeg::fp
