#pragma once

#include <cstdint>
#include <vector>

#include "oeg/fpgroup/presentation.hpp"

namespace oeg::fp {

using IntMatrix = std::vector<std::vector<long long>>;

/// Diagonal of the Smith normal form, as non-negative values with each
/// dividing the next and zeros last. Length is min(rows, cols).
std::vector<long long> smith_diagonal(IntMatrix m);

/// Rows are relators, columns generators.
IntMatrix exponent_sum_matrix(const Presentation& p);

/// Invariant factors of G/[G,G], trivial ones dropped; 0 stands for Z.
std::vector<long long> abelian_invariants(const Presentation& p);

}  // namespace oeg::fp
