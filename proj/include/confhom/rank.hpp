#pragma once

#include "confhom/sparse_matrix.hpp"

#include <cstdint>

namespace confhom {

// Exact rank over Q. Denominators are cleared column-wise, then integer
// fraction-free (Bareiss-style) elimination runs with Markowitz pivot
// selection. Deterministic across runs.
int rank(const RationalSparseMatrix& m);

// cols - rank.
int kernel_dim(const RationalSparseMatrix& m);

// Rank of the reduction mod p; a lower bound on the exact rank, used as a
// cross-check. p must be an odd prime below 2^31.
int rank_modular(const RationalSparseMatrix& m, std::uint32_t p);

} // namespace confhom
