#pragma once

#include "confhom/cohomology.hpp"
#include "confhom/ring.hpp"

namespace confhom {

// Odd-dimensional case: H*(C_k(M)) = Sym^k(H*(M)), polynomial on even-degree
// classes and exterior on odd ones. The result carries weight 0 only.
BettiTable2 odd_symmetric_power(const CohomologyRing& ring, int k);

} // namespace confhom
