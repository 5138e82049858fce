#pragma once

#include "confhom/basis.hpp"
#include "confhom/model.hpp"
#include "confhom/monomial.hpp"
#include "confhom/rational.hpp"
#include "confhom/sparse_matrix.hpp"

#include <utility>
#include <vector>

namespace confhom {

// The differential of a canonical monomial, extended from dW as a derivation
// with Koszul signs; vanishes on V-generators. Result terms are canonical and
// sit in degree+1, weight-1, same length.
std::vector<std::pair<Monomial, Rational>> differential_of(const KnudsenModel& model,
                                                           const Monomial& m);

// Matrix of the differential from slice (degree, weight) to slice
// (degree+1, weight-1); either slice may be empty.
RationalSparseMatrix differential_matrix(const KnudsenModel& model, const GradedBasis& basis,
                                         int degree, int weight);

} // namespace confhom
