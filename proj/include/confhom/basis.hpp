#pragma once

#include "confhom/model.hpp"
#include "confhom/monomial.hpp"
#include "confhom/poly2.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace confhom {

// Canonical monomial basis of Sym^k of a generator set, partitioned into
// (degree, weight) slices. Slices are sorted, so a monomial's row index is its
// position. Immutable after enumeration.
class GradedBasis {
public:
    using SliceKey = std::pair<int, int>; // (degree, weight)

    GradedBasis(int k, std::map<SliceKey, std::vector<Monomial>> slices)
        : k_(k), slices_(std::move(slices)) {}

    int k() const { return k_; }
    const std::map<SliceKey, std::vector<Monomial>>& slices() const { return slices_; }

    // nullptr when the slice is empty.
    const std::vector<Monomial>* slice(int degree, int weight) const;
    int slice_dimension(int degree, int weight) const;
    // Position of a canonical monomial within its slice; -1 when absent.
    int index_of(int degree, int weight, const Monomial& m) const;

    int total_dimension() const;
    int max_degree() const;

    std::string dump_slice(const GeneratorTable& gens, int degree, int weight) const;

private:
    int k_;
    std::map<SliceKey, std::vector<Monomial>> slices_;
};

GradedBasis enumerate_basis(const GeneratorTable& gens, int k);
GradedBasis enumerate_basis(const KnudsenModel& model, int k);

// Counting oracle: coefficient of u^k in
//   prod_{even g} (1 - u^{len g} t^{deg g} s^{wt g})^{-1}
//   * prod_{odd g} (1 + u^{len g} t^{deg g} s^{wt g}).
Poly2 hilbert_series(const GeneratorTable& gens, int k);
Poly2 hilbert_series(const KnudsenModel& model, int k);

} // namespace confhom
