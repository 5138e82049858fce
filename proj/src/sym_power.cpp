#include "confhom/sym_power.hpp"

#include "confhom/basis.hpp"
#include "confhom/errors.hpp"
#include "confhom/monomial.hpp"

namespace confhom {

BettiTable2 odd_symmetric_power(const CohomologyRing& ring, int k) {
    if (ring.dim() % 2 == 0)
        throw compute_error("the symmetric-power formula applies to odd dimensions only");
    if (k < 1) throw compute_error("k must be positive");

    // The ring basis, including the unit, as length-1 weight-0 generators.
    std::vector<GeneratorTable::Entry> entries;
    for (const auto& cls : ring.basis()) entries.push_back({cls.name, cls.degree, 1, 0});
    const GeneratorTable gens{std::move(entries)};

    const GradedBasis basis = enumerate_basis(gens, k);
    BettiTable2 table;
    table.k = k;
    table.provenance = {ring.label(), "sym-power", 0, kEngineVersion};
    for (const auto& [key, mons] : basis.slices())
        if (!mons.empty()) table.betti[{key.first, 0}] = static_cast<int>(mons.size());
    return table;
}

} // namespace confhom
