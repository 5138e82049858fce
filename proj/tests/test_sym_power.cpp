#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "confhom/errors.hpp"
#include "confhom/ring.hpp"
#include "confhom/sym_power.hpp"

#include <map>
#include <vector>

using namespace confhom;

namespace {

// Independent oracle: coefficient of u^k in
// prod_{even deg x} (1 - u t^{deg x})^{-1} * prod_{odd deg x} (1 + u t^{deg x}),
// expanded with plain integer vectors indexed by t-degree.
std::map<int, std::int64_t> sym_counts_oracle(const CohomologyRing& ring, int k) {
    const int max_degree = ring.dim() * k + 1;
    std::vector<std::vector<std::int64_t>> acc(k + 1,
                                               std::vector<std::int64_t>(max_degree, 0));
    acc[0][0] = 1;
    for (const auto& cls : ring.basis()) {
        if (cls.degree % 2 == 0) {
            for (int L = 1; L <= k; ++L)
                for (int d = cls.degree; d < max_degree; ++d)
                    acc[L][d] += acc[L - 1][d - cls.degree];
        } else {
            for (int L = k; L >= 1; --L)
                for (int d = max_degree - 1; d >= cls.degree; --d)
                    acc[L][d] += acc[L - 1][d - cls.degree];
        }
    }
    std::map<int, std::int64_t> out;
    for (int d = 0; d < max_degree; ++d)
        if (acc[k][d]) out[d] = acc[k][d];
    return out;
}

std::map<int, std::int64_t> table_counts(const BettiTable2& table) {
    std::map<int, std::int64_t> out;
    for (const auto& [key, b] : table.betti) {
        CHECK(key.second == 0); // weight index 0 only
        out[key.first] = b;
    }
    return out;
}

CohomologyRing odd_ring(const std::string& label, int dim,
                        std::vector<RingClass> classes) {
    CohomologyRing::ProductTable products;
    products[{0, 0}] = {{0, Rational(1)}};
    for (int j = 1; j < static_cast<int>(classes.size()); ++j)
        products[{0, j}] = {{j, Rational(1)}};
    return CohomologyRing(label, dim, false, true, std::move(classes), products);
}

} // namespace

TEST_CASE("sphere(1): every symmetric power is 1 + t") {
    const auto ring = CohomologyRing::preset("sphere", {1});
    for (int k = 1; k <= 6; ++k) {
        const auto counts = table_counts(odd_symmetric_power(ring, k));
        CHECK(counts == std::map<int, std::int64_t>{{0, 1}, {1, 1}});
    }
}

TEST_CASE("sphere(3), k=2: 1 + t^3 (the odd square dies)") {
    const auto ring = CohomologyRing::preset("sphere", {3});
    CHECK(table_counts(odd_symmetric_power(ring, 2)) ==
          std::map<int, std::int64_t>{{0, 1}, {3, 1}});
}

TEST_CASE("torus(3), k=1 is the ring itself") {
    const auto ring = CohomologyRing::preset("torus", {3});
    CHECK(table_counts(odd_symmetric_power(ring, 1)) ==
          std::map<int, std::int64_t>{{0, 1}, {1, 3}, {2, 3}, {3, 1}});
}

TEST_CASE("symmetric powers match the generating-function oracle") {
    const std::vector<CohomologyRing> rings = {
        CohomologyRing::preset("sphere", {1}),
        CohomologyRing::preset("sphere", {3}),
        CohomologyRing::preset("torus", {3}),
        odd_ring("mixed", 3, {{"e0", 0}, {"x2", 2}, {"x3", 3}}),
    };
    for (const auto& ring : rings)
        for (int k = 1; k <= 10; ++k) {
            CAPTURE(ring.label());
            CAPTURE(k);
            CHECK(table_counts(odd_symmetric_power(ring, k)) == sym_counts_oracle(ring, k));
        }
}

TEST_CASE("odd-cohomology rings stabilize at beta - 1") {
    // Two degree-3 classes: beta = 3, so powers agree from k = 2 on.
    const auto ring = odd_ring("two-threes", 3, {{"e0", 0}, {"x", 3}, {"y", 3}});
    const auto at = [&](int k) { return table_counts(odd_symmetric_power(ring, k)); };
    CHECK(at(1) != at(2));
    for (int k = 2; k <= 8; ++k) CHECK(at(k) == at(k + 1));
}

TEST_CASE("even-dimensional rings are rejected") {
    CHECK_THROWS_AS(odd_symmetric_power(CohomologyRing::preset("sphere", {2}), 2),
                    compute_error);
}
