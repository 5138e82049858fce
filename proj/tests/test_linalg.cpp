#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "confhom/rank.hpp"
#include "confhom/sparse_matrix.hpp"

#include <random>
#include <vector>

using namespace confhom;

namespace {

// Independent oracle: dense Gaussian elimination straight over Q.
int rank_naive(const RationalSparseMatrix& m) {
    std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols(), Rational(0)));
    for (const auto& [key, value] : m.entries()) a[key.first][key.second] = value;
    int rank = 0;
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows(); ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (int r = 0; r < m.rows(); ++r) {
            if (r == rank || a[r][col] == 0) continue;
            const Rational factor = a[r][col] / a[rank][col];
            for (int c = col; c < m.cols(); ++c) a[r][c] -= factor * a[rank][c];
        }
        ++rank;
    }
    return rank;
}

RationalSparseMatrix random_matrix(std::mt19937& rng, int rows, int cols, bool rationals) {
    RationalSparseMatrix m(rows, cols);
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    std::uniform_real_distribution<double> keep(0.0, 1.0);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (keep(rng) > 0.45) continue;
            Rational value(num(rng), rationals ? den(rng) : 1);
            value.canonicalize();
            m.set(r, c, value);
        }
    return m;
}

} // namespace

TEST_CASE("rank of degenerate and trivial shapes") {
    CHECK(rank(RationalSparseMatrix(0, 5)) == 0);
    CHECK(rank(RationalSparseMatrix(4, 0)) == 0);
    RationalSparseMatrix id(3, 3);
    for (int i = 0; i < 3; ++i) id.set(i, i, Rational(1));
    CHECK(rank(id) == 3);
    CHECK(kernel_dim(id) == 0);
}

TEST_CASE("proportional rows have rank one") {
    // [[1,2,3],[2,4,6]]: every 2x2 minor vanishes, so the rank is 1.
    RationalSparseMatrix m(2, 3);
    m.set(0, 0, Rational(1));
    m.set(0, 1, Rational(2));
    m.set(0, 2, Rational(3));
    m.set(1, 0, Rational(2));
    m.set(1, 1, Rational(4));
    m.set(1, 2, Rational(6));
    CHECK(rank(m) == 1);
    CHECK(kernel_dim(m) == 2);
}

TEST_CASE("kernel dimension of the zero matrix") {
    CHECK(kernel_dim(RationalSparseMatrix(3, 4)) == 4);
}

TEST_CASE("compose basics") {
    RationalSparseMatrix id(2, 2), m(2, 3);
    id.set(0, 0, Rational(1));
    id.set(1, 1, Rational(1));
    m.set(0, 1, Rational(5));
    m.set(1, 2, Rational(-2));
    CHECK(compose(id, m) == m);

    RationalSparseMatrix zero(3, 2);
    CHECK(compose(m, zero).nonzeros() == 0);

    RationalSparseMatrix a(1, 2), b(2, 1);
    a.set(0, 1, Rational(1));
    b.set(0, 0, Rational(2));
    b.set(1, 0, Rational(3));
    const auto p = compose(a, b);
    CHECK(p.rows() == 1);
    CHECK(p.cols() == 1);
    CHECK(p.get(0, 0) == Rational(3));

    CHECK_THROWS(compose(a, a));
}

TEST_CASE("randomized: bareiss agrees with dense rational elimination") {
    std::mt19937 rng(20240511);
    for (int trial = 0; trial < 60; ++trial) {
        const int rows = 1 + trial % 9;
        const int cols = 1 + (trial * 7) % 11;
        const auto m = random_matrix(rng, rows, cols, trial % 2 == 0);
        CHECK(rank(m) == rank_naive(m));
    }
}

TEST_CASE("randomized: rank equals rank of the transpose") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const auto m = random_matrix(rng, 2 + trial % 8, 2 + (trial * 3) % 9, true);
        CHECK(rank(m) == rank(m.transpose()));
    }
}

TEST_CASE("randomized: rank of a product is bounded by both factors") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + trial % 6;
        const auto a = random_matrix(rng, 2 + trial % 5, n, false);
        const auto b = random_matrix(rng, n, 2 + (trial * 5) % 7, false);
        CHECK(rank(compose(a, b)) <= std::min(rank(a), rank(b)));
    }
}

TEST_CASE("randomized: constructed low-rank products at slice-like sizes") {
    std::mt19937 rng(555);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 18 + trial % 5;
        const int m = 21 + trial % 4;
        const int r = trial % 6;
        const auto a = random_matrix(rng, n, r, false);
        const auto b = random_matrix(rng, r, m, false);
        const auto product = compose(a, b);
        const int exact = rank(product);
        CHECK(exact <= r);
        CHECK(exact == rank_naive(product));
    }
}

TEST_CASE("randomized: modular screen agrees with the exact rank") {
    const std::uint32_t primes[] = {1000003, 999983, 131071};
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 40; ++trial) {
        const auto m = random_matrix(rng, 2 + trial % 7, 2 + (trial * 3) % 8, true);
        const int exact = rank(m);
        int best = 0;
        for (auto p : primes) best = std::max(best, rank_modular(m, p));
        CHECK(best == exact); // exact elimination stays authoritative
    }
}
