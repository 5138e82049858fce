#pragma once

#include <string>
#include <utility>
#include <vector>

namespace confhom {

// Degrees, lengths and weights of the generators of a free graded-commutative
// algebra, in the fixed total order the monomial code relies on.
class GeneratorTable {
public:
    struct Entry {
        std::string name;
        int degree = 0;
        int length = 1;
        int weight = 0;
    };

    GeneratorTable() = default;
    explicit GeneratorTable(std::vector<Entry> entries) : entries_(std::move(entries)) {}

    int size() const { return static_cast<int>(entries_.size()); }
    const Entry& at(int idx) const { return entries_[idx]; }
    int degree(int idx) const { return entries_[idx].degree; }
    int length(int idx) const { return entries_[idx].length; }
    int weight(int idx) const { return entries_[idx].weight; }
    bool odd(int idx) const { return entries_[idx].degree % 2 != 0; }

private:
    std::vector<Entry> entries_;
};

// Canonical-form monomial: factors (generator index, exponent) strictly
// increasing in the generator order, odd generators with exponent exactly 1.
// The stored sign convention is "sorted order = +1"; signs live in
// coefficients, never in the monomial itself.
struct Monomial {
    std::vector<std::pair<int, int>> factors;
    int degree = 0;
    int length = 0;
    int weight = 0;

    bool operator==(const Monomial& other) const { return factors == other.factors; }
    bool operator<(const Monomial& other) const { return factors < other.factors; }
};

// Word = factor list in arbitrary order, possibly with repeats. Sorts it into
// canonical form, accumulating the Koszul sign (-1)^{pq} for every transposed
// pair of odd-degree blocks. Returns +1/-1, or 0 when an odd generator ends up
// with exponent >= 2.
int canonicalize(const GeneratorTable& gens, std::vector<std::pair<int, int>> word,
                 Monomial& out);

// Product of two canonical monomials; same sign convention as canonicalize.
int multiply(const GeneratorTable& gens, const Monomial& x, const Monomial& y, Monomial& out);

Monomial make_monomial(const GeneratorTable& gens, std::vector<std::pair<int, int>> factors);

std::string to_string(const GeneratorTable& gens, const Monomial& m);

} // namespace confhom
