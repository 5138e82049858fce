#include "confhom/monomial.hpp"

#include "confhom/errors.hpp"

#include <sstream>

namespace confhom {

namespace {

// Parity of the total degree of a factor block g^e.
inline bool block_odd(const GeneratorTable& gens, const std::pair<int, int>& factor) {
    return (gens.degree(factor.first) * factor.second) % 2 != 0;
}

} // namespace

int canonicalize(const GeneratorTable& gens, std::vector<std::pair<int, int>> word,
                 Monomial& out) {
    int sign = 1;
    // Insertion sort; each swap of adjacent blocks of odd total degree flips the sign.
    for (std::size_t i = 1; i < word.size(); ++i) {
        auto cur = word[i];
        std::size_t j = i;
        while (j > 0 && word[j - 1].first > cur.first) {
            if (block_odd(gens, cur) && block_odd(gens, word[j - 1])) sign = -sign;
            word[j] = word[j - 1];
            --j;
        }
        word[j] = cur;
    }

    out.factors.clear();
    out.degree = out.length = out.weight = 0;
    for (const auto& [gen, exp] : word) {
        if (exp == 0) continue;
        if (exp < 0) throw compute_error("negative exponent in monomial word");
        if (!out.factors.empty() && out.factors.back().first == gen)
            out.factors.back().second += exp;
        else
            out.factors.emplace_back(gen, exp);
    }
    for (const auto& [gen, exp] : out.factors) {
        if (gens.odd(gen) && exp >= 2) return 0; // square of an odd generator
        out.degree += exp * gens.degree(gen);
        out.length += exp * gens.length(gen);
        out.weight += exp * gens.weight(gen);
    }
    return sign;
}

int multiply(const GeneratorTable& gens, const Monomial& x, const Monomial& y, Monomial& out) {
    std::vector<std::pair<int, int>> word;
    word.reserve(x.factors.size() + y.factors.size());
    word.insert(word.end(), x.factors.begin(), x.factors.end());
    word.insert(word.end(), y.factors.begin(), y.factors.end());
    return canonicalize(gens, std::move(word), out);
}

Monomial make_monomial(const GeneratorTable& gens, std::vector<std::pair<int, int>> factors) {
    Monomial m;
    const int sign = canonicalize(gens, std::move(factors), m);
    if (sign != 1) throw compute_error("factor list is not a canonical monomial");
    return m;
}

std::string to_string(const GeneratorTable& gens, const Monomial& m) {
    if (m.factors.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [gen, exp] : m.factors) {
        if (!first) os << "*";
        first = false;
        os << gens.at(gen).name;
        if (exp > 1) os << "^" << exp;
    }
    return os.str();
}

} // namespace confhom
