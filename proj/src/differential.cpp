#include "confhom/differential.hpp"

#include "confhom/errors.hpp"

#include <map>

namespace confhom {

std::vector<std::pair<Monomial, Rational>> differential_of(const KnudsenModel& model,
                                                           const Monomial& m) {
    const GeneratorTable& gens = model.table();
    std::map<Monomial, Rational> acc;

    int degree_before = 0; // total degree of the factors left of the current one
    for (std::size_t pos = 0; pos < m.factors.size(); ++pos) {
        const auto [gen, exp] = m.factors[pos];
        const int gen_degree = gens.degree(gen);
        if (model.is_w(gen) && !model.dw(gen).empty()) {
            // d(A g^e B) = (-1)^{|A|} e A g^{e-1} (dg) B
            //            = (-1)^{|A| + (|g|+1)|B|} e (A g^{e-1} B) (dg).
            const int degree_after = m.degree - degree_before - exp * gen_degree;
            int sign = 1;
            if (degree_before % 2) sign = -sign;
            if ((gen_degree + 1) % 2 && degree_after % 2) sign = -sign;

            std::vector<std::pair<int, int>> reduced = m.factors;
            if (--reduced[pos].second == 0) reduced.erase(reduced.begin() + pos);
            const Monomial rest = make_monomial(gens, std::move(reduced));

            for (const auto& [a, b, coeff] : model.dw(gen)) {
                std::vector<std::pair<int, int>> word = rest.factors;
                if (a == b)
                    word.emplace_back(a, 2);
                else {
                    word.emplace_back(a, 1);
                    word.emplace_back(b, 1);
                }
                Monomial target;
                const int mul_sign = canonicalize(gens, std::move(word), target);
                if (mul_sign == 0) continue;
                Rational value = coeff * exp * sign * mul_sign;
                auto it = acc.find(target);
                if (it == acc.end()) {
                    acc.emplace(std::move(target), std::move(value));
                } else {
                    it->second += value;
                    if (it->second == 0) acc.erase(it);
                }
            }
        }
        degree_before += exp * gen_degree;
    }

    return {acc.begin(), acc.end()};
}

RationalSparseMatrix differential_matrix(const KnudsenModel& model, const GradedBasis& basis,
                                         int degree, int weight) {
    const auto* source = basis.slice(degree, weight);
    const auto* target = basis.slice(degree + 1, weight - 1);
    RationalSparseMatrix out(target ? static_cast<int>(target->size()) : 0,
                             source ? static_cast<int>(source->size()) : 0);
    if (!source) return out;
    for (int col = 0; col < static_cast<int>(source->size()); ++col) {
        for (const auto& [mono, coeff] : differential_of(model, (*source)[col])) {
            const int row = basis.index_of(degree + 1, weight - 1, mono);
            if (row < 0)
                throw compute_error("differential left the enumerated basis at degree " +
                                    std::to_string(degree + 1));
            out.set(row, col, coeff);
        }
    }
    return out;
}

} // namespace confhom
