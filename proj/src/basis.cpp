#include "confhom/basis.hpp"

#include "confhom/errors.hpp"

#include <algorithm>
#include <sstream>

namespace confhom {

const std::vector<Monomial>* GradedBasis::slice(int degree, int weight) const {
    auto it = slices_.find({degree, weight});
    return it == slices_.end() ? nullptr : &it->second;
}

int GradedBasis::slice_dimension(int degree, int weight) const {
    const auto* s = slice(degree, weight);
    return s ? static_cast<int>(s->size()) : 0;
}

int GradedBasis::index_of(int degree, int weight, const Monomial& m) const {
    const auto* s = slice(degree, weight);
    if (!s) return -1;
    auto it = std::lower_bound(s->begin(), s->end(), m);
    if (it == s->end() || !(*it == m)) return -1;
    return static_cast<int>(it - s->begin());
}

int GradedBasis::total_dimension() const {
    int total = 0;
    for (const auto& [key, mons] : slices_) {
        (void)key;
        total += static_cast<int>(mons.size());
    }
    return total;
}

int GradedBasis::max_degree() const {
    int top = -1;
    for (const auto& [key, mons] : slices_)
        if (!mons.empty()) top = std::max(top, key.first);
    return top;
}

std::string GradedBasis::dump_slice(const GeneratorTable& gens, int degree, int weight) const {
    std::ostringstream os;
    if (const auto* s = slice(degree, weight))
        for (const auto& m : *s) os << to_string(gens, m) << "\n";
    return os.str();
}

GradedBasis enumerate_basis(const GeneratorTable& gens, int k) {
    if (k < 1) throw compute_error("basis enumeration needs k >= 1");
    std::map<GradedBasis::SliceKey, std::vector<Monomial>> slices;

    std::vector<std::pair<int, int>> factors;
    // Recursive descent over generators in order, bounding the remaining length.
    auto emit = [&](auto&& self, int gen, int remaining) -> void {
        if (remaining == 0) {
            Monomial m = make_monomial(gens, factors);
            slices[{m.degree, m.weight}].push_back(std::move(m));
            return;
        }
        if (gen == gens.size()) return;
        const int len = gens.length(gen);
        const int max_exp = gens.odd(gen) ? std::min(1, remaining / len) : remaining / len;
        for (int exp = 0; exp <= max_exp; ++exp) {
            if (exp > 0) factors.emplace_back(gen, exp);
            self(self, gen + 1, remaining - exp * len);
            if (exp > 0) factors.pop_back();
        }
    };
    emit(emit, 0, k);

    for (auto& [key, mons] : slices) {
        (void)key;
        std::sort(mons.begin(), mons.end());
    }
    return GradedBasis(k, std::move(slices));
}

GradedBasis enumerate_basis(const KnudsenModel& model, int k) {
    return enumerate_basis(model.table(), k);
}

Poly2 hilbert_series(const GeneratorTable& gens, int k) {
    if (k < 1) throw compute_error("hilbert series needs k >= 1");
    // acc[L] = coefficient of u^L, a polynomial in (t, s).
    std::vector<Poly2> acc(k + 1);
    acc[0] = Poly2::constant(1);
    for (int g = 0; g < gens.size(); ++g) {
        const int len = gens.length(g);
        const int deg = gens.degree(g);
        const int wt = gens.weight(g);
        if (gens.odd(g)) {
            for (int L = k; L >= len; --L) acc[L] = acc[L] + acc[L - len].shifted(deg, wt);
        } else {
            // Ascending L accumulates the full geometric series of the generator.
            for (int L = len; L <= k; ++L) acc[L] = acc[L] + acc[L - len].shifted(deg, wt);
        }
    }
    return acc[k];
}

Poly2 hilbert_series(const KnudsenModel& model, int k) {
    return hilbert_series(model.table(), k);
}

} // namespace confhom
