#pragma once

#include "confhom/monomial.hpp"
#include "confhom/rational.hpp"
#include "confhom/ring.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace confhom {

struct ModelGenerator {
    std::string name;
    int degree = 0;
};

// The Felix-Thomas/Knudsen generator data (V*, W*, dW) for an even-dimensional
// manifold of geometric dimension two_m. V-generators have length 1 and weight
// 0, W-generators length 2 and weight 1; dW maps each W-generator to a
// canonical Sym^2(V) combination and raises degree by exactly 1. Immutable.
class KnudsenModel {
public:
    // (v index a, v index b, coefficient) with a <= b, Koszul-normalized.
    using SymTerm = std::tuple<int, int, Rational>;
    using SymTerms = std::vector<SymTerm>;

    struct RawTerm {
        std::string a;
        std::string b;
        Rational coeff;
    };
    using RawDw = std::map<std::string, std::vector<RawTerm>>;

    // dw entries reference generators by name in any factor order; they are
    // normalized into canonical Sym^2 form here (the single place Koszul signs
    // and odd-square cancellation are applied to differentials).
    KnudsenModel(std::string label, int two_m, std::vector<ModelGenerator> v_gens,
                 std::vector<ModelGenerator> w_gens, const RawDw& dw_by_name);

    const std::string& label() const { return label_; }
    int two_m() const { return two_m_; }

    int v_count() const { return v_count_; }
    int w_count() const { return generators.size() - v_count_; }
    bool is_w(int idx) const { return idx >= v_count_; }

    // Generator order: all V before all W, each ascending (degree, name).
    const GeneratorTable& table() const { return generators; }

    // Differential of generator idx as Sym^2(V) terms; empty for V-generators.
    const SymTerms& dw(int idx) const;

    std::string emit_raw() const; // raw-model JSON document
    std::uint64_t hash() const;   // content hash of the canonical emission

private:
    std::string label_;
    int two_m_;
    int v_count_;
    GeneratorTable generators;
    std::vector<SymTerms> dw_; // indexed like generators; empty below v_count_
};

// Builds (V*, W*, dW) from a closed oriented even-dimensional ring: each ring
// class x of degree p contributes a V-generator of degree 2m-p and a
// W-generator of degree 4m-1-p, and dW is dual to the cup product.
KnudsenModel build_closed_oriented_model(const CohomologyRing& ring);

// Accepts already-shifted model data for the general even-dimensional case.
KnudsenModel load_raw_model(const std::string& json_text, const std::string& label = "model");

} // namespace confhom
