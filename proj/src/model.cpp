#include "confhom/model.hpp"

#include "confhom/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace confhom {

namespace {

using nlohmann::json;

void sort_generators(std::vector<ModelGenerator>& gens) {
    std::sort(gens.begin(), gens.end(), [](const ModelGenerator& a, const ModelGenerator& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.name < b.name;
    });
}

} // namespace

KnudsenModel::KnudsenModel(std::string label, int two_m, std::vector<ModelGenerator> v_gens,
                           std::vector<ModelGenerator> w_gens, const RawDw& dw_by_name)
    : label_(std::move(label)), two_m_(two_m) {
    if (two_m_ <= 0 || two_m_ % 2 != 0)
        throw model_error("geometric dimension 2m must be a positive even integer");

    sort_generators(v_gens);
    sort_generators(w_gens);
    v_count_ = static_cast<int>(v_gens.size());

    std::vector<GeneratorTable::Entry> entries;
    std::map<std::string, int> index_of;
    int zero_degree_vs = 0;
    for (const auto& g : v_gens) {
        if (g.degree < 0 || g.degree > two_m_)
            throw model_error("v-generator '" + g.name + "' has degree " +
                              std::to_string(g.degree) + " outside [0, 2m]");
        if (g.degree == 0) ++zero_degree_vs;
        if (index_of.count(g.name))
            throw model_error("duplicate generator name '" + g.name + "'");
        index_of[g.name] = static_cast<int>(entries.size());
        entries.push_back({g.name, g.degree, 1, 0});
    }
    if (zero_degree_vs != 1)
        throw model_error("expected exactly one v-generator of degree 0, found " +
                          std::to_string(zero_degree_vs));
    for (const auto& g : w_gens) {
        if (g.degree < two_m_ - 1 || g.degree > 2 * two_m_ - 1)
            throw model_error("w-generator '" + g.name + "' has degree " +
                              std::to_string(g.degree) + " outside [2m-1, 4m-1]");
        if (index_of.count(g.name))
            throw model_error("duplicate generator name '" + g.name + "'");
        index_of[g.name] = static_cast<int>(entries.size());
        entries.push_back({g.name, g.degree, 2, 1});
    }
    generators = GeneratorTable(std::move(entries));

    dw_.assign(generators.size(), {});
    for (const auto& [w_name, raw_terms] : dw_by_name) {
        auto it = index_of.find(w_name);
        if (it == index_of.end() || !is_w(it->second))
            throw model_error("dW entry for unknown w-generator '" + w_name + "'");
        const int w_idx = it->second;
        const int w_degree = generators.degree(w_idx);

        std::map<std::pair<int, int>, Rational> acc;
        for (const auto& term : raw_terms) {
            const auto ia = index_of.find(term.a);
            const auto ib = index_of.find(term.b);
            if (ia == index_of.end() || is_w(ia->second))
                throw model_error("dW term factor '" + term.a + "' is not a v-generator");
            if (ib == index_of.end() || is_w(ib->second))
                throw model_error("dW term factor '" + term.b + "' is not a v-generator");
            int a = ia->second, b = ib->second;
            const int da = generators.degree(a), db = generators.degree(b);
            if (da + db != w_degree + 1)
                throw model_error("dW(" + w_name + ") term " + term.a + "*" + term.b +
                                  " has degree " + std::to_string(da + db) +
                                  ", expected " + std::to_string(w_degree + 1));
            Rational coeff = term.coeff;
            if (a > b) {
                std::swap(a, b);
                if (da % 2 && db % 2) coeff = -coeff; // Koszul transposition
            }
            if (a == b && da % 2) continue; // odd square, formally zero
            acc[{a, b}] += coeff;
        }
        SymTerms terms;
        for (const auto& [key, coeff] : acc)
            if (coeff != 0) terms.emplace_back(key.first, key.second, coeff);
        dw_[w_idx] = std::move(terms);
    }
}

const KnudsenModel::SymTerms& KnudsenModel::dw(int idx) const { return dw_[idx]; }

std::string KnudsenModel::emit_raw() const {
    json doc;
    doc["two_m"] = two_m_;
    doc["v_gens"] = json::array();
    doc["w_gens"] = json::array();
    for (int i = 0; i < generators.size(); ++i) {
        const auto& g = generators.at(i);
        (is_w(i) ? doc["w_gens"] : doc["v_gens"])
            .push_back({{"name", g.name}, {"degree", g.degree}});
    }
    doc["dW"] = json::array();
    for (int i = v_count_; i < generators.size(); ++i) {
        if (dw_[i].empty()) continue;
        json entry;
        entry["w"] = generators.at(i).name;
        entry["terms"] = json::array();
        for (const auto& [a, b, coeff] : dw_[i])
            entry["terms"].push_back({{"a", generators.at(a).name},
                                      {"b", generators.at(b).name},
                                      {"coeff", format_rational(coeff)}});
        doc["dW"].push_back(std::move(entry));
    }
    return doc.dump(2);
}

std::uint64_t KnudsenModel::hash() const {
    // FNV-1a over the canonical emission.
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : emit_raw()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

KnudsenModel build_closed_oriented_model(const CohomologyRing& ring) {
    if (ring.dim() <= 0 || ring.dim() % 2 != 0)
        throw compute_error("the closed oriented model needs a positive even dimension, got " +
                            std::to_string(ring.dim()));
    if (!ring.closed() || !ring.oriented())
        throw compute_error("the closed oriented model needs a closed oriented ring");
    ring.require_valid(); // includes the perfect-pairing (Poincare duality) check

    const int two_m = ring.dim();
    const int n = static_cast<int>(ring.basis().size());

    std::vector<ModelGenerator> v_gens, w_gens;
    std::vector<std::string> v_name(n), w_name(n);
    for (int c = 0; c < n; ++c) {
        const auto& cls = ring.basis()[c];
        v_name[c] = "v_" + cls.name;
        w_name[c] = "w_" + cls.name;
        v_gens.push_back({v_name[c], two_m - cls.degree});
        w_gens.push_back({w_name[c], 2 * two_m - 1 - cls.degree});
    }

    // dW(w_c) = sum over ordered pairs (a,b) of kappa^c_{ab} v_a v_b, where
    // x_a x_b = sum_c kappa^c_{ab} x_c; normalization into Sym^2 happens in
    // the model constructor.
    KnudsenModel::RawDw dw;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (const auto& [c, coeff] : ring.product(a, b))
                dw[w_name[c]].push_back({v_name[a], v_name[b], coeff});

    return KnudsenModel(ring.label(), two_m, std::move(v_gens), std::move(w_gens), dw);
}

KnudsenModel load_raw_model(const std::string& json_text, const std::string& label) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("model document: ") + e.what());
    }
    try {
        const int two_m = doc.at("two_m").get<int>();
        std::vector<ModelGenerator> v_gens, w_gens;
        for (const auto& item : doc.at("v_gens"))
            v_gens.push_back({item.at("name").get<std::string>(), item.at("degree").get<int>()});
        for (const auto& item : doc.at("w_gens"))
            w_gens.push_back({item.at("name").get<std::string>(), item.at("degree").get<int>()});
        KnudsenModel::RawDw dw;
        if (doc.contains("dW")) {
            for (const auto& entry : doc.at("dW")) {
                auto& terms = dw[entry.at("w").get<std::string>()];
                for (const auto& term : entry.at("terms"))
                    terms.push_back({term.at("a").get<std::string>(),
                                     term.at("b").get<std::string>(),
                                     parse_rational(term.at("coeff").get<std::string>())});
            }
        }
        return KnudsenModel(label, two_m, std::move(v_gens), std::move(w_gens), dw);
    } catch (const json::exception& e) {
        throw parse_error(std::string("model document: ") + e.what());
    }
}

} // namespace confhom
