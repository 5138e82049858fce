#include "confhom/cohomology.hpp"

#include "confhom/basis.hpp"
#include "confhom/differential.hpp"
#include "confhom/rank.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace confhom {

Poly2 BettiTable2::poincare() const {
    Poly2 p;
    for (const auto& [key, b] : betti) p.add_term(key.first, key.second, b);
    return p;
}

int BettiTable2::betti_at(int i, int j) const {
    auto it = betti.find({i, j});
    return it == betti.end() ? 0 : it->second;
}

int BettiTable2::total_betti(int i) const {
    int total = 0;
    for (const auto& [key, b] : betti)
        if (key.first == i) total += b;
    return total;
}

BettiTable2 betti_bigraded(const KnudsenModel& model, int k, Exec exec) {
    const GradedBasis basis = enumerate_basis(model, k);

    std::vector<GradedBasis::SliceKey> keys;
    keys.reserve(basis.slices().size());
    for (const auto& [key, mons] : basis.slices()) {
        (void)mons;
        keys.push_back(key);
    }

    // rank of d restricted to each slice (i, w) -> (i+1, w-1)
    std::vector<int> ranks(keys.size(), 0);
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::size_t idx = 0; idx < keys.size(); ++idx)
            ranks[idx] = rank(differential_matrix(model, basis, keys[idx].first,
                                                  keys[idx].second));
    } else {
        for (std::size_t idx = 0; idx < keys.size(); ++idx)
            ranks[idx] = rank(differential_matrix(model, basis, keys[idx].first,
                                                  keys[idx].second));
    }

    std::map<GradedBasis::SliceKey, int> rank_at;
    for (std::size_t idx = 0; idx < keys.size(); ++idx) rank_at[keys[idx]] = ranks[idx];
    auto incoming_rank = [&](int i, int j) {
        auto it = rank_at.find({i - 1, j + 1});
        return it == rank_at.end() ? 0 : it->second;
    };

    BettiTable2 table;
    table.k = k;
    table.provenance = {model.label(), "knudsen-model", model.hash(), kEngineVersion};
    for (const auto& key : keys) {
        const auto [i, j] = key;
        const int b = basis.slice_dimension(i, j) - rank_at[key] - incoming_rank(i, j);
        if (b > 0) table.betti[key] = b;
    }
    return table;
}

Poly2 poincare2(const BettiTable2& table) { return table.poincare(); }

std::int64_t euler_char(const Poly2& p) { return p.euler(); }

std::string render_human_table(const std::vector<BettiTable2>& tables) {
    // Layout: columns are the t-degrees that occur anywhere in the range; one
    // row per s-weight per k, the weight-0 row first.
    std::set<int> degrees;
    int max_weight = 0;
    for (const auto& table : tables)
        for (const auto& [key, b] : table.betti) {
            (void)b;
            degrees.insert(key.first);
            max_weight = std::max(max_weight, key.second);
        }
    if (degrees.empty()) degrees.insert(0);

    std::vector<int> cols(degrees.begin(), degrees.end());
    std::vector<std::size_t> width(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        width[c] = std::max<std::size_t>(std::to_string(cols[c]).size(), 2);
        for (const auto& table : tables)
            for (const auto& [key, b] : table.betti)
                if (key.first == cols[c])
                    width[c] = std::max(width[c], std::to_string(b).size());
    }

    std::ostringstream os;
    os << "k\\i ";
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const std::string head = std::to_string(cols[c]);
        os << " " << std::string(width[c] - head.size(), ' ') << head;
    }
    os << "\n";

    for (const auto& table : tables) {
        for (int j = 0; j <= max_weight; ++j) {
            bool any = j == 0;
            for (const auto& [key, b] : table.betti) {
                (void)b;
                if (key.second == j) any = true;
            }
            if (!any) continue;
            std::string head = j == 0 ? std::to_string(table.k) : "s^" + std::to_string(j);
            head.resize(4, ' ');
            os << head;
            for (std::size_t c = 0; c < cols.size(); ++c) {
                const int b = table.betti_at(cols[c], j);
                const std::string cell = b == 0 ? "." : std::to_string(b);
                os << " " << std::string(width[c] - cell.size(), ' ') << cell;
            }
            os << "\n";
        }
    }
    return os.str();
}

nlohmann::json betti_to_json(const BettiTable2& table) {
    nlohmann::json doc;
    doc["k"] = table.k;
    doc["betti"] = nlohmann::json::array();
    for (const auto& [key, b] : table.betti)
        doc["betti"].push_back({{"i", key.first}, {"j", key.second}, {"b", b}});
    doc["provenance"] = {{"source", table.provenance.source},
                         {"builder", table.provenance.builder},
                         {"model_hash", table.provenance.model_hash},
                         {"engine", table.provenance.engine}};
    return doc;
}

std::string render_csv(const std::vector<BettiTable2>& tables) {
    std::ostringstream os;
    os << "k,i,j,b\n";
    for (const auto& table : tables)
        for (const auto& [key, b] : table.betti)
            os << table.k << "," << key.first << "," << key.second << "," << b << "\n";
    return os.str();
}

} // namespace confhom
