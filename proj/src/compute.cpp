#include "confhom/compute.hpp"

#include "confhom/errors.hpp"
#include "confhom/sym_power.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace confhom {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string file_stem(const std::string& path) {
    const auto slash = path.find_last_of("/\\");
    std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
    const auto dot = name.find('.');
    return dot == std::string::npos ? name : name.substr(0, dot);
}

BettiTable2 point_table(const std::string& label, int k) {
    // Configuration spaces of a point: C_1 is the point itself, C_k is empty
    // for k >= 2. Neither pipeline covers dimension 0, so this is direct.
    BettiTable2 table;
    table.k = k;
    table.provenance = {label, "point", 0, kEngineVersion};
    if (k == 1) table.betti[{0, 0}] = 1;
    return table;
}

} // namespace

ComputeInput input_from_preset(const std::string& spec) {
    std::string name = spec;
    std::vector<int> params;
    if (const auto comma = spec.find(','); comma != std::string::npos) {
        name = spec.substr(0, comma);
        std::stringstream rest(spec.substr(comma + 1));
        std::string item;
        while (std::getline(rest, item, ',')) {
            try {
                std::size_t used = 0;
                const int value = std::stoi(item, &used);
                if (used != item.size()) throw std::invalid_argument(item);
                params.push_back(value);
            } catch (const std::exception&) {
                throw parse_error("preset parameter '" + item + "' is not an integer");
            }
        }
    }
    ComputeInput input;
    input.ring = CohomologyRing::preset(name, params);
    input.label = input.ring->label();
    return input;
}

ComputeInput input_from_ring_file(const std::string& path) {
    ComputeInput input;
    input.ring = CohomologyRing::parse(read_file(path), file_stem(path));
    input.label = input.ring->label();
    return input;
}

ComputeInput input_from_model_file(const std::string& path) {
    ComputeInput input;
    input.model = load_raw_model(read_file(path), file_stem(path));
    input.label = input.model->label();
    return input;
}

std::vector<BettiTable2> compute_tables(const ComputeInput& input, int k_min, int k_max,
                                        Exec exec) {
    if (k_min < 1 || k_min > k_max) throw compute_error("invalid k range");

    enum class Path { point, sym, model } path;
    std::optional<KnudsenModel> model = input.model;
    if (model) {
        path = Path::model;
    } else if (!input.ring) {
        throw compute_error("no input resolved");
    } else if (input.ring->dim() == 0) {
        path = Path::point;
    } else if (input.ring->dim() % 2 == 1) {
        path = Path::sym;
    } else {
        path = Path::model;
        model = build_closed_oriented_model(*input.ring);
    }

    const int count = k_max - k_min + 1;
    std::vector<BettiTable2> tables(count);
    auto compute_one = [&](int idx) {
        const int k = k_min + idx;
        switch (path) {
            case Path::point: tables[idx] = point_table(input.label, k); break;
            case Path::sym: tables[idx] = odd_symmetric_power(*input.ring, k); break;
            case Path::model: tables[idx] = betti_bigraded(*model, k, Exec::serial); break;
        }
    };
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int idx = 0; idx < count; ++idx) compute_one(idx);
    } else {
        for (int idx = 0; idx < count; ++idx) compute_one(idx);
    }
    return tables;
}

PolySequence sequence_from_tables(const std::vector<BettiTable2>& tables) {
    std::vector<Poly2> polys;
    for (std::size_t i = 0; i < tables.size(); ++i) {
        if (tables[i].k != static_cast<int>(i) + 1)
            throw compute_error("stability analysis needs contiguous tables from k = 1");
        polys.push_back(tables[i].poincare());
    }
    return PolySequence(std::move(polys));
}

std::vector<std::string> compare_golden(const nlohmann::json& golden,
                                        const std::vector<BettiTable2>& tables) {
    std::vector<std::string> mismatches;
    for (const auto& entry : golden.at("tables")) {
        const int k = entry.at("k").get<int>();
        const auto found =
            std::find_if(tables.begin(), tables.end(),
                         [&](const BettiTable2& t) { return t.k == k; });
        if (found == tables.end()) {
            mismatches.push_back("golden k=" + std::to_string(k) +
                                 " is outside the computed range");
            continue;
        }
        std::map<std::pair<int, int>, int> expect;
        for (const auto& term : entry.at("betti")) {
            const int b = term.at("b").get<int>();
            if (b != 0) expect[{term.at("i").get<int>(), term.at("j").get<int>()}] = b;
        }
        if (expect == found->betti) continue;
        for (const auto& [key, b] : expect) {
            const int got = found->betti_at(key.first, key.second);
            if (got != b)
                mismatches.push_back("k=" + std::to_string(k) + " beta(" +
                                     std::to_string(key.first) + "," +
                                     std::to_string(key.second) + "): expected " +
                                     std::to_string(b) + ", got " + std::to_string(got));
        }
        for (const auto& [key, b] : found->betti)
            if (!expect.count(key))
                mismatches.push_back("k=" + std::to_string(k) + " beta(" +
                                     std::to_string(key.first) + "," +
                                     std::to_string(key.second) + "): expected 0, got " +
                                     std::to_string(b));
    }
    return mismatches;
}

} // namespace confhom
