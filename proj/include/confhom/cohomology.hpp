#pragma once

#include "confhom/model.hpp"
#include "confhom/poly2.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace confhom {

inline constexpr const char* kEngineVersion = "confhom 0.1.0";

struct Provenance {
    std::string source;  // ring/model label
    std::string builder; // "knudsen-model", "sym-power", "point"
    std::uint64_t model_hash = 0;
    std::string engine = kEngineVersion;
};

// Bigraded Betti numbers of C_k: (degree i, weight j) -> dimension, zeros absent.
struct BettiTable2 {
    int k = 0;
    std::map<std::pair<int, int>, int> betti;
    Provenance provenance;

    Poly2 poincare() const;
    int betti_at(int i, int j) const;
    int total_betti(int i) const; // sum over weights at degree i
};

enum class Exec { serial, parallel };

// beta_{i,j} = ker dim of d on slice (i,j) minus rank of d into it. The serial
// path is the reference; the parallel path distributes slice ranks over OpenMP
// threads and must agree with it exactly.
BettiTable2 betti_bigraded(const KnudsenModel& model, int k, Exec exec = Exec::serial);

Poly2 poincare2(const BettiTable2& table);

// Alternating sum over total degree, P(-1, 1).
std::int64_t euler_char(const Poly2& p);

// Output formats.
std::string render_human_table(const std::vector<BettiTable2>& tables);
nlohmann::json betti_to_json(const BettiTable2& table);
std::string render_csv(const std::vector<BettiTable2>& tables);

} // namespace confhom
