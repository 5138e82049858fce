#pragma once

#include "confhom/cohomology.hpp"
#include "confhom/model.hpp"
#include "confhom/ring.hpp"
#include "confhom/stability.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace confhom {

// A resolved computation input: a preset or user ring (even-dimensional ones
// get a model built on demand), or a raw user-supplied model.
struct ComputeInput {
    std::string label;
    std::optional<CohomologyRing> ring;
    std::optional<KnudsenModel> model;
};

ComputeInput input_from_preset(const std::string& spec); // "sphere,2" or "product_p1_p1"
ComputeInput input_from_ring_file(const std::string& path);
ComputeInput input_from_model_file(const std::string& path);

// Betti tables for k_min..k_max, picking the odd-dimensional symmetric-power
// path or the even-dimensional model path by ring dimension. With
// Exec::parallel the k-range is distributed over an OpenMP pool; results are
// returned in ascending k either way.
std::vector<BettiTable2> compute_tables(const ComputeInput& input, int k_min, int k_max,
                                        Exec exec);

// Requires tables for k = 1..horizon in order.
PolySequence sequence_from_tables(const std::vector<BettiTable2>& tables);

// Mismatch descriptions against a golden document; empty means agreement.
std::vector<std::string> compare_golden(const nlohmann::json& golden,
                                        const std::vector<BettiTable2>& tables);

// Command-line front end; returns the process exit status.
// 0 success, 1 usage/input error, 2 computation error, 3 golden mismatch.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace confhom
