#include "confhom/compute.hpp"

#include "confhom/errors.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

namespace confhom {

namespace {

bool parse_k_range(const std::string& text, int& k_min, int& k_max) {
    const auto dots = text.find("..");
    try {
        std::size_t used = 0;
        if (dots == std::string::npos) {
            k_min = k_max = std::stoi(text, &used);
            return used == text.size();
        }
        const std::string lo = text.substr(0, dots), hi = text.substr(dots + 2);
        k_min = std::stoi(lo, &used);
        if (used != lo.size()) return false;
        k_max = std::stoi(hi, &used);
        return used == hi.size();
    } catch (const std::exception&) {
        return false;
    }
}

int run_command(const std::string& preset, const std::string& ring_path,
                const std::string& model_path, const std::string& k_range,
                const std::vector<std::string>& outs, const std::string& compare_path,
                int horizon_cap, int jobs, int shift_length, std::ostream& out,
                std::ostream& err) {
    const int sources = (!preset.empty()) + (!ring_path.empty()) + (!model_path.empty());
    if (sources != 1) {
        err << "error: exactly one of --preset, --ring, --raw-model is required\n";
        return 1;
    }

    int k_min = 1, k_max = 12;
    if (!k_range.empty() && !parse_k_range(k_range, k_min, k_max)) {
        err << "error: --k expects MIN..MAX\n";
        return 1;
    }
    if (k_min < 1 || k_min > k_max) {
        err << "error: invalid k range\n";
        return 1;
    }
    if (k_max > horizon_cap) {
        err << "error: k_max " << k_max << " exceeds the horizon cap " << horizon_cap
            << " (raise --horizon-cap)\n";
        return 1;
    }

    std::set<std::string> formats(outs.begin(), outs.end());
    if (formats.empty()) formats.insert("table");
    for (const auto& f : formats)
        if (f != "table" && f != "json" && f != "csv" && f != "report") {
            err << "error: unknown output format '" << f << "'\n";
            return 1;
        }
    if (formats.count("report") && (k_min != 1 || k_max < 3)) {
        err << "error: --out report needs --k 1..N with N >= 3\n";
        return 1;
    }

#ifdef _OPENMP
    if (jobs > 0) omp_set_num_threads(jobs);
#endif

    ComputeInput input;
    try {
        if (!preset.empty())
            input = input_from_preset(preset);
        else if (!ring_path.empty())
            input = input_from_ring_file(ring_path);
        else
            input = input_from_model_file(model_path);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    std::vector<BettiTable2> tables;
    try {
        tables = compute_tables(input, k_min, k_max, jobs == 1 ? Exec::serial : Exec::parallel);
    } catch (const std::exception& e) {
        err << "computation error: " << e.what() << "\n";
        return 2;
    }

    if (formats.count("table")) out << render_human_table(tables);
    if (formats.count("json")) {
        nlohmann::json doc;
        doc["input"] = input.label;
        doc["engine"] = kEngineVersion;
        doc["tables"] = nlohmann::json::array();
        for (const auto& table : tables) doc["tables"].push_back(betti_to_json(table));
        out << doc.dump(2) << "\n";
    }
    if (formats.count("csv")) out << render_csv(tables);
    if (formats.count("report")) {
        try {
            const PolySequence seq = sequence_from_tables(tables);
            StabilityReport report = analyze(seq, shift_length);
            nlohmann::json doc = report_to_json(report);
            doc["input"] = input.label;
            out << doc.dump(2) << "\n";
        } catch (const std::exception& e) {
            err << "computation error: " << e.what() << "\n";
            return 2;
        }
    }

    if (!compare_path.empty()) {
        nlohmann::json golden;
        try {
            std::ifstream in(compare_path, std::ios::binary);
            if (!in) throw parse_error("cannot open '" + compare_path + "'");
            in >> golden;
        } catch (const std::exception& e) {
            err << "error: golden file: " << e.what() << "\n";
            return 1;
        }
        std::vector<std::string> mismatches;
        try {
            mismatches = compare_golden(golden, tables);
        } catch (const std::exception& e) {
            err << "error: golden file: " << e.what() << "\n";
            return 1;
        }
        if (!mismatches.empty()) {
            for (const auto& line : mismatches) err << "golden mismatch: " << line << "\n";
            return 3;
        }
        out << "golden match: " << compare_path << "\n";
    }
    return 0;
}

} // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact bigraded cohomology of unordered configuration spaces", "confhom"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "compute Betti tables over a k-range");
    std::string preset, ring_path, model_path, k_range, compare_path;
    std::vector<std::string> outs;
    int horizon_cap = 20, jobs = 0, shift_length = 1;
    run->add_option("--preset", preset, "preset name with parameters, e.g. sphere,2");
    run->add_option("--ring", ring_path, "ring-description JSON file");
    run->add_option("--raw-model", model_path, "raw model JSON file");
    run->add_option("--k", k_range, "k range MIN..MAX (default 1..12)");
    run->add_option("--out", outs, "output format: table, json, csv, report (repeatable)");
    run->add_option("--compare", compare_path, "golden Betti-table file to diff against");
    run->add_option("--horizon-cap", horizon_cap, "hard cap on k_max (default 20)");
    run->add_option("--jobs", jobs, "worker threads (0 = OpenMP default, 1 = serial)");
    run->add_option("--shift-length", shift_length,
                    "truncation length q for the report's shifted detector (default 1)");

    auto* list = app.add_subcommand("list-presets", "list available presets");
    bool list_json = false;
    list->add_flag("--json", list_json, "machine-readable listing");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    }

    if (list->parsed()) {
        const auto& catalog = CohomologyRing::preset_catalog();
        if (list_json) {
            nlohmann::json doc = nlohmann::json::array();
            for (const auto& info : catalog)
                doc.push_back({{"name", info.name}, {"params", info.params},
                               {"note", info.note}});
            out << doc.dump(2) << "\n";
        } else {
            for (const auto& info : catalog) {
                out << info.name;
                if (!info.params.empty()) out << "(" << info.params << ")";
                out << "  -  " << info.note << "\n";
            }
        }
        return 0;
    }

    return run_command(preset, ring_path, model_path, k_range, outs, compare_path,
                       horizon_cap, jobs, shift_length, out, err);
}

} // namespace confhom
