#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "confhom/compute.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace confhom;

namespace {

struct CliResult {
    int status;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = cli_run(args, out, err);
    return {status, out.str(), err.str()};
}

const std::string kData = std::string(CONFHOM_SOURCE_DIR) + "/data";

} // namespace

TEST_CASE("list-presets names the whole catalog") {
    const auto result = run({"list-presets"});
    CHECK(result.status == 0);
    for (const char* name : {"sphere", "complex_projective", "product_p1_p1", "torus",
                             "surface", "point", "rational_projective_plane"})
        CHECK(result.out.find(name) != std::string::npos);
}

TEST_CASE("list-presets --json is machine readable") {
    const auto result = run({"list-presets", "--json"});
    CHECK(result.status == 0);
    const auto doc = nlohmann::json::parse(result.out);
    CHECK(doc.is_array());
    CHECK(doc.size() == 7);
}

TEST_CASE("unknown subcommand is a usage error") {
    const auto result = run({"frobnicate"});
    CHECK(result.status == 1);
}

TEST_CASE("unknown preset and bad ranges exit with status 1") {
    CHECK(run({"run", "--preset", "moebius", "--k", "1..4"}).status == 1);
    CHECK(run({"run", "--preset", "sphere,2", "--k", "4..1"}).status == 1);
    CHECK(run({"run", "--preset", "sphere,2", "--k", "1..25"}).status == 1);
    CHECK(run({"run", "--preset", "sphere,2", "--k", "1..25", "--horizon-cap", "30"}).status ==
          0);
    CHECK(run({"run"}).status == 1); // no input source
    CHECK(run({"run", "--preset", "sphere,2", "--ring", "x.json"}).status == 1);
}

TEST_CASE("computation errors exit with status 2") {
    // Odd-dimensional rings cannot take the raw-model path; an open
    // even-dimensional ring cannot take the closed oriented builder.
    std::ofstream tmp("/tmp/open_ring.json");
    tmp << R"({"dim": 2, "closed": false, "oriented": true,
               "basis": [{"name": "e0", "degree": 0}],
               "products": [{"a": "e0", "b": "e0", "terms": [{"c": "e0", "coeff": "1"}]}]})";
    tmp.close();
    const auto result = run({"run", "--ring", "/tmp/open_ring.json", "--k", "1..4"});
    CHECK(result.status == 2);
}

TEST_CASE("golden comparison drives the exit code") {
    const auto match = run({"run", "--preset", "product_p1_p1", "--k", "1..7", "--out",
                            "table", "--compare", kData + "/golden/cp1xcp1_k1-7.golden.json"});
    CHECK(match.status == 0);
    CHECK(match.out.find("golden match") != std::string::npos);

    const auto cp3 = run({"run", "--preset", "complex_projective,3", "--k", "1..7",
                          "--compare", kData + "/golden/cp3_k1-7.golden.json"});
    CHECK(cp3.status == 0);

    // A wrong golden value must be reported and exit 3.
    std::ofstream bad("/tmp/bad_golden.json");
    bad << R"({"name": "bad", "tables": [{"k": 2, "betti": [{"i": 0, "j": 0, "b": 7}]}]})";
    bad.close();
    const auto mismatch = run({"run", "--preset", "product_p1_p1", "--k", "1..3",
                               "--compare", "/tmp/bad_golden.json"});
    CHECK(mismatch.status == 3);
    CHECK(mismatch.err.find("golden mismatch") != std::string::npos);
}

TEST_CASE("report output carries the detections") {
    const auto result = run({"run", "--preset", "sphere,2", "--k", "1..6", "--out", "report"});
    CHECK(result.status == 0);
    const auto doc = nlohmann::json::parse(result.out);
    CHECK(doc.at("strong") == 3);
    CHECK(doc.at("shifted").is_null());
    CHECK(doc.at("input") == "sphere(2)");
}

TEST_CASE("report needs a full sequence from k = 1") {
    CHECK(run({"run", "--preset", "sphere,2", "--k", "2..6", "--out", "report"}).status == 1);
    CHECK(run({"run", "--preset", "sphere,2", "--k", "1..2", "--out", "report"}).status == 1);
}

TEST_CASE("ring and raw-model files are accepted") {
    const auto genus2 = run({"run", "--ring", kData + "/examples/surface_genus2.ring.json",
                             "--k", "1..4", "--out", "csv"});
    CHECK(genus2.status == 0);
    CHECK(genus2.out.find("k,i,j,b") != std::string::npos);

    const auto acyclic = run({"run", "--raw-model", kData + "/examples/acyclic_open4.model.json",
                              "--k", "1..5", "--out", "json"});
    CHECK(acyclic.status == 0);
    const auto doc = nlohmann::json::parse(acyclic.out);
    CHECK(doc.at("tables").size() == 5);
}

TEST_CASE("byte-stable output across runs and thread counts") {
    const std::vector<std::string> args{"run", "--preset", "complex_projective,3",
                                        "--k", "1..6", "--out", "table", "--out", "json",
                                        "--out", "csv", "--out", "report"};
    const auto first = run(args);
    const auto second = run(args);
    CHECK(first.status == 0);
    CHECK(first.out == second.out);

    auto serial_args = args;
    serial_args.push_back("--jobs");
    serial_args.push_back("1");
    const auto serial = run(serial_args);
    CHECK(serial.out == first.out);
}
