// Compares the serial reference against the OpenMP slice pool on the larger
// even-dimensional models. Build and run manually; not part of the test suite.

#include "confhom/cohomology.hpp"
#include "confhom/model.hpp"
#include "confhom/ring.hpp"

#include <omp.h>

#include <cstdio>
#include <string>
#include <vector>

namespace {

double time_betti(const confhom::KnudsenModel& model, int k, confhom::Exec exec) {
    const double start = omp_get_wtime();
    const auto table = confhom::betti_bigraded(model, k, exec);
    (void)table;
    return omp_get_wtime() - start;
}

} // namespace

int main(int argc, char** argv) {
    const int repeats = argc > 1 ? std::stoi(argv[1]) : 1;

    struct Case {
        const char* preset;
        std::vector<int> params;
        int k;
    };
    const std::vector<Case> cases{
        {"surface", {2}, 9},
        {"surface", {2}, 10},
        {"torus", {2}, 10},
        {"complex_projective", {3}, 12},
    };

    std::printf("%-28s %10s %10s %8s\n", "model", "serial[s]", "parallel[s]", "speedup");
    for (const auto& c : cases) {
        const auto ring = confhom::CohomologyRing::preset(c.preset, c.params);
        const auto model = confhom::build_closed_oriented_model(ring);
        double serial = 0.0, parallel = 0.0;
        for (int r = 0; r < repeats; ++r) {
            serial += time_betti(model, c.k, confhom::Exec::serial);
            parallel += time_betti(model, c.k, confhom::Exec::parallel);
        }
        serial /= repeats;
        parallel /= repeats;
        const std::string label = ring.label() + " k=" + std::to_string(c.k);
        std::printf("%-28s %10.3f %10.3f %8.2f\n", label.c_str(), serial, parallel,
                    parallel > 0 ? serial / parallel : 0.0);
    }

    // The two paths must agree; the benchmark doubles as a smoke check.
    const auto ring = confhom::CohomologyRing::preset("product_p1_p1", {});
    const auto model = confhom::build_closed_oriented_model(ring);
    for (int k = 1; k <= 8; ++k) {
        const auto a = confhom::betti_bigraded(model, k, confhom::Exec::serial);
        const auto b = confhom::betti_bigraded(model, k, confhom::Exec::parallel);
        if (a.betti != b.betti) {
            std::fprintf(stderr, "serial/parallel mismatch at k=%d\n", k);
            return 1;
        }
    }
    return 0;
}
