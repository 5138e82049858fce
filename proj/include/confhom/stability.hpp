#pragma once

#include "confhom/poly2.hpp"
#include "confhom/ring.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace confhom {

// Two-variable Poincare polynomials of C_1(M) .. C_horizon(M), contiguous
// from k = 1. Horizon must be at least 3.
class PolySequence {
public:
    explicit PolySequence(std::vector<Poly2> entries);

    int horizon() const { return static_cast<int>(entries_.size()); }
    const Poly2& at(int k) const; // 1-based

private:
    std::vector<Poly2> entries_;
};

struct ShiftedStability {
    int r = 0;
    int sigma = 0;
    int q = 0;
    bool operator==(const ShiftedStability&) const = default;
};

struct PoincareShiftedStability {
    int r = 0;
    int sigma = 0;
    Poly2 ratio;
    bool operator==(const PoincareShiftedStability&) const = default;
};

struct ExtendedShiftedStability {
    int r = 0;
    int sigma = 0;
    bool operator==(const ExtendedShiftedStability&) const = default;
};

// Every detection is horizon-certified: "holds for all k in [r, horizon-1]",
// never a claim about all k. Detectors pick the smallest r, then the smallest
// sigma; ratios are recovered from the first difference.
std::optional<int> detect_strong(const PolySequence& seq);
std::optional<ShiftedStability> detect_shifted(const PolySequence& seq, int q);
std::optional<PoincareShiftedStability> detect_poincare_shifted(const PolySequence& seq);
std::optional<ExtendedShiftedStability> detect_extended_shifted(const PolySequence& seq);

// k -> top t-degree of P_k (-1 for a zero polynomial).
std::map<int, int> cd_sequence(const PolySequence& seq);
bool cd_linearity_holds(const PolySequence& seq, int r, int sigma);

struct StabilityReport {
    std::optional<int> strong;
    std::optional<ShiftedStability> shifted;
    std::optional<PoincareShiftedStability> poincare_shifted;
    std::optional<ExtendedShiftedStability> extended_shifted;
    std::map<int, int> cd;
    int certified_up_to = 0;
};

StabilityReport analyze(const PolySequence& seq, int shifted_q = 1);
nlohmann::json report_to_json(const StabilityReport& report);

// Poincare-polynomial shifted => extended shifted => shifted for some q
// (equivalently q = 1). True when every detected link implies the next.
bool verify_implication_chain(const PolySequence& seq, const StabilityReport& report);

// 1 + sum_k chi(C_k) t^k == (1+t)^{chi(M)} through degree horizon, with the
// negative-exponent case expanded as a binomial series.
bool euler_identity_check(const CohomologyRing& ring, const PolySequence& seq);

// Odd-dimensional criterion: shifted stability holds within the horizon iff
// the top positive even Betti number of M is 1; rings with odd cohomology are
// instead strongly stable with range beta(M)-1 (1 when rationally acyclic).
bool odd_shifted_criterion(const CohomologyRing& ring, int horizon);

// h <= sigma whenever Poincare-polynomial shifted stability was detected for a
// closed oriented even-dimensional (h-1)-connected manifold.
bool connectivity_shift_inequality(const CohomologyRing& ring, const StabilityReport& report);

// chi(M) <= -2 obstructs Poincare-polynomial shifted stability.
bool euler_obstruction_check(const CohomologyRing& ring, const StabilityReport& report);

// Betti-number recurrence combining classical stability with the extended
// shift: degrees <= cd(r) are constant, degrees above repeat shifted by sigma.
bool stability_recurrence_check(const PolySequence& seq, const StabilityReport& report, int h);

} // namespace confhom
