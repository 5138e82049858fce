#pragma once

#include "confhom/poly2.hpp"
#include "confhom/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace confhom {

struct RingClass {
    std::string name;
    int degree = 0;
};

struct Violation {
    std::string code;   // stable identifier, e.g. "grading", "poincare-duality"
    std::string detail; // human-readable description naming the offending classes
};

using ValidationReport = std::vector<Violation>;

// A finite presentation of H*(M;Q): graded basis plus cup-product structure
// constants. Products are stored sparsely for index pairs a <= b only; the
// opposite order is derived through graded commutativity. Immutable after
// construction.
class CohomologyRing {
public:
    using Terms = std::vector<std::pair<int, Rational>>; // (basis index, coefficient)
    using ProductTable = std::map<std::pair<int, int>, Terms>;

    CohomologyRing(std::string label, int dim, bool closed, bool oriented,
                   std::vector<RingClass> basis, ProductTable products,
                   std::optional<int> declared_connectivity = std::nullopt);

    // Parses the ring-description JSON document. The returned ring passes
    // validate(); semantic violations are reported as exceptions.
    static CohomologyRing parse(const std::string& json_text, const std::string& label = "ring");

    static CohomologyRing preset(const std::string& name, const std::vector<int>& params);

    struct PresetInfo {
        std::string name;
        std::string params; // parameter schema, e.g. "n >= 1"
        std::string note;
    };
    static const std::vector<PresetInfo>& preset_catalog();

    std::string emit() const; // inverse of parse up to formatting

    // Lists every violated invariant; empty means the ring is valid.
    ValidationReport validate() const;
    void require_valid() const;

    const std::string& label() const { return label_; }
    int dim() const { return dim_; }
    bool closed() const { return closed_; }
    bool oriented() const { return oriented_; }
    const std::vector<RingClass>& basis() const { return basis_; }
    const ProductTable& stored_products() const { return products_; }
    std::optional<int> declared_connectivity() const { return declared_connectivity_; }

    // Index of the unique degree-0 class; -1 when that invariant is broken.
    int unit_index() const;

    // Connectivity h: the manifold is (h-1)-connected. Derived from the basis
    // as the smallest positive degree present (dim+1 when rationally acyclic).
    int connectivity() const;

    // x_a cup x_b with graded commutativity applied for a > b.
    Terms product(int a, int b) const;
    // Linear extension of the product to sparse element combinations.
    Terms multiply(const Terms& x, const Terms& y) const;

    int betti(int degree) const;
    Poly2 poincare() const; // single variable, all terms at s-exponent 0
    std::int64_t euler_char() const;
    int total_betti() const;

    bool has_odd_cohomology() const; // every positive even Betti number vanishes
    // Largest positive even degree with a non-zero Betti number, if any.
    std::optional<std::pair<int, int>> top_positive_even_betti() const;

private:
    std::string label_;
    int dim_;
    bool closed_;
    bool oriented_;
    std::vector<RingClass> basis_;
    ProductTable products_;
    std::optional<int> declared_connectivity_;
};

} // namespace confhom
