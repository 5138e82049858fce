#include "confhom/ring.hpp"

#include "confhom/errors.hpp"
#include "confhom/rank.hpp"
#include "confhom/sparse_matrix.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace confhom {

namespace {

using nlohmann::json;

CohomologyRing::Terms normalize_terms(CohomologyRing::Terms terms) {
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    CohomologyRing::Terms out;
    for (auto& [idx, coeff] : terms) {
        if (!out.empty() && out.back().first == idx)
            out.back().second += coeff;
        else
            out.emplace_back(idx, coeff);
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const auto& t) { return t.second == 0; }),
              out.end());
    return out;
}

std::string pair_label(const CohomologyRing& ring, int a, int b) {
    return ring.basis()[a].name + " * " + ring.basis()[b].name;
}

} // namespace

CohomologyRing::CohomologyRing(std::string label, int dim, bool closed, bool oriented,
                               std::vector<RingClass> basis, ProductTable products,
                               std::optional<int> declared_connectivity)
    : label_(std::move(label)),
      dim_(dim),
      closed_(closed),
      oriented_(oriented),
      basis_(std::move(basis)),
      declared_connectivity_(declared_connectivity) {
    if (dim_ < 0) throw model_error("manifold dimension must be non-negative");
    const int n = static_cast<int>(basis_.size());
    for (auto& [key, terms] : products) {
        const auto [a, b] = key;
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw model_error("product table references a basis index out of range");
        if (a > b) throw model_error("product table may only store pairs with a <= b");
        for (const auto& [c, coeff] : terms) {
            (void)coeff;
            if (c < 0 || c >= n)
                throw model_error("product term references a basis index out of range");
        }
        auto normalized = normalize_terms(terms);
        if (!normalized.empty()) products_.emplace(key, std::move(normalized));
    }
}

int CohomologyRing::unit_index() const {
    int unit = -1;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (basis_[i].degree == 0) {
            if (unit >= 0) return -1;
            unit = static_cast<int>(i);
        }
    }
    return unit;
}

int CohomologyRing::connectivity() const {
    int h = dim_ + 1;
    for (const auto& cls : basis_)
        if (cls.degree > 0) h = std::min(h, cls.degree);
    return h;
}

CohomologyRing::Terms CohomologyRing::product(int a, int b) const {
    const bool swap = a > b;
    const auto it = products_.find(swap ? std::make_pair(b, a) : std::make_pair(a, b));
    if (it == products_.end()) return {};
    Terms terms = it->second;
    if (swap && (basis_[a].degree % 2) && (basis_[b].degree % 2))
        for (auto& [idx, coeff] : terms) {
            (void)idx;
            coeff = -coeff;
        }
    return terms;
}

CohomologyRing::Terms CohomologyRing::multiply(const Terms& x, const Terms& y) const {
    Terms acc;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y)
            for (const auto& [c, k] : product(a, b)) acc.emplace_back(c, ca * cb * k);
    return normalize_terms(std::move(acc));
}

int CohomologyRing::betti(int degree) const {
    int count = 0;
    for (const auto& cls : basis_)
        if (cls.degree == degree) ++count;
    return count;
}

Poly2 CohomologyRing::poincare() const {
    Poly2 p;
    for (const auto& cls : basis_) p.add_term(cls.degree, 0, 1);
    return p;
}

std::int64_t CohomologyRing::euler_char() const { return poincare().euler(); }

int CohomologyRing::total_betti() const { return static_cast<int>(basis_.size()); }

bool CohomologyRing::has_odd_cohomology() const {
    for (const auto& cls : basis_)
        if (cls.degree > 0 && cls.degree % 2 == 0) return false;
    return true;
}

std::optional<std::pair<int, int>> CohomologyRing::top_positive_even_betti() const {
    int top = 0;
    for (const auto& cls : basis_)
        if (cls.degree > 0 && cls.degree % 2 == 0) top = std::max(top, cls.degree);
    if (top == 0) return std::nullopt;
    return std::make_pair(top, betti(top));
}

ValidationReport CohomologyRing::validate() const {
    ValidationReport report;
    const int n = static_cast<int>(basis_.size());

    std::set<std::string> names;
    for (const auto& cls : basis_) {
        if (!names.insert(cls.name).second)
            report.push_back({"duplicate-name", "basis name '" + cls.name + "' appears twice"});
        if (cls.degree < 0 || cls.degree > dim_)
            report.push_back({"degree-range", "class '" + cls.name + "' has degree " +
                                                  std::to_string(cls.degree) +
                                                  " outside [0, dim]"});
    }

    const int degree0 = betti(0);
    if (degree0 != 1)
        report.push_back({"connectedness", "expected exactly one degree-0 class, found " +
                                               std::to_string(degree0)});

    for (const auto& [key, terms] : products_) {
        const auto [a, b] = key;
        const int want = basis_[a].degree + basis_[b].degree;
        for (const auto& [c, coeff] : terms) {
            (void)coeff;
            if (basis_[c].degree != want)
                report.push_back({"grading", pair_label(*this, a, b) + " contains " +
                                                 basis_[c].name + " of degree " +
                                                 std::to_string(basis_[c].degree) +
                                                 ", expected " + std::to_string(want)});
        }
        if (a == b && basis_[a].degree % 2 && !terms.empty())
            report.push_back({"graded-commutativity",
                              "odd class '" + basis_[a].name + "' has a non-zero square"});
    }

    const int unit = unit_index();
    if (unit >= 0) {
        for (int j = 0; j < n; ++j) {
            const Terms expect{{j, Rational(1)}};
            if (product(unit, j) != expect)
                report.push_back({"unit", "product with the unit does not fix '" +
                                              basis_[j].name + "'"});
        }
    }

    // Associativity of the (derived) full table.
    if (unit >= 0 && degree0 == 1) {
        for (int a = 0; a < n && report.size() < 64; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    const Terms left = multiply(product(a, b), {{c, Rational(1)}});
                    const Terms right = multiply({{a, Rational(1)}}, product(b, c));
                    if (left != right) {
                        report.push_back(
                            {"associativity", "(" + basis_[a].name + " " + basis_[b].name +
                                                  ") " + basis_[c].name + " != " +
                                                  basis_[a].name + " (" + basis_[b].name +
                                                  " " + basis_[c].name + ")"});
                    }
                }
    }

    if (closed_ && oriented_) {
        const int top_count = betti(dim_);
        if (top_count != 1)
            report.push_back({"top-class", "closed oriented ring needs exactly one degree-" +
                                               std::to_string(dim_) + " class, found " +
                                               std::to_string(top_count)});
        for (int p = 0; p <= dim_; ++p)
            if (betti(p) != betti(dim_ - p)) {
                report.push_back({"poincare-duality",
                                  "betti(" + std::to_string(p) + ") = " +
                                      std::to_string(betti(p)) + " but betti(" +
                                      std::to_string(dim_ - p) + ") = " +
                                      std::to_string(betti(dim_ - p))});
            }
        if (top_count == 1) {
            int top = -1;
            for (int i = 0; i < n; ++i)
                if (basis_[i].degree == dim_) top = i;
            // Perfect pairing H^p x H^{n-p} -> H^n, degree by degree.
            for (int p = 0; p <= dim_ / 2; ++p) {
                std::vector<int> left, right;
                for (int i = 0; i < n; ++i) {
                    if (basis_[i].degree == p) left.push_back(i);
                    if (basis_[i].degree == dim_ - p) right.push_back(i);
                }
                if (left.empty() || left.size() != right.size()) continue; // reported above
                RationalSparseMatrix pairing(static_cast<int>(left.size()),
                                             static_cast<int>(right.size()));
                for (std::size_t r = 0; r < left.size(); ++r)
                    for (std::size_t c = 0; c < right.size(); ++c)
                        for (const auto& [idx, coeff] : product(left[r], right[c]))
                            if (idx == top) pairing.set(static_cast<int>(r),
                                                        static_cast<int>(c), coeff);
                if (rank(pairing) != static_cast<int>(left.size()))
                    report.push_back({"poincare-duality",
                                      "pairing H^" + std::to_string(p) + " x H^" +
                                          std::to_string(dim_ - p) +
                                          " -> H^top is degenerate"});
            }
        }
    }

    if (declared_connectivity_) {
        const int h = *declared_connectivity_;
        if (h < 1)
            report.push_back({"connectivity", "declared connectivity must be >= 1"});
        for (const auto& cls : basis_)
            if (cls.degree >= 1 && cls.degree <= h - 1)
                report.push_back({"connectivity",
                                  "class '" + cls.name + "' of degree " +
                                      std::to_string(cls.degree) +
                                      " contradicts declared connectivity " +
                                      std::to_string(h)});
    }

    return report;
}

void CohomologyRing::require_valid() const {
    const auto report = validate();
    if (report.empty()) return;
    std::ostringstream os;
    os << "ring '" << label_ << "' is invalid:";
    for (const auto& v : report) os << "\n  [" << v.code << "] " << v.detail;
    throw model_error(os.str());
}

// ---------------------------------------------------------------------------
// Parsing / emission

CohomologyRing CohomologyRing::parse(const std::string& json_text, const std::string& label) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("ring document: ") + e.what());
    }
    try {
        const int dim = doc.at("dim").get<int>();
        const bool closed = doc.at("closed").get<bool>();
        const bool oriented = doc.at("oriented").get<bool>();

        std::vector<RingClass> basis;
        std::map<std::string, int> index_of;
        for (const auto& item : doc.at("basis")) {
            RingClass cls{item.at("name").get<std::string>(), item.at("degree").get<int>()};
            if (index_of.count(cls.name))
                throw parse_error("duplicate basis name '" + cls.name + "'");
            index_of[cls.name] = static_cast<int>(basis.size());
            basis.push_back(std::move(cls));
        }

        auto resolve = [&](const std::string& name) {
            auto it = index_of.find(name);
            if (it == index_of.end())
                throw parse_error("unknown basis name '" + name + "'");
            return it->second;
        };

        ProductTable products;
        if (doc.contains("products")) {
            for (const auto& entry : doc.at("products")) {
                const int a = resolve(entry.at("a").get<std::string>());
                const int b = resolve(entry.at("b").get<std::string>());
                if (a > b)
                    throw parse_error("product pair '" + entry.at("a").get<std::string>() +
                                      "','" + entry.at("b").get<std::string>() +
                                      "' is not in basis order (only a <= b may appear)");
                Terms terms;
                for (const auto& term : entry.at("terms"))
                    terms.emplace_back(resolve(term.at("c").get<std::string>()),
                                       parse_rational(term.at("coeff").get<std::string>()));
                if (products.count({a, b}))
                    throw parse_error("duplicate product entry for pair (" +
                                      basis[a].name + ", " + basis[b].name + ")");
                products.emplace(std::make_pair(a, b), std::move(terms));
            }
        }

        std::optional<int> connectivity;
        if (doc.contains("connectivity")) connectivity = doc.at("connectivity").get<int>();

        CohomologyRing ring(label, dim, closed, oriented, std::move(basis),
                            std::move(products), connectivity);
        ring.require_valid();
        return ring;
    } catch (const json::exception& e) {
        throw parse_error(std::string("ring document: ") + e.what());
    }
}

std::string CohomologyRing::emit() const {
    json doc;
    doc["dim"] = dim_;
    doc["closed"] = closed_;
    doc["oriented"] = oriented_;
    if (declared_connectivity_) doc["connectivity"] = *declared_connectivity_;
    doc["basis"] = json::array();
    for (const auto& cls : basis_)
        doc["basis"].push_back({{"name", cls.name}, {"degree", cls.degree}});
    doc["products"] = json::array();
    for (const auto& [key, terms] : products_) {
        json entry;
        entry["a"] = basis_[key.first].name;
        entry["b"] = basis_[key.second].name;
        entry["terms"] = json::array();
        for (const auto& [c, coeff] : terms)
            entry["terms"].push_back({{"c", basis_[c].name}, {"coeff", format_rational(coeff)}});
        doc["products"].push_back(std::move(entry));
    }
    return doc.dump(2);
}

// ---------------------------------------------------------------------------
// Presets

namespace {

using Terms = CohomologyRing::Terms;
using ProductTable = CohomologyRing::ProductTable;

void set_unit_products(ProductTable& table, int unit, int count) {
    for (int j = unit; j < count; ++j) table[{std::min(unit, j), std::max(unit, j)}] = {{j, Rational(1)}};
    for (int j = 0; j < unit; ++j) table[{j, unit}] = {{j, Rational(1)}};
}

CohomologyRing make_sphere(int n) {
    if (n < 1) throw parse_error("sphere(n) needs n >= 1");
    std::vector<RingClass> basis{{"e0", 0}, {"e" + std::to_string(n), n}};
    ProductTable products;
    set_unit_products(products, 0, 2);
    return CohomologyRing("sphere(" + std::to_string(n) + ")", n, true, true, basis, products);
}

CohomologyRing make_complex_projective(int n) {
    if (n < 1) throw parse_error("complex_projective(n) needs n >= 1");
    std::vector<RingClass> basis;
    for (int i = 0; i <= n; ++i) basis.push_back({"x" + std::to_string(i), 2 * i});
    ProductTable products;
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            if (i + j <= n) products[{i, j}] = {{i + j, Rational(1)}};
    return CohomologyRing("complex_projective(" + std::to_string(n) + ")", 2 * n, true, true,
                          basis, products);
}

CohomologyRing make_product_p1_p1() {
    std::vector<RingClass> basis{{"e0", 0}, {"a2", 2}, {"b2", 2}, {"t4", 4}};
    ProductTable products;
    set_unit_products(products, 0, 4);
    products[{1, 2}] = {{3, Rational(1)}}; // a2 * b2 is the top class
    return CohomologyRing("product_p1_p1", 4, true, true, basis, products);
}

CohomologyRing make_rational_projective_plane(int m) {
    if (m < 1) throw parse_error("rational_projective_plane(m) needs m >= 1");
    std::vector<RingClass> basis{{"e0", 0}, {"x", 2 * m}, {"y", 4 * m}};
    ProductTable products;
    set_unit_products(products, 0, 3);
    products[{1, 1}] = {{2, Rational(1)}}; // x^2 = y
    return CohomologyRing("rational_projective_plane(" + std::to_string(m) + ")", 4 * m, true,
                          true, basis, products);
}

CohomologyRing make_torus(int n) {
    if (n < 1) throw parse_error("torus(n) needs n >= 1");
    if (n > 10) throw parse_error("torus(n) supported for n <= 10");
    // Exterior algebra on n degree-1 classes; basis indexed by subsets.
    std::vector<unsigned> subsets;
    for (unsigned mask = 0; mask < (1u << n); ++mask) subsets.push_back(mask);
    std::stable_sort(subsets.begin(), subsets.end(), [](unsigned a, unsigned b) {
        const int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        if (pa != pb) return pa < pb;
        return a < b;
    });
    auto subset_name = [&](unsigned mask) {
        if (mask == 0) return std::string("e0");
        std::string name = "e";
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) name += std::to_string(i + 1);
        return name;
    };
    std::vector<RingClass> basis;
    std::map<unsigned, int> index_of;
    for (unsigned mask : subsets) {
        index_of[mask] = static_cast<int>(basis.size());
        basis.push_back({subset_name(mask), __builtin_popcount(mask)});
    }
    // Shuffle sign: parity of pairs (s in S, t in T) with s > t.
    auto shuffle_sign = [&](unsigned s, unsigned t) {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            if (s & (1u << i))
                for (int j = 0; j < i; ++j)
                    if (t & (1u << j)) ++inversions;
        return inversions % 2 ? -1 : 1;
    };
    ProductTable products;
    for (std::size_t a = 0; a < subsets.size(); ++a)
        for (std::size_t b = a; b < subsets.size(); ++b) {
            const unsigned sa = subsets[a], sb = subsets[b];
            if (sa & sb) continue;
            products[{static_cast<int>(a), static_cast<int>(b)}] = {
                {index_of[sa | sb], Rational(shuffle_sign(sa, sb))}};
        }
    return CohomologyRing("torus(" + std::to_string(n) + ")", n, true, true, basis, products);
}

CohomologyRing make_surface(int g) {
    if (g < 0) throw parse_error("surface(g) needs g >= 0");
    if (g == 0) {
        auto ring = make_sphere(2);
        return CohomologyRing("surface(0)", 2, true, true, ring.basis(),
                              ring.stored_products());
    }
    std::vector<RingClass> basis{{"e0", 0}};
    for (int i = 1; i <= g; ++i) {
        basis.push_back({"a" + std::to_string(i), 1});
        basis.push_back({"b" + std::to_string(i), 1});
    }
    basis.push_back({"w", 2});
    const int count = static_cast<int>(basis.size());
    const int top = count - 1;
    ProductTable products;
    set_unit_products(products, 0, count);
    for (int i = 1; i <= g; ++i) {
        const int ai = 2 * i - 1, bi = 2 * i;
        products[{ai, bi}] = {{top, Rational(1)}}; // a_i b_i = w; b_i a_i = -w derived
    }
    return CohomologyRing("surface(" + std::to_string(g) + ")", 2, true, true, basis, products);
}

CohomologyRing make_point() {
    std::vector<RingClass> basis{{"e0", 0}};
    ProductTable products;
    products[{0, 0}] = {{0, Rational(1)}};
    return CohomologyRing("point", 0, true, true, basis, products);
}

} // namespace

CohomologyRing CohomologyRing::preset(const std::string& name, const std::vector<int>& params) {
    auto want = [&](std::size_t count) {
        if (params.size() != count)
            throw parse_error("preset '" + name + "' expects " + std::to_string(count) +
                              " parameter(s), got " + std::to_string(params.size()));
    };
    if (name == "sphere") {
        want(1);
        return make_sphere(params[0]);
    }
    if (name == "complex_projective") {
        want(1);
        return make_complex_projective(params[0]);
    }
    if (name == "product_p1_p1") {
        want(0);
        return make_product_p1_p1();
    }
    if (name == "torus") {
        want(1);
        return make_torus(params[0]);
    }
    if (name == "surface") {
        want(1);
        return make_surface(params[0]);
    }
    if (name == "point") {
        want(0);
        return make_point();
    }
    if (name == "rational_projective_plane") {
        want(1);
        return make_rational_projective_plane(params[0]);
    }
    throw parse_error("unknown preset '" + name + "'");
}

const std::vector<CohomologyRing::PresetInfo>& CohomologyRing::preset_catalog() {
    static const std::vector<PresetInfo> catalog{
        {"sphere", "n >= 1", "rational homology n-sphere, P = 1 + t^n"},
        {"complex_projective", "n >= 1", "CP^n, truncated polynomial ring on a degree-2 class"},
        {"product_p1_p1", "", "CP^1 x CP^1, P = 1 + 2t^2 + t^4"},
        {"torus", "n >= 1", "n-torus, exterior ring on n degree-1 classes"},
        {"surface", "g >= 0", "closed oriented genus-g surface"},
        {"point", "", "one-point space"},
        {"rational_projective_plane", "m >= 1", "P = 1 + t^{2m} + t^{4m}"},
    };
    return catalog;
}

} // namespace confhom
