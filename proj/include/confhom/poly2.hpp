#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace confhom {

// Bivariate polynomial in t (cohomological degree) and s (weight) with exact
// integer coefficients. Zero coefficients are never stored.
class Poly2 {
public:
    using Key = std::pair<int, int>; // (t exponent, s exponent)

    Poly2() = default;
    static Poly2 constant(std::int64_t c);

    void add_term(int t_exp, int s_exp, std::int64_t coeff);
    std::int64_t coeff(int t_exp, int s_exp) const;

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, std::int64_t>& terms() const { return terms_; }

    Poly2 operator+(const Poly2& other) const;
    Poly2 operator-(const Poly2& other) const;
    bool operator==(const Poly2& other) const { return terms_ == other.terms_; }
    bool operator!=(const Poly2& other) const { return terms_ != other.terms_; }

    // Multiplies by t^dt * s^ds. Negative shifts must not push exponents below zero.
    Poly2 shifted(int dt, int ds = 0) const;
    // True when every term has t exponent >= dt (so shifted(-dt) is a polynomial).
    bool divisible_by_t(int dt) const;

    // Top t-degree carrying a non-zero coefficient; -1 for the zero polynomial.
    int top_t_degree() const;
    int min_t_degree() const; // -1 for the zero polynomial

    // Keeps exactly the t-degrees in [top - q + 1, top], every s-term included.
    // The window is anchored at this polynomial's own top degree.
    Poly2 truncate_top(int q) const;

    // Restriction to a single s-power (as terms with that s exponent).
    Poly2 weight_part(int s_exp) const;

    std::int64_t eval_at(std::int64_t t, std::int64_t s) const;
    std::int64_t euler() const { return eval_at(-1, 1); } // alternating degree sum
    Poly2 specialize_s1() const;                          // collapse s -> 1

    // Deterministic rendering, e.g. "1 + 2*t^2 + s*t^3 + 2*s^2*t^14".
    std::string str() const;

private:
    std::map<Key, std::int64_t> terms_;
};

} // namespace confhom
