#include "confhom/poly2.hpp"

#include "confhom/errors.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace confhom {

Poly2 Poly2::constant(std::int64_t c) {
    Poly2 p;
    p.add_term(0, 0, c);
    return p;
}

void Poly2::add_term(int t_exp, int s_exp, std::int64_t coeff) {
    if (coeff == 0) return;
    const Key key{t_exp, s_exp};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

std::int64_t Poly2::coeff(int t_exp, int s_exp) const {
    auto it = terms_.find({t_exp, s_exp});
    return it == terms_.end() ? 0 : it->second;
}

Poly2 Poly2::operator+(const Poly2& other) const {
    Poly2 out = *this;
    for (const auto& [key, c] : other.terms_) out.add_term(key.first, key.second, c);
    return out;
}

Poly2 Poly2::operator-(const Poly2& other) const {
    Poly2 out = *this;
    for (const auto& [key, c] : other.terms_) out.add_term(key.first, key.second, -c);
    return out;
}

Poly2 Poly2::shifted(int dt, int ds) const {
    Poly2 out;
    for (const auto& [key, c] : terms_) {
        const int t = key.first + dt;
        const int s = key.second + ds;
        if (t < 0 || s < 0) throw compute_error("polynomial shift below degree zero");
        out.add_term(t, s, c);
    }
    return out;
}

bool Poly2::divisible_by_t(int dt) const {
    for (const auto& [key, c] : terms_) {
        (void)c;
        if (key.first < dt) return false;
    }
    return true;
}

int Poly2::top_t_degree() const {
    int top = -1;
    for (const auto& [key, c] : terms_) {
        (void)c;
        top = std::max(top, key.first);
    }
    return top;
}

int Poly2::min_t_degree() const {
    if (terms_.empty()) return -1;
    int low = terms_.begin()->first.first;
    for (const auto& [key, c] : terms_) {
        (void)c;
        low = std::min(low, key.first);
    }
    return low;
}

Poly2 Poly2::truncate_top(int q) const {
    if (is_zero()) throw compute_error("truncation of the zero polynomial");
    if (q < 1) throw compute_error("truncation length must be positive");
    const int top = top_t_degree();
    Poly2 out;
    for (const auto& [key, c] : terms_)
        if (key.first >= top - q + 1) out.add_term(key.first, key.second, c);
    return out;
}

Poly2 Poly2::weight_part(int s_exp) const {
    Poly2 out;
    for (const auto& [key, c] : terms_)
        if (key.second == s_exp) out.add_term(key.first, key.second, c);
    return out;
}

std::int64_t Poly2::eval_at(std::int64_t t, std::int64_t s) const {
    auto pow_i = [](std::int64_t base, int exp) {
        std::int64_t r = 1;
        for (int i = 0; i < exp; ++i) r *= base;
        return r;
    };
    std::int64_t value = 0;
    for (const auto& [key, c] : terms_) value += c * pow_i(t, key.first) * pow_i(s, key.second);
    return value;
}

Poly2 Poly2::specialize_s1() const {
    Poly2 out;
    for (const auto& [key, c] : terms_) out.add_term(key.first, 0, c);
    return out;
}

std::string Poly2::str() const {
    if (terms_.empty()) return "0";
    // Order terms by (s, t) so weight blocks read like table rows.
    std::vector<std::pair<Key, std::int64_t>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (a.first.second != b.first.second) return a.first.second < b.first.second;
        return a.first.first < b.first.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : sorted) {
        const auto [ti, si] = key;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        const std::int64_t mag = c < 0 ? -c : c;
        std::vector<std::string> parts;
        if (mag != 1 || (ti == 0 && si == 0)) parts.push_back(std::to_string(mag));
        if (si == 1)
            parts.push_back("s");
        else if (si > 1)
            parts.push_back("s^" + std::to_string(si));
        if (ti == 1)
            parts.push_back("t");
        else if (ti > 1)
            parts.push_back("t^" + std::to_string(ti));
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) os << "*";
            os << parts[i];
        }
    }
    return os.str();
}

} // namespace confhom
