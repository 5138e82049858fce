#include "confhom/rank.hpp"

#include "confhom/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <vector>

namespace confhom {

namespace {

// Fraction-free (Bareiss) elimination with Markowitz pivoting.
//
// Invariant: after t pivots p_1..p_t, the fully updated value of a remaining
// entry is an integer (a bordered (t+1)x(t+1) minor of the integerized
// matrix). Rows not touched by a pivot step only need the scalar update
// a <- a * p_t / p_{t-1}, which telescopes; so each row stores the pivot
// value `last` at its most recent materialization and is brought up to date
// lazily with one exact multiply-divide per entry.
class BareissEliminator {
public:
    explicit BareissEliminator(const RationalSparseMatrix& m) : rows_(m.rows()) {
        // Clear denominators column-wise; the rank is unchanged.
        std::vector<Integer> col_lcm(m.cols(), 1);
        for (const auto& [key, value] : m.entries()) {
            Integer l;
            mpz_lcm(l.get_mpz_t(), col_lcm[key.second].get_mpz_t(),
                    value.get_den().get_mpz_t());
            col_lcm[key.second] = l;
        }
        for (const auto& [key, value] : m.entries()) {
            Integer scaled = value.get_num() * (col_lcm[key.second] / value.get_den());
            rows_[key.first].emplace(key.second, std::move(scaled));
        }
        last_.assign(m.rows(), Integer(1));
        alive_.assign(m.rows(), true);
    }

    int run() {
        int rank = 0;
        Integer prev(1);
        while (true) {
            const auto pivot = select_pivot();
            if (pivot.first < 0) break;
            const auto [pr, pc] = pivot;

            materialize(pr, prev);
            const Integer p = rows_[pr][pc];

            for (int r = 0; r < static_cast<int>(rows_.size()); ++r) {
                if (!alive_[r] || r == pr) continue;
                auto hit = rows_[r].find(pc);
                if (hit == rows_[r].end()) continue; // lazily scaled via last_ instead
                materialize(r, prev);
                const Integer factor = rows_[r][pc];
                // a_rj <- (p * a_rj - factor * a_pj) / prev, exact by the minor identity.
                for (const auto& [j, pivot_entry] : rows_[pr]) {
                    auto it = rows_[r].find(j);
                    Integer current = (it == rows_[r].end()) ? Integer(0) : it->second;
                    Integer next = p * current - factor * pivot_entry;
                    mpz_divexact(next.get_mpz_t(), next.get_mpz_t(), prev.get_mpz_t());
                    if (next == 0) {
                        if (it != rows_[r].end()) rows_[r].erase(it);
                    } else if (it != rows_[r].end()) {
                        it->second = std::move(next);
                    } else {
                        rows_[r].emplace(j, std::move(next));
                    }
                }
                // Columns outside the pivot row's support scale by p/prev.
                for (auto it = rows_[r].begin(); it != rows_[r].end();) {
                    if (!rows_[pr].count(it->first)) {
                        Integer next = p * it->second;
                        mpz_divexact(next.get_mpz_t(), next.get_mpz_t(), prev.get_mpz_t());
                        it->second = std::move(next);
                    }
                    ++it;
                }
                last_[r] = p;
            }

            alive_[pr] = false;
            rows_[pr].clear();
            prev = p;
            ++rank;
        }
        return rank;
    }

private:
    void materialize(int r, const Integer& prev) {
        if (last_[r] == prev) return;
        for (auto& [col, value] : rows_[r]) {
            (void)col;
            Integer next = value * prev;
            mpz_divexact(next.get_mpz_t(), next.get_mpz_t(), last_[r].get_mpz_t());
            value = std::move(next);
        }
        last_[r] = prev;
    }

    std::pair<int, int> select_pivot() const {
        std::map<int, int> col_count;
        for (int r = 0; r < static_cast<int>(rows_.size()); ++r) {
            if (!alive_[r]) continue;
            for (const auto& [col, value] : rows_[r]) {
                (void)value;
                ++col_count[col];
            }
        }
        long best_cost = -1;
        std::pair<int, int> best{-1, -1};
        for (int r = 0; r < static_cast<int>(rows_.size()); ++r) {
            if (!alive_[r]) continue;
            const long row_nnz = static_cast<long>(rows_[r].size());
            for (const auto& [col, value] : rows_[r]) {
                (void)value;
                const long cost = (row_nnz - 1) * (col_count.at(col) - 1);
                if (best_cost < 0 || cost < best_cost ||
                    (cost == best_cost && std::make_pair(col, r) <
                                              std::make_pair(best.second, best.first))) {
                    best_cost = cost;
                    best = {r, col};
                }
            }
        }
        return best;
    }

    std::vector<std::map<int, Integer>> rows_;
    std::vector<Integer> last_;
    std::vector<char> alive_;
};

} // namespace

int rank(const RationalSparseMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0 || m.nonzeros() == 0) return 0;
    return BareissEliminator(m).run();
}

int kernel_dim(const RationalSparseMatrix& m) { return m.cols() - rank(m); }

int rank_modular(const RationalSparseMatrix& m, std::uint32_t p) {
    auto pow_mod = [&](std::uint64_t base, std::uint64_t exp) {
        std::uint64_t acc = 1;
        base %= p;
        while (exp) {
            if (exp & 1) acc = acc * base % p;
            base = base * base % p;
            exp >>= 1;
        }
        return acc;
    };
    auto to_mod = [&](const Rational& value) -> std::uint64_t {
        const Integer num_mod = value.get_num() % static_cast<long>(p);
        const Integer den_mod = value.get_den() % static_cast<long>(p);
        if (den_mod == 0) throw compute_error("modular rank: prime divides a denominator");
        std::uint64_t n = mpz_get_ui(Integer(num_mod >= 0 ? num_mod
                                                          : num_mod + static_cast<long>(p))
                                         .get_mpz_t());
        std::uint64_t d = mpz_get_ui(den_mod.get_mpz_t());
        return n * pow_mod(d, p - 2) % p;
    };

    std::vector<std::map<int, std::uint64_t>> rows(m.rows());
    for (const auto& [key, value] : m.entries()) {
        const std::uint64_t v = to_mod(value);
        if (v != 0) rows[key.first][key.second] = v;
    }
    int rank = 0;
    for (int col = 0; col < m.cols(); ++col) {
        int pivot = -1;
        for (int r = 0; r < m.rows(); ++r)
            if (!rows[r].empty() && rows[r].count(col)) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        const std::uint64_t inv = pow_mod(rows[pivot][col], p - 2);
        for (int r = 0; r < m.rows(); ++r) {
            if (r == pivot) continue;
            auto hit = rows[r].find(col);
            if (hit == rows[r].end()) continue;
            const std::uint64_t factor = hit->second * inv % p;
            for (const auto& [j, value] : rows[pivot]) {
                std::uint64_t sub = factor * value % p;
                auto it = rows[r].find(j);
                std::uint64_t next = ((it == rows[r].end() ? 0 : it->second) + p - sub) % p;
                if (next == 0) {
                    if (it != rows[r].end()) rows[r].erase(it);
                } else if (it != rows[r].end()) {
                    it->second = next;
                } else {
                    rows[r][j] = next;
                }
            }
        }
        rows[pivot].clear();
        ++rank;
    }
    return rank;
}

} // namespace confhom
