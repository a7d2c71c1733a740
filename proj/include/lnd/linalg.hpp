#ifndef LND_LINALG_HPP
#define LND_LINALG_HPP

#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "lnd/rational.hpp"

namespace lnd::linalg {

/// Reduced row echelon form with unit pivots. Elimination is fraction-free:
/// rows are cleared to primitive integer vectors and combined by
/// cross-multiplication, with content removed after each step; division
/// only happens in the final normalization.
struct Rref {
    std::vector<std::vector<Rational>> rows;
    std::vector<int> pivot_cols;
    int rank() const { return static_cast<int>(pivot_cols.size()); }
};

namespace detail {

inline Integer row_content(const std::vector<Integer>& row) {
    Integer g = 0;
    for (const auto& v : row) {
        g = boost::multiprecision::gcd(g, v);
        if (g == 1) break;
    }
    return g;
}

inline void make_primitive(std::vector<Integer>& row) {
    const Integer g = row_content(row);
    if (g > 1)
        for (auto& v : row) v /= g;
}

} // namespace detail

inline Rref rref(const std::vector<std::vector<Rational>>& input, int cols) {
    std::vector<std::vector<Integer>> rows;
    rows.reserve(input.size());
    for (const auto& r : input) {
        Integer l = 1;
        for (const auto& v : r) l = boost::multiprecision::lcm(l, denominator(v));
        std::vector<Integer> ir(static_cast<std::size_t>(cols));
        for (int j = 0; j < cols; ++j)
            ir[static_cast<std::size_t>(j)] =
                numerator(r[static_cast<std::size_t>(j)]) *
                (l / denominator(r[static_cast<std::size_t>(j)]));
        detail::make_primitive(ir);
        rows.push_back(std::move(ir));
    }

    const int nrows = static_cast<int>(rows.size());
    std::vector<int> pivots;
    int rank = 0;
    // Pivot order is fixed: first eligible column, first nonzero row.
    for (int col = 0; col < cols && rank < nrows; ++col) {
        int sel = -1;
        for (int i = rank; i < nrows; ++i)
            if (rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(sel)]);
        auto& prow = rows[static_cast<std::size_t>(rank)];
        for (int i = rank + 1; i < nrows; ++i) {
            auto& row = rows[static_cast<std::size_t>(i)];
            const Integer b = row[static_cast<std::size_t>(col)];
            if (b == 0) continue;
            const Integer a = prow[static_cast<std::size_t>(col)];
            for (int j = 0; j < cols; ++j)
                row[static_cast<std::size_t>(j)] =
                    row[static_cast<std::size_t>(j)] * a -
                    prow[static_cast<std::size_t>(j)] * b;
            detail::make_primitive(row);
        }
        pivots.push_back(col);
        ++rank;
    }

    for (int r = rank - 1; r >= 0; --r) {
        const auto pc = static_cast<std::size_t>(pivots[static_cast<std::size_t>(r)]);
        const auto& prow = rows[static_cast<std::size_t>(r)];
        for (int i = 0; i < r; ++i) {
            auto& row = rows[static_cast<std::size_t>(i)];
            const Integer b = row[pc];
            if (b == 0) continue;
            const Integer a = prow[pc];
            for (int j = 0; j < cols; ++j)
                row[static_cast<std::size_t>(j)] =
                    row[static_cast<std::size_t>(j)] * a -
                    prow[static_cast<std::size_t>(j)] * b;
            detail::make_primitive(row);
        }
    }

    Rref out;
    out.pivot_cols = pivots;
    out.rows.reserve(static_cast<std::size_t>(rank));
    for (int r = 0; r < rank; ++r) {
        const auto& row = rows[static_cast<std::size_t>(r)];
        const Integer piv = row[static_cast<std::size_t>(pivots[static_cast<std::size_t>(r)])];
        std::vector<Rational> rr(static_cast<std::size_t>(cols));
        for (int j = 0; j < cols; ++j)
            rr[static_cast<std::size_t>(j)] = Rational(row[static_cast<std::size_t>(j)], piv);
        out.rows.push_back(std::move(rr));
    }
    return out;
}

/// Nullspace basis in free-variable form: one vector per non-pivot column f
/// with v[f] = 1 and v[pivot] = -rref entry.
inline std::vector<std::vector<Rational>> nullspace_from_rref(const Rref& r, int cols) {
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int c : r.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        std::vector<Rational> v(static_cast<std::size_t>(cols), Rational(0));
        v[static_cast<std::size_t>(f)] = 1;
        for (std::size_t k = 0; k < r.pivot_cols.size(); ++k)
            v[static_cast<std::size_t>(r.pivot_cols[k])] = -r.rows[k][static_cast<std::size_t>(f)];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Linear maps out of a basis indexed by an ordered key type. Columns are
/// images of source basis elements; rows are target keys. The system is
/// split into connected components so each exact elimination stays small.
template <typename RowKey, typename RowLess>
class SparseSolver {
public:
    using Column = std::map<RowKey, Rational, RowLess>;

    int add_column(Column col) {
        columns_.push_back(std::move(col));
        return static_cast<int>(columns_.size()) - 1;
    }

    int column_count() const { return static_cast<int>(columns_.size()); }

    std::vector<std::map<int, Rational>> nullspace() const {
        std::vector<std::map<int, Rational>> out;
        for (const auto& comp : components()) {
            const auto keys = component_keys(comp);
            const auto r = rref(dense_rows(comp, keys, nullptr), static_cast<int>(comp.size()));
            for (const auto& v : nullspace_from_rref(r, static_cast<int>(comp.size()))) {
                std::map<int, Rational> vec;
                for (std::size_t k = 0; k < comp.size(); ++k)
                    if (v[k] != 0) vec.emplace(comp[k], v[k]);
                out.push_back(std::move(vec));
            }
        }
        return out;
    }

    /// Coefficients with every free variable fixed to zero (earlier columns
    /// are preferred as pivots), or nullopt if the target is not in the span.
    std::optional<std::map<int, Rational>> solve(const Column& target) const {
        std::map<int, Rational> out;
        if (target.empty()) return out;

        const auto comps = components();
        std::map<RowKey, int, RowLess> key_comp(target.key_comp());
        for (std::size_t ci = 0; ci < comps.size(); ++ci)
            for (int col : comps[ci])
                for (const auto& [key, val] : columns_[static_cast<std::size_t>(col)])
                    key_comp.emplace(key, static_cast<int>(ci));

        std::map<int, Column> split;
        for (const auto& [key, val] : target) {
            auto it = key_comp.find(key);
            if (it == key_comp.end()) return std::nullopt; // row hit by no column
            split.try_emplace(it->second, target.key_comp())
                .first->second.emplace(key, val);
        }

        for (const auto& [ci, sub] : split) {
            const auto& comp = comps[static_cast<std::size_t>(ci)];
            auto keys = component_keys(comp);
            for (const auto& [key, val] : sub) keys.insert(key);
            const int cols = static_cast<int>(comp.size());
            const auto r = rref(dense_rows(comp, keys, &sub), cols + 1);
            for (std::size_t k = 0; k < r.pivot_cols.size(); ++k) {
                if (r.pivot_cols[k] == cols) return std::nullopt; // inconsistent
                const Rational& v = r.rows[k][static_cast<std::size_t>(cols)];
                if (v != 0) out.emplace(comp[static_cast<std::size_t>(r.pivot_cols[k])], v);
            }
        }
        return out;
    }

    int rank() const {
        int total = 0;
        for (const auto& comp : components()) {
            const auto keys = component_keys(comp);
            total += rref(dense_rows(comp, keys, nullptr), static_cast<int>(comp.size())).rank();
        }
        return total;
    }

private:
    std::vector<Column> columns_;

    int find(std::vector<int>& parent, int a) const {
        while (parent[static_cast<std::size_t>(a)] != a) {
            parent[static_cast<std::size_t>(a)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            a = parent[static_cast<std::size_t>(a)];
        }
        return a;
    }

    std::vector<std::vector<int>> components() const {
        const int n = column_count();
        std::vector<int> parent(static_cast<std::size_t>(n));
        std::iota(parent.begin(), parent.end(), 0);
        if (n > 0) {
            std::map<RowKey, int, RowLess> owner(columns_.front().key_comp());
            for (int c = 0; c < n; ++c)
                for (const auto& [key, val] : columns_[static_cast<std::size_t>(c)]) {
                    auto [it, inserted] = owner.emplace(key, c);
                    if (!inserted) {
                        const int ra = find(parent, c);
                        const int rb = find(parent, it->second);
                        if (ra != rb) parent[static_cast<std::size_t>(std::max(ra, rb))] =
                            std::min(ra, rb);
                    }
                }
        }
        std::map<int, std::vector<int>> by_root;
        for (int c = 0; c < n; ++c) by_root[find(parent, c)].push_back(c);
        std::vector<std::vector<int>> comps;
        comps.reserve(by_root.size());
        for (auto& [root, cols] : by_root) comps.push_back(std::move(cols));
        return comps;
    }

    std::set<RowKey, RowLess> component_keys(const std::vector<int>& comp) const {
        std::set<RowKey, RowLess> keys(columns_.empty()
                                           ? RowLess()
                                           : columns_.front().key_comp());
        for (int col : comp)
            for (const auto& [key, val] : columns_[static_cast<std::size_t>(col)])
                keys.insert(key);
        return keys;
    }

    std::vector<std::vector<Rational>> dense_rows(const std::vector<int>& comp,
                                                  const std::set<RowKey, RowLess>& keys,
                                                  const Column* extra) const {
        const int cols = static_cast<int>(comp.size()) + (extra ? 1 : 0);
        std::vector<std::vector<Rational>> rows;
        rows.reserve(keys.size());
        for (const auto& key : keys) {
            std::vector<Rational> row(static_cast<std::size_t>(cols), Rational(0));
            for (std::size_t k = 0; k < comp.size(); ++k) {
                const auto& col = columns_[static_cast<std::size_t>(comp[k])];
                auto it = col.find(key);
                if (it != col.end()) row[k] = it->second;
            }
            if (extra) {
                auto it = extra->find(key);
                if (it != extra->end()) row[comp.size()] = it->second;
            }
            rows.push_back(std::move(row));
        }
        return rows;
    }
};

} // namespace lnd::linalg

#endif
