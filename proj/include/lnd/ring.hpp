#ifndef LND_RING_HPP
#define LND_RING_HPP

#include <string>
#include <vector>

#include "lnd/errors.hpp"

namespace lnd {

/// The ambient polynomial ring k[x1..xn, y1..y_{n+1}]. Variables are indexed
/// 0..2n: indices 0..n-1 are x1..xn, indices n..2n are y1..y_{n+1}.
struct RingSpec {
    int n;

    explicit RingSpec(int n_) : n(n_) {
        if (n < 2)
            throw InvalidArgumentError("ring requires n >= 2, got n = " + std::to_string(n));
    }

    int var_count() const { return 2 * n + 1; }

    /// 0-based variable index of x_i, 1 <= i <= n.
    int x_index(int i) const {
        if (i < 1 || i > n)
            throw InvalidArgumentError("x index out of range: " + std::to_string(i));
        return i - 1;
    }

    /// 0-based variable index of y_j, 1 <= j <= n+1.
    int y_index(int j) const {
        if (j < 1 || j > n + 1)
            throw InvalidArgumentError("y index out of range: " + std::to_string(j));
        return n + j - 1;
    }

    bool is_x(int idx) const { return idx >= 0 && idx < n; }
    bool is_y(int idx) const { return idx >= n && idx <= 2 * n; }

    std::string var_name(int idx) const {
        if (is_x(idx)) return "x" + std::to_string(idx + 1);
        if (is_y(idx)) return "y" + std::to_string(idx - n + 1);
        throw InvalidArgumentError("variable index out of range: " + std::to_string(idx));
    }

    friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

/// Per-variable integer weights, length 2n+1.
using WeightVector = std::vector<long>;

/// The weight x1 -> 1, y1 -> 2, y_{n+1} -> 1, all other variables -> 0.
/// Homogeneity under this weight encodes the slice identity i + j + 2q = 2l.
inline WeightVector condition1_weight(const RingSpec& ring) {
    WeightVector w(static_cast<std::size_t>(ring.var_count()), 0L);
    w[static_cast<std::size_t>(ring.x_index(1))]          = 1;
    w[static_cast<std::size_t>(ring.y_index(1))]          = 2;
    w[static_cast<std::size_t>(ring.y_index(ring.n + 1))] = 1;
    return w;
}

/// The weight making the Kuroda derivation homogeneous of degree +1:
/// every variable has weight 1 except y_{n+1}, which has weight n-1.
inline WeightVector derivation_degree_weight(const RingSpec& ring) {
    WeightVector w(static_cast<std::size_t>(ring.var_count()), 1L);
    w[static_cast<std::size_t>(ring.y_index(ring.n + 1))] = ring.n - 1;
    return w;
}

} // namespace lnd

#endif
