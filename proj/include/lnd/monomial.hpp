#ifndef LND_MONOMIAL_HPP
#define LND_MONOMIAL_HPP

#include <vector>

#include "lnd/ring.hpp"

namespace lnd {

/// A monomial x1^a1..xn^an y1^b1..y_{n+1}^b_{n+1}, stored as one exponent
/// vector of length 2n+1 in variable-index order.
class Monomial {
public:
    explicit Monomial(const RingSpec& ring)
        : n_(ring.n), exps_(static_cast<std::size_t>(ring.var_count()), 0) {}

    Monomial(const RingSpec& ring, std::vector<int> x_exps, std::vector<int> y_exps);

    int n() const { return n_; }
    RingSpec ring() const { return RingSpec(n_); }
    const std::vector<int>& exps() const { return exps_; }

    int exp(int var_idx) const { return exps_.at(static_cast<std::size_t>(var_idx)); }
    int x_exp(int i) const { return exp(ring().x_index(i)); }
    int y_exp(int j) const { return exp(ring().y_index(j)); }

    std::vector<int> x_exps() const { return {exps_.begin(), exps_.begin() + n_}; }
    std::vector<int> y_exps() const { return {exps_.begin() + n_, exps_.end()}; }

    long total_degree() const;
    /// Sum of all y exponents, including y_{n+1}.
    long y_degree() const;

    bool is_one() const;

    Monomial times(const Monomial& other) const;
    /// Multiplies by var^k; k may be negative if the exponent stays >= 0.
    Monomial times_var(int var_idx, int k) const;
    bool divisible_by(const Monomial& other) const;

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.exps_ == b.exps_;
    }

private:
    int n_;
    std::vector<int> exps_;
};

/// Graded lexicographic order, variable precedence x1 > .. > xn > y1 > .. >
/// y_{n+1}. Canonical serialization order is descending.
bool grlex_greater(const Monomial& a, const Monomial& b);

/// Map comparator placing canonically larger monomials first.
struct MonomialDesc {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_greater(a, b); }
};

/// tau(m) = [a2/2] + .. + [an/2] - (b1 + .. + bn); b_{n+1} does not count.
long tau(const Monomial& m);

long weight(const Monomial& m, const WeightVector& w);

} // namespace lnd

#endif
