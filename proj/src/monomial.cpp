#include "lnd/monomial.hpp"

#include <numeric>
#include <string>

#include "lnd/errors.hpp"

namespace lnd {

Monomial::Monomial(const RingSpec& ring, std::vector<int> x_exps, std::vector<int> y_exps)
    : n_(ring.n) {
    if (static_cast<int>(x_exps.size()) != ring.n ||
        static_cast<int>(y_exps.size()) != ring.n + 1)
        throw InvalidArgumentError("monomial exponent vectors must have lengths n and n+1");
    exps_.reserve(static_cast<std::size_t>(ring.var_count()));
    for (int e : x_exps) exps_.push_back(e);
    for (int e : y_exps) exps_.push_back(e);
    for (int e : exps_)
        if (e < 0)
            throw InvalidArgumentError("negative exponent in monomial");
}

long Monomial::total_degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), 0L);
}

long Monomial::y_degree() const {
    return std::accumulate(exps_.begin() + n_, exps_.end(), 0L);
}

bool Monomial::is_one() const {
    for (int e : exps_)
        if (e != 0) return false;
    return true;
}

Monomial Monomial::times(const Monomial& other) const {
    if (n_ != other.n_)
        throw RingMismatchError("monomial product across different rings");
    Monomial r = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
    return r;
}

Monomial Monomial::times_var(int var_idx, int k) const {
    Monomial r = *this;
    int& e = r.exps_.at(static_cast<std::size_t>(var_idx));
    e += k;
    if (e < 0)
        throw InvalidArgumentError("exponent of " + ring().var_name(var_idx) +
                                   " would become negative");
    return r;
}

bool Monomial::divisible_by(const Monomial& other) const {
    if (n_ != other.n_)
        throw RingMismatchError("divisibility across different rings");
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] < other.exps_[i]) return false;
    return true;
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
    const long da = a.total_degree();
    const long db = b.total_degree();
    if (da != db) return da > db;
    return a.exps() > b.exps();
}

long tau(const Monomial& m) {
    long t = 0;
    for (int i = 2; i <= m.n(); ++i) t += m.x_exp(i) / 2;
    for (int j = 1; j <= m.n(); ++j) t -= m.y_exp(j);
    return t;
}

long weight(const Monomial& m, const WeightVector& w) {
    if (static_cast<int>(w.size()) != m.ring().var_count())
        throw InvalidArgumentError("weight vector length must equal 2n+1");
    long acc = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        acc += w[i] * m.exps()[i];
    return acc;
}

} // namespace lnd
