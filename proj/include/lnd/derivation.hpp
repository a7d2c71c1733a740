#ifndef LND_DERIVATION_HPP
#define LND_DERIVATION_HPP

#include <optional>
#include <vector>

#include "lnd/polynomial.hpp"

namespace lnd {

/// A k-derivation on the ring, given by one image polynomial per variable
/// and extended to all of B by additivity and the Leibniz rule.
class Derivation {
public:
    Derivation(const RingSpec& ring, std::vector<Polynomial> images);

    const RingSpec& ring() const { return ring_; }
    const Polynomial& image(int var_idx) const;

    friend bool operator==(const Derivation& a, const Derivation& b) {
        return a.ring_ == b.ring_ && a.images_ == b.images_;
    }

private:
    RingSpec ring_;
    std::vector<Polynomial> images_;
};

/// delta(x_i) = 0, delta(y_i) = x_i^2 (i <= n), delta(y_{n+1}) = x1..xn.
Derivation kuroda_delta(int n);

bool is_kuroda(const Derivation& d);

Polynomial apply(const Derivation& d, const Polynomial& p);

bool in_kernel(const Derivation& d, const Polynomial& p);

/// Least N with apply^N(p) = 0. For the Kuroda derivation the iteration is
/// capped at (total y-degree of p) + 1; any other derivation needs an
/// explicit cap. Exceeding the cap raises IterationCapError.
int nilpotency_index(const Derivation& d, const Polynomial& p,
                     std::optional<int> iteration_cap = std::nullopt);

} // namespace lnd

#endif
