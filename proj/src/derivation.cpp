#include "lnd/derivation.hpp"

#include <string>

#include "lnd/errors.hpp"

namespace lnd {

Derivation::Derivation(const RingSpec& ring, std::vector<Polynomial> images)
    : ring_(ring), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != ring_.var_count())
        throw InvalidArgumentError("derivation needs one image per variable (2n+1 = " +
                                   std::to_string(ring_.var_count()) + ")");
    for (const auto& img : images_)
        if (!(img.ring() == ring_))
            throw RingMismatchError("derivation image from a different ring");
}

const Polynomial& Derivation::image(int var_idx) const {
    return images_.at(static_cast<std::size_t>(var_idx));
}

Derivation kuroda_delta(int n) {
    RingSpec ring(n);
    std::vector<Polynomial> images;
    images.reserve(static_cast<std::size_t>(ring.var_count()));
    for (int i = 1; i <= n; ++i)
        images.push_back(Polynomial::zero(ring));
    for (int i = 1; i <= n; ++i)
        images.push_back(Polynomial::x_var(ring, i, 2));
    Monomial all_x(ring);
    for (int i = 1; i <= n; ++i) all_x = all_x.times_var(ring.x_index(i), 1);
    images.push_back(Polynomial::from_monomial(all_x));
    return Derivation(ring, std::move(images));
}

bool is_kuroda(const Derivation& d) {
    return d == kuroda_delta(d.ring().n);
}

Polynomial apply(const Derivation& d, const Polynomial& p) {
    if (!(d.ring() == p.ring()))
        throw RingMismatchError("derivation applied to a polynomial from a different ring");
    Polynomial result(p.ring());
    for (const auto& [m, c] : p.terms()) {
        for (int v = 0; v < p.ring().var_count(); ++v) {
            const int e = m.exp(v);
            if (e == 0) continue;
            const Polynomial& img = d.image(v);
            if (img.is_zero()) continue;
            const Polynomial cofactor =
                Polynomial::from_monomial(m.times_var(v, -1), c * e);
            result += cofactor * img;
        }
    }
    return result;
}

bool in_kernel(const Derivation& d, const Polynomial& p) {
    return apply(d, p).is_zero();
}

int nilpotency_index(const Derivation& d, const Polynomial& p,
                     std::optional<int> iteration_cap) {
    long cap;
    if (iteration_cap) {
        cap = *iteration_cap;
        if (cap < 0)
            throw InvalidArgumentError("negative iteration cap");
    } else if (is_kuroda(d)) {
        long ydeg = 0;
        for (const auto& [m, c] : p.terms()) ydeg = std::max(ydeg, m.y_degree());
        cap = ydeg + 1;
    } else {
        throw InvalidArgumentError(
            "nilpotency_index needs an iteration cap for non-Kuroda derivations");
    }

    Polynomial q = p;
    int count = 0;
    while (!q.is_zero()) {
        if (count >= cap)
            throw IterationCapError("derivation did not vanish within " +
                                    std::to_string(cap) + " iterations");
        q = apply(d, q);
        ++count;
    }
    return count;
}

} // namespace lnd
