#ifndef LND_KERNEL_GENS_HPP
#define LND_KERNEL_GENS_HPP

#include <map>
#include <utility>
#include <vector>

#include "lnd/polynomial.hpp"

namespace lnd {

/// One summand c * x2^d2..xn^dn * prod f_{i,j}^{t_{i,j}} of a kernel
/// decomposition. d has length n-1 (exponents of x2..xn); t maps pairs
/// (i,j) with 2 <= i < j <= n to positive exponents.
struct GenProduct {
    Rational c;
    std::vector<int> d;
    std::map<std::pair<int, int>, int> t;

    friend bool operator==(const GenProduct&, const GenProduct&) = default;
};

/// A certificate writing a kernel element of k[x2..xn, y2..yn] as a
/// combination of the generators x_i and f_{i,j}.
struct KernelCombination {
    RingSpec ring;
    std::vector<GenProduct> summands;
};

/// f_{i,j} = x_i^2 y_j - x_j^2 y_i, 1 <= i, j <= n, i != j.
Polynomial f_gen(const RingSpec& ring, int i, int j);

/// f_{1,n+1} = x1 y_{n+1} - x2..xn y1.
Polynomial f_top(int n);

Polynomial expand_product(const RingSpec& ring, const GenProduct& s);
Polynomial expand(const KernelCombination& kc);

/// Decomposes a kernel element of k[x2..xn, y2..yn] into generator
/// products. Deterministic: candidate products are ordered lexicographically
/// in (d, t) and the linear system is solved preferring earlier candidates.
KernelCombination km_decompose(const Polynomial& h);

} // namespace lnd

#endif
