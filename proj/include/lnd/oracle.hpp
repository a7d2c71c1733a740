#ifndef LND_ORACLE_HPP
#define LND_ORACLE_HPP

#include <string>
#include <vector>

#include "lnd/derivation.hpp"
#include "lnd/linalg.hpp"

namespace lnd {

/// Exact basis of the kernel of a derivation restricted to polynomials of
/// bounded total degree (and optionally to a subset of the variables).
struct KernelBasis {
    RingSpec ring;
    int degree_bound;
    std::vector<Polynomial> elements;
};

using VarMask = std::vector<bool>; // length 2n+1

VarMask all_vars_mask(const RingSpec& ring);
/// Builds a mask from names like {"x2","x3","x4","y2","y3","y4"}.
VarMask mask_from_names(const RingSpec& ring, const std::vector<std::string>& names);

/// All monomials of total degree <= bound supported on masked variables,
/// in canonical (descending) order.
std::vector<Monomial> monomials_up_to_degree(const RingSpec& ring, int bound,
                                             const VarMask& mask);

KernelBasis truncated_kernel_basis(const Derivation& d, int degree_bound,
                                   const VarMask& mask);
KernelBasis truncated_kernel_basis(const Derivation& d, int degree_bound);

/// Rank of the derivation's matrix on the same truncated monomial basis;
/// rank + basis size = number of monomials.
int truncated_operator_rank(const Derivation& d, int degree_bound, const VarMask& mask);

using PolyColumn = std::map<Monomial, Rational, MonomialDesc>;
PolyColumn to_column(const Polynomial& p);

/// Exact membership of target in the rational span of gens.
bool in_span(const std::vector<Polynomial>& gens, const Polynomial& target);
int span_rank(const std::vector<Polynomial>& gens);

/// Scales to integer coefficients with content 1 and positive leading
/// coefficient.
Polynomial normalize_primitive(const Polynomial& p);

} // namespace lnd

#endif
