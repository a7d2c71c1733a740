#ifndef LND_DELTA_MODULE_HPP
#define LND_DELTA_MODULE_HPP

#include <map>
#include <string>
#include <vector>

#include "lnd/derivation.hpp"

namespace lnd {

/// Element of the free module with basis dx1..dxn, dy1..dy_{n+1}; basis
/// symbols share the 0..2n variable indexing. No zero coefficient is stored.
class FreeModuleElement {
public:
    explicit FreeModuleElement(const RingSpec& ring) : ring_(ring) {}

    const RingSpec& ring() const { return ring_; }
    const std::map<int, Polynomial>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of the given basis symbol (zero polynomial if absent).
    Polynomial coeff(int basis_idx) const;

    void add(int basis_idx, const Polynomial& p);

    FreeModuleElement& operator+=(const FreeModuleElement& other);
    FreeModuleElement& operator-=(const FreeModuleElement& other);
    friend FreeModuleElement operator+(FreeModuleElement a, const FreeModuleElement& b) {
        return a += b;
    }
    friend FreeModuleElement operator-(FreeModuleElement a, const FreeModuleElement& b) {
        return a -= b;
    }
    /// Module scalar multiplication by a ring element.
    friend FreeModuleElement operator*(const Polynomial& b, const FreeModuleElement& e);
    friend bool operator==(const FreeModuleElement& a, const FreeModuleElement& b) {
        return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
    }

    std::string str() const;

private:
    RingSpec ring_;
    std::map<int, Polynomial> coeffs_;
};

/// "dx1".."dxn", "dy1".."dy_{n+1}".
std::string basis_symbol_name(const RingSpec& ring, int basis_idx);

/// A module derivation on the free module, given by images of the basis
/// symbols and extended by delta_M(b m) = delta(b) m + b delta_M(m).
class ModuleDerivation {
public:
    ModuleDerivation(Derivation base, std::vector<FreeModuleElement> basis_images);

    const Derivation& base() const { return base_; }
    const RingSpec& ring() const { return base_.ring(); }
    const FreeModuleElement& basis_image(int basis_idx) const;

private:
    Derivation base_;
    std::vector<FreeModuleElement> basis_images_;
};

/// d(p) = sum of dp/dv dv over all variables.
FreeModuleElement differential(const Polynomial& p);

/// The natural structure on the differential module for the Kuroda
/// derivation: dx_i -> 0, dy_i -> 2 x_i dx_i, dy_{n+1} -> sum over i of
/// (x1..xn / x_i) dx_i.
ModuleDerivation omega_derivation(int n);

FreeModuleElement apply_md(const ModuleDerivation& dm, const FreeModuleElement& e);

struct M0Report {
    FreeModuleElement element;
    FreeModuleElement image;
    bool in_m0;
};

M0Report in_m0(const ModuleDerivation& dm, const FreeModuleElement& e);

/// differential(divided_form(build_invariant(n, ell))); always lies in M0.
FreeModuleElement invariant_differential(int n, int ell);

/// Exact basis of Ker delta_M restricted to elements whose polynomial
/// coefficients have total degree <= bound.
std::vector<FreeModuleElement> truncated_m0_basis(const ModuleDerivation& dm,
                                                  int degree_bound);

/// apply_md(dm, d p) == d(apply(d, p)) — the defining commuting square.
bool commutes_check(const Derivation& d, const ModuleDerivation& dm, const Polynomial& p);

} // namespace lnd

#endif
