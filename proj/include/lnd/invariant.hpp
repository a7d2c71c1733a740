#ifndef LND_INVARIANT_HPP
#define LND_INVARIANT_HPP

#include <string>
#include <vector>

#include "lnd/kernel_gens.hpp"

namespace lnd {

/// One F*H subtraction. F carries the x1 / f_{1,n+1} / f_{i,1} part built
/// from the chosen summand; H is the pure f_{i,j} (i,j >= 2) part.
struct EliminationStep {
    int r;                    // y_{n+1} level being cleared
    int p;                    // x1 level being cleared
    GenProduct summand;       // (c, d, t) from the decomposition of h_{r,p}
    int q_total;              // y1 exponent q_{r,p} of the slice
    std::vector<int> q_split; // q2..qn with sum = q_total
    Polynomial F;
    Polynomial H;
    Polynomial subtracted;    // F * H
};

/// Result of the elimination: G = f_{1,n+1}^ell - sum of subtracted terms,
/// with every y_{n+1} coefficient below the top divisible by x1^{ell-1},
/// and divided = G / x1^{ell-1} = x1 y_{n+1}^ell + lower-order terms.
struct InvariantCertificate {
    RingSpec ring;
    int ell;
    Polynomial G;
    std::vector<EliminationStep> steps;
    Polynomial divided;
};

struct Condition3Record {
    Monomial m;
    long tau_value;
    std::string parity_class; // "i" (odd exponents) or "ii" (even exponents)
    long bound;               // required lower bound for 2 * tau
    bool ok;
};

struct SliceReport {
    int i;
    int j;
    bool condition1_ok; // i + j + 2q = 2*ell on every monomial of the slice
    bool condition2_ok; // j >= i
    std::vector<Condition3Record> condition3_records;
    bool ok() const;
};

struct ConditionReport {
    int ell;
    std::vector<SliceReport> slices;
    bool all_ok() const;
};

/// Greedy split q_i = min(floor(d_i/2), remaining) in index order 2..n.
std::vector<int> choose_q_split(const std::vector<int>& d, int q_total);

/// c * x1^{p-r} * f_{1,n+1}^r * f_{2,1}^{q2}..f_{n,1}^{qn} * x2^{d2-2q2}..xn^{dn-2qn}.
Polynomial make_F(const RingSpec& ring, int p, int r, const Rational& c,
                  const std::vector<int>& d, const std::vector<int>& q_split);

/// Slice-by-slice evaluation of the three elimination conditions on the
/// y_{n+1} coefficients g_0..g_{ell-1}.
ConditionReport check_conditions(const Polynomial& g, int ell);

/// Runs the elimination for n >= 4, ell >= 1. Every intermediate state is
/// checked: kernel membership, the three conditions, preservation of the
/// already-cleared slices, and x1^{ell-1} divisibility of finished levels.
InvariantCertificate build_invariant(int n, int ell);

/// G / x1^{ell-1}, re-verified to lie in the kernel.
Polynomial divided_form(const InvariantCertificate& cert);

/// Names of violated certificate invariants; empty means valid.
std::vector<std::string> certificate_violations(const InvariantCertificate& cert);

} // namespace lnd

#endif
