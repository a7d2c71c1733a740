#include "lnd/oracle.hpp"

#include <algorithm>

#include "lnd/errors.hpp"

namespace lnd {

namespace {

using Solver = linalg::SparseSolver<Monomial, MonomialDesc>;

constexpr long kMonomialBudget = 2'000'000;

void enumerate_rec(const RingSpec& ring, const std::vector<int>& vars, std::size_t idx,
                   int remaining, std::vector<int>& exps, std::vector<Monomial>& out) {
    if (idx == vars.size()) {
        Monomial m(ring);
        for (std::size_t k = 0; k < vars.size(); ++k)
            if (exps[k] > 0) m = m.times_var(vars[k], exps[k]);
        out.push_back(std::move(m));
        return;
    }
    for (int e = 0; e <= remaining; ++e) {
        exps[idx] = e;
        enumerate_rec(ring, vars, idx + 1, remaining - e, exps, out);
    }
    exps[idx] = 0;
}

Solver kernel_solver(const Derivation& d, const std::vector<Monomial>& mons) {
    Solver solver;
    for (const auto& m : mons)
        solver.add_column(to_column(apply(d, Polynomial::from_monomial(m))));
    return solver;
}

} // namespace

VarMask all_vars_mask(const RingSpec& ring) {
    return VarMask(static_cast<std::size_t>(ring.var_count()), true);
}

VarMask mask_from_names(const RingSpec& ring, const std::vector<std::string>& names) {
    VarMask mask(static_cast<std::size_t>(ring.var_count()), false);
    for (const auto& name : names) {
        if (name.size() < 2 || (name[0] != 'x' && name[0] != 'y'))
            throw InvalidArgumentError("bad variable name '" + name + "'");
        int idx;
        try {
            idx = std::stoi(name.substr(1));
        } catch (const std::exception&) {
            throw InvalidArgumentError("bad variable name '" + name + "'");
        }
        mask[static_cast<std::size_t>(name[0] == 'x' ? ring.x_index(idx)
                                                     : ring.y_index(idx))] = true;
    }
    return mask;
}

std::vector<Monomial> monomials_up_to_degree(const RingSpec& ring, int bound,
                                             const VarMask& mask) {
    if (bound < 0)
        throw InvalidArgumentError("negative degree bound");
    if (static_cast<int>(mask.size()) != ring.var_count())
        throw InvalidArgumentError("variable mask length must equal 2n+1");

    std::vector<int> vars;
    for (int v = 0; v < ring.var_count(); ++v)
        if (mask[static_cast<std::size_t>(v)]) vars.push_back(v);

    // C(bound + k, k) monomials; refuse sizes the exact solver cannot handle.
    long count = 1;
    for (std::size_t i = 1; i <= vars.size(); ++i) {
        count = count * (bound + static_cast<long>(i)) / static_cast<long>(i);
        if (count > kMonomialBudget)
            throw InvalidArgumentError("degree bound too large for exact enumeration");
    }

    std::vector<Monomial> out;
    out.reserve(static_cast<std::size_t>(count));
    std::vector<int> exps(vars.size(), 0);
    enumerate_rec(ring, vars, 0, bound, exps, out);
    std::sort(out.begin(), out.end(), grlex_greater);
    return out;
}

PolyColumn to_column(const Polynomial& p) {
    PolyColumn col;
    for (const auto& [m, c] : p.terms()) col.emplace(m, c);
    return col;
}

Polynomial normalize_primitive(const Polynomial& p) {
    if (p.is_zero()) return p;
    Integer l = 1;
    for (const auto& [m, c] : p.terms())
        l = boost::multiprecision::lcm(l, denominator(c));
    Integer g = 0;
    for (const auto& [m, c] : p.terms()) {
        g = boost::multiprecision::gcd(g, Integer(numerator(c) * (l / denominator(c))));
        if (g == 1) break;
    }
    Rational scale(l, g);
    if (p.terms().begin()->second < 0) scale = -scale;
    return scale * p;
}

KernelBasis truncated_kernel_basis(const Derivation& d, int degree_bound,
                                   const VarMask& mask) {
    const auto mons = monomials_up_to_degree(d.ring(), degree_bound, mask);
    Solver solver = kernel_solver(d, mons);

    std::vector<Polynomial> elements;
    for (const auto& vec : solver.nullspace()) {
        Polynomial p(d.ring());
        for (const auto& [idx, c] : vec)
            p.add_term(mons[static_cast<std::size_t>(idx)], c);
        elements.push_back(normalize_primitive(p));
    }
    std::stable_sort(elements.begin(), elements.end(),
                     [](const Polynomial& a, const Polynomial& b) {
                         return grlex_greater(a.leading_monomial(), b.leading_monomial());
                     });
    return KernelBasis{d.ring(), degree_bound, std::move(elements)};
}

KernelBasis truncated_kernel_basis(const Derivation& d, int degree_bound) {
    return truncated_kernel_basis(d, degree_bound, all_vars_mask(d.ring()));
}

int truncated_operator_rank(const Derivation& d, int degree_bound, const VarMask& mask) {
    const auto mons = monomials_up_to_degree(d.ring(), degree_bound, mask);
    return kernel_solver(d, mons).rank();
}

bool in_span(const std::vector<Polynomial>& gens, const Polynomial& target) {
    Solver solver;
    for (const auto& g : gens) solver.add_column(to_column(g));
    return solver.solve(to_column(target)).has_value();
}

int span_rank(const std::vector<Polynomial>& gens) {
    Solver solver;
    for (const auto& g : gens) solver.add_column(to_column(g));
    return solver.rank();
}

} // namespace lnd
