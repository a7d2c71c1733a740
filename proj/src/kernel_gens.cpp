#include "lnd/kernel_gens.hpp"

#include <algorithm>
#include <string>

#include "lnd/derivation.hpp"
#include "lnd/errors.hpp"
#include "lnd/linalg.hpp"
#include "lnd/oracle.hpp"

namespace lnd {

namespace {

std::vector<std::pair<int, int>> index_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 2; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            pairs.emplace_back(i, j);
    return pairs;
}

struct Candidate {
    std::vector<int> d;    // size n-1
    std::vector<int> tvec; // aligned with index_pairs(n)
};

bool candidate_less(const Candidate& a, const Candidate& b) {
    if (a.d != b.d) return a.d < b.d;
    return a.tvec < b.tvec;
}

/// All (d, t) with sum(t) = y_deg and d_i = md_i - 2 * load_i >= 0, where
/// load_i is the total f-exponent attached to variable i.
void enumerate_candidates(const std::vector<std::pair<int, int>>& pairs, std::size_t idx,
                          int remaining, const std::vector<int>& md, std::vector<int>& load,
                          std::vector<int>& tvec, std::vector<Candidate>& out) {
    if (idx == pairs.size()) {
        if (remaining != 0) return;
        Candidate cand;
        cand.d.reserve(md.size());
        for (std::size_t k = 0; k < md.size(); ++k)
            cand.d.push_back(md[k] - 2 * load[k]);
        cand.tvec = tvec;
        out.push_back(std::move(cand));
        return;
    }
    const auto [i, j] = pairs[idx];
    const std::size_t ki = static_cast<std::size_t>(i - 2);
    const std::size_t kj = static_cast<std::size_t>(j - 2);
    const int cap = std::min({remaining, (md[ki] - 2 * load[ki]) / 2,
                              (md[kj] - 2 * load[kj]) / 2});
    for (int t = 0; t <= cap; ++t) {
        tvec[idx] = t;
        load[ki] += t;
        load[kj] += t;
        enumerate_candidates(pairs, idx + 1, remaining - t, md, load, tvec, out);
        load[ki] -= t;
        load[kj] -= t;
    }
    tvec[idx] = 0;
}

GenProduct to_product(const std::vector<std::pair<int, int>>& pairs, const Candidate& cand,
                      const Rational& c) {
    GenProduct s;
    s.c = c;
    s.d = cand.d;
    for (std::size_t k = 0; k < pairs.size(); ++k)
        if (cand.tvec[k] > 0) s.t.emplace(pairs[k], cand.tvec[k]);
    return s;
}

std::vector<int> t_vector(const std::vector<std::pair<int, int>>& pairs, const GenProduct& s) {
    std::vector<int> tvec(pairs.size(), 0);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        auto it = s.t.find(pairs[k]);
        if (it != s.t.end()) tvec[k] = it->second;
    }
    return tvec;
}

} // namespace

Polynomial f_gen(const RingSpec& ring, int i, int j) {
    if (i < 1 || i > ring.n || j < 1 || j > ring.n)
        throw InvalidArgumentError("f_{i,j} indices must lie in 1.." + std::to_string(ring.n));
    if (i == j)
        throw InvalidArgumentError("f_{i,j} requires i != j");
    Monomial a = Monomial(ring).times_var(ring.x_index(i), 2).times_var(ring.y_index(j), 1);
    Monomial b = Monomial(ring).times_var(ring.x_index(j), 2).times_var(ring.y_index(i), 1);
    Polynomial p(ring);
    p.add_term(a, 1);
    p.add_term(b, -1);
    return p;
}

Polynomial f_top(int n) {
    RingSpec ring(n);
    Monomial a = Monomial(ring).times_var(ring.x_index(1), 1).times_var(ring.y_index(n + 1), 1);
    Monomial b = Monomial(ring).times_var(ring.y_index(1), 1);
    for (int i = 2; i <= n; ++i) b = b.times_var(ring.x_index(i), 1);
    Polynomial p(ring);
    p.add_term(a, 1);
    p.add_term(b, -1);
    return p;
}

Polynomial expand_product(const RingSpec& ring, const GenProduct& s) {
    if (static_cast<int>(s.d.size()) != ring.n - 1)
        throw InvalidArgumentError("d must list exponents for x2..xn");
    Monomial xpart(ring);
    for (int i = 2; i <= ring.n; ++i) {
        const int e = s.d[static_cast<std::size_t>(i - 2)];
        if (e < 0)
            throw InvalidArgumentError("negative exponent in d");
        xpart = xpart.times_var(ring.x_index(i), e);
    }
    Polynomial result = Polynomial::from_monomial(xpart, s.c);
    for (const auto& [pair, t] : s.t) {
        if (t <= 0)
            throw InvalidArgumentError("f exponents must be positive");
        result = result * pow(f_gen(ring, pair.first, pair.second), t);
    }
    return result;
}

Polynomial expand(const KernelCombination& kc) {
    Polynomial acc(kc.ring);
    for (const auto& s : kc.summands) acc += expand_product(kc.ring, s);
    return acc;
}

KernelCombination km_decompose(const Polynomial& h) {
    const RingSpec& ring = h.ring();
    const int n = ring.n;

    for (const auto& [m, c] : h.terms()) {
        if (m.x_exp(1) != 0 || m.y_exp(1) != 0 || m.y_exp(n + 1) != 0)
            throw UnsupportedVariablesError(
                "decomposition input must avoid x1, y1 and y" + std::to_string(n + 1) +
                "; offending term: " + Polynomial::from_monomial(m, c).str());
    }
    if (!in_kernel(kuroda_delta(n), h))
        throw NotInKernelError("decomposition input is not a kernel element");

    KernelCombination kc{ring, {}};
    if (h.is_zero()) return kc;

    // Group terms by the invariant the generators preserve: md_i = a_i + 2 b_i
    // for i = 2..n, together with the total y-degree.
    std::map<std::pair<std::vector<int>, int>, Polynomial> groups;
    for (const auto& [m, c] : h.terms()) {
        std::vector<int> md;
        md.reserve(static_cast<std::size_t>(n - 1));
        int ydeg = 0;
        for (int i = 2; i <= n; ++i) {
            md.push_back(m.x_exp(i) + 2 * m.y_exp(i));
            ydeg += m.y_exp(i);
        }
        groups.try_emplace({std::move(md), ydeg}, Polynomial::zero(ring))
            .first->second.add_term(m, c);
    }

    const auto pairs = index_pairs(n);
    for (const auto& [key, part] : groups) {
        const auto& [md, ydeg] = key;
        std::vector<Candidate> candidates;
        std::vector<int> load(md.size(), 0);
        std::vector<int> tvec(pairs.size(), 0);
        enumerate_candidates(pairs, 0, ydeg, md, load, tvec, candidates);
        std::sort(candidates.begin(), candidates.end(), candidate_less);
        if (candidates.empty())
            throw DecompositionFailedError("no candidate products for a kernel component");

        linalg::SparseSolver<Monomial, MonomialDesc> solver;
        for (const auto& cand : candidates)
            solver.add_column(to_column(expand_product(ring, to_product(pairs, cand, 1))));
        const auto sol = solver.solve(to_column(part));
        if (!sol)
            throw DecompositionFailedError("kernel component outside the generator span");
        for (const auto& [idx, c] : *sol)
            kc.summands.push_back(to_product(pairs, candidates[static_cast<std::size_t>(idx)], c));
    }

    std::sort(kc.summands.begin(), kc.summands.end(),
              [&pairs](const GenProduct& a, const GenProduct& b) {
                  if (a.d != b.d) return a.d < b.d;
                  return t_vector(pairs, a) < t_vector(pairs, b);
              });
    return kc;
}

} // namespace lnd
