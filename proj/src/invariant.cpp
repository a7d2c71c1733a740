#include "lnd/invariant.hpp"

#include <algorithm>
#include <numeric>

#include "lnd/derivation.hpp"
#include "lnd/errors.hpp"

namespace lnd {

namespace {

Polynomial expand_h(const RingSpec& ring, const GenProduct& s) {
    Polynomial h = Polynomial::constant(ring, 1);
    for (const auto& [pair, t] : s.t)
        h = h * pow(f_gen(ring, pair.first, pair.second), t);
    return h;
}

void step_assertions(const Derivation& delta, const Polynomial& G, int ell, int r, int p,
                     const std::vector<GenProduct>& remaining) {
    const RingSpec& ring = G.ring();

    if (!in_kernel(delta, G))
        throw InvariantViolationError("G left the kernel after an elimination step");
    if (!check_conditions(G, ell).all_ok())
        throw InvariantViolationError("conditions (1)-(3) failed after an elimination step");

    // Levels above r are finished: their coefficients must stay divisible
    // by x1^{ell-1}, and the top coefficient must stay exactly x1^ell.
    if (!(coeff_in_y_last(G, ell) == Polynomial::x_var(ring, 1, ell)))
        throw InvariantViolationError("top y-coefficient of G was disturbed");
    for (int i = r + 1; i <= ell - 1; ++i) {
        const Polynomial g_i = coeff_in_y_last(G, i);
        if (!g_i.is_zero() && g_i.min_exponent(ring.x_index(1)) < ell - 1)
            throw InvariantViolationError("level " + std::to_string(i) +
                                          " lost x1^{ell-1} divisibility");
    }

    // At the current level, slices below p must stay cleared and the slice
    // at p must equal what is left of the decomposition.
    const auto slices = split_by_x1(coeff_in_y_last(G, r));
    Polynomial h_p = Polynomial::zero(ring);
    for (const auto& s : slices) {
        if (s.j < p && s.j <= ell - 2)
            throw InvariantViolationError("slice x1^" + std::to_string(s.j) +
                                          " at level " + std::to_string(r) +
                                          " was disturbed");
        if (s.j == p) h_p = s.h;
    }
    Polynomial rest(ring);
    for (const auto& s : remaining) rest += expand_product(ring, s);
    if (!(h_p == rest))
        throw InvariantViolationError("h_{r,p} does not match the remaining summands");
}

} // namespace

bool SliceReport::ok() const {
    if (!condition1_ok || !condition2_ok) return false;
    for (const auto& rec : condition3_records)
        if (!rec.ok) return false;
    return true;
}

bool ConditionReport::all_ok() const {
    for (const auto& s : slices)
        if (!s.ok()) return false;
    return true;
}

std::vector<int> choose_q_split(const std::vector<int>& d, int q_total) {
    if (q_total < 0)
        throw InvalidArgumentError("negative q_total");
    long budget = 0;
    for (int di : d) {
        if (di < 0)
            throw InvalidArgumentError("negative exponent in d");
        budget += di / 2;
    }
    if (budget < q_total)
        throw InfeasibleError("q split infeasible: sum of floor(d_i/2) = " +
                              std::to_string(budget) + " < q = " + std::to_string(q_total));
    std::vector<int> q(d.size(), 0);
    int remaining = q_total;
    for (std::size_t k = 0; k < d.size() && remaining > 0; ++k) {
        q[k] = std::min(d[k] / 2, remaining);
        remaining -= q[k];
    }
    return q;
}

Polynomial make_F(const RingSpec& ring, int p, int r, const Rational& c,
                  const std::vector<int>& d, const std::vector<int>& q_split) {
    if (r < 0 || p < r)
        throw InvalidArgumentError("make_F requires 0 <= r <= p");
    if (static_cast<int>(d.size()) != ring.n - 1 || q_split.size() != d.size())
        throw InvalidArgumentError("d and q_split must list x2..xn entries");

    Monomial lead = Monomial(ring).times_var(ring.x_index(1), p - r);
    for (int i = 2; i <= ring.n; ++i) {
        const std::size_t k = static_cast<std::size_t>(i - 2);
        if (q_split[k] < 0 || d[k] - 2 * q_split[k] < 0)
            throw InvalidArgumentError("q split violates 0 <= 2q_i <= d_i");
        lead = lead.times_var(ring.x_index(i), d[k] - 2 * q_split[k]);
    }

    Polynomial F = Polynomial::from_monomial(lead, c) * pow(f_top(ring.n), r);
    for (int i = 2; i <= ring.n; ++i) {
        const int qi = q_split[static_cast<std::size_t>(i - 2)];
        if (qi > 0) F = F * pow(f_gen(ring, i, 1), qi);
    }
    return F;
}

ConditionReport check_conditions(const Polynomial& g, int ell) {
    const RingSpec& ring = g.ring();
    const int x1 = ring.x_index(1);
    const int y1 = ring.y_index(1);
    const int y_last = ring.y_index(ring.n + 1);

    ConditionReport report{ell, {}};
    const int top = std::min(ell - 1, y_last_degree(g));
    for (int i = 0; i <= top; ++i) {
        // Slice monomials keep their full form (with y_{n+1}^i) so the tau
        // records match the per-monomial statement.
        std::map<int, std::vector<std::pair<Monomial, Rational>>> by_j;
        for (const auto& [m, c] : g.terms())
            if (m.exp(y_last) == i) by_j[m.exp(x1)].emplace_back(m, c);

        for (const auto& [j, monos] : by_j) {
            SliceReport slice{i, j, true, j >= i, {}};
            for (const auto& [m, c] : monos) {
                if (i + j + 2 * m.exp(y1) != 2 * ell) slice.condition1_ok = false;

                Condition3Record rec{m, tau(m), "", 0, true};
                const bool odd_case = ((ell - 1 - j) % 2) == 0;
                rec.parity_class = odd_case ? "i" : "ii";
                rec.bound = odd_case ? (ell - j - 3) : (ell - j);
                bool parity_ok = true;
                for (int v = 2; v <= ring.n; ++v) {
                    const int a = m.x_exp(v);
                    if (odd_case ? (a % 2 == 0) : (a % 2 == 1)) parity_ok = false;
                }
                rec.ok = parity_ok && 2 * rec.tau_value >= rec.bound;
                slice.condition3_records.push_back(std::move(rec));
            }
            report.slices.push_back(std::move(slice));
        }
    }
    return report;
}

InvariantCertificate build_invariant(int n, int ell) {
    if (n < 4)
        throw NRequirementError("the elimination requires n >= 4, got n = " + std::to_string(n));
    if (ell < 1)
        throw InvalidArgumentError("ell must be >= 1");

    const RingSpec ring(n);
    const Derivation delta = kuroda_delta(n);
    const Polynomial start = pow(f_top(n), ell);

    InvariantCertificate cert{ring, ell, start, {}, Polynomial::zero(ring)};
    Polynomial& G = cert.G;

    for (int r = ell - 2; r >= 0; --r) {
        for (;;) {
            const auto slices = split_by_x1(coeff_in_y_last(G, r));
            const X1Slice* chosen = nullptr;
            for (const auto& s : slices) {
                if (s.j < r)
                    throw InvariantViolationError("slice with x1 exponent " +
                                                  std::to_string(s.j) + " below level " +
                                                  std::to_string(r));
                if (s.j <= ell - 2) {
                    chosen = &s;
                    break;
                }
            }
            if (!chosen) break; // g_r is divisible by x1^{ell-1}

            const int p = chosen->j;
            const int q_total = chosen->q;
            const Polynomial h = chosen->h;
            if (!in_kernel(delta, h))
                throw InvariantViolationError("h_{r,p} is not a kernel element");

            const KernelCombination kcomb = km_decompose(h);
            std::vector<GenProduct> remaining = kcomb.summands;
            for (const auto& s : kcomb.summands) {
                const auto q_split = choose_q_split(s.d, q_total);
                const Polynomial F = make_F(ring, p, r, s.c, s.d, q_split);
                const Polynomial H = expand_h(ring, GenProduct{1, std::vector<int>(
                                                  static_cast<std::size_t>(n - 1), 0), s.t});
                const Polynomial FH = F * H;
                G -= FH;
                remaining.erase(remaining.begin());
                cert.steps.push_back(EliminationStep{r, p, s, q_total, q_split, F, H, FH});
                step_assertions(delta, G, ell, r, p, remaining);
            }
        }
    }

    Polynomial subtracted_total(ring);
    for (const auto& s : cert.steps) subtracted_total += s.subtracted;
    if (!(G == start - subtracted_total))
        throw InvariantViolationError("trace does not re-expand to G");
    if (!(coeff_in_y_last(G, ell) == Polynomial::x_var(ring, 1, ell)))
        throw InvariantViolationError("top y-coefficient of G is not x1^ell");
    for (int i = 0; i <= ell - 1; ++i) {
        const Polynomial g_i = coeff_in_y_last(G, i);
        if (!g_i.is_zero() && g_i.min_exponent(ring.x_index(1)) < ell - 1)
            throw InvariantViolationError("g_" + std::to_string(i) +
                                          " is not divisible by x1^{ell-1}");
    }

    cert.divided = exact_div_x1(G, ell - 1);
    if (!(coeff_in_y_last(cert.divided, ell) == Polynomial::x_var(ring, 1)))
        throw InvariantViolationError("divided form does not start with x1 y^ell");
    if (!in_kernel(delta, cert.divided))
        throw InvariantViolationError("divided form is not a kernel element");
    return cert;
}

Polynomial divided_form(const InvariantCertificate& cert) {
    Polynomial divided = exact_div_x1(cert.G, cert.ell - 1);
    if (!in_kernel(kuroda_delta(cert.ring.n), divided))
        throw InvariantViolationError("divided form is not a kernel element");
    return divided;
}

std::vector<std::string> certificate_violations(const InvariantCertificate& cert) {
    std::vector<std::string> out;
    auto flag = [&out](const std::string& name) {
        if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
    };

    const RingSpec& ring = cert.ring;
    const int ell = cert.ell;
    if (ring.n < 4 || ell < 1) {
        flag("n_requirement");
        return out;
    }
    const Derivation delta = kuroda_delta(ring.n);

    if (!in_kernel(delta, cert.G)) flag("kernel_membership");
    if (!(coeff_in_y_last(cert.G, ell) == Polynomial::x_var(ring, 1, ell)))
        flag("top_coefficient");

    bool divisible = true;
    for (int i = 0; i <= ell - 1; ++i) {
        const Polynomial g_i = coeff_in_y_last(cert.G, i);
        if (!g_i.is_zero() && g_i.min_exponent(ring.x_index(1)) < ell - 1) divisible = false;
    }
    if (!divisible) flag("divisibility");

    if (divisible) {
        if (!(cert.divided == exact_div_x1(cert.G, ell - 1))) flag("divided_form");
        if (!(coeff_in_y_last(cert.divided, ell) == Polynomial::x_var(ring, 1)))
            flag("divided_top");
    }

    if (is_homogeneous(cert.G, condition1_weight(ring)) != std::optional<long>(2L * ell))
        flag("condition_1");
    const int x1 = ring.x_index(1);
    const int y_last = ring.y_index(ring.n + 1);
    for (const auto& [m, c] : cert.G.terms())
        if (m.exp(x1) < m.exp(y_last)) flag("condition_2");

    const auto report = check_conditions(cert.G, ell);
    for (const auto& s : report.slices) {
        if (!s.condition1_ok) flag("condition_1");
        if (!s.condition2_ok) flag("condition_2");
        for (const auto& rec : s.condition3_records)
            if (!rec.ok) flag("condition_3");
    }

    Polynomial subtracted_total(ring);
    for (const auto& s : cert.steps) {
        if (s.r < 0 || s.p < s.r || s.p > ell - 2) flag("step_range");
        const int q_sum =
            std::accumulate(s.q_split.begin(), s.q_split.end(), 0);
        bool split_ok = q_sum == s.q_total &&
                        s.q_split.size() == s.summand.d.size();
        for (std::size_t k = 0; split_ok && k < s.q_split.size(); ++k)
            if (s.q_split[k] < 0 || 2 * s.q_split[k] > s.summand.d[k]) split_ok = false;
        if (!split_ok) {
            flag("step_q_split");
        } else {
            try {
                if (!(s.F == make_F(ring, s.p, s.r, s.summand.c, s.summand.d, s.q_split)))
                    flag("step_f");
            } catch (const Error&) {
                flag("step_f");
            }
        }
        Polynomial H = Polynomial::constant(ring, 1);
        try {
            for (const auto& [pair, t] : s.summand.t)
                H = H * pow(f_gen(ring, pair.first, pair.second), t);
            if (!(s.H == H)) flag("step_h");
        } catch (const Error&) {
            flag("step_h");
        }
        if (!(s.subtracted == s.F * s.H)) flag("step_product");
        subtracted_total += s.subtracted;
    }
    if (!(cert.G == pow(f_top(ring.n), ell) - subtracted_total)) flag("trace_expansion");

    return out;
}

} // namespace lnd
