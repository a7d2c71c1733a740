#include "lnd/polynomial.hpp"

#include <sstream>

#include "lnd/errors.hpp"

namespace lnd {

namespace {

void require_same_ring(const RingSpec& a, const RingSpec& b, const char* op) {
    if (!(a == b))
        throw RingMismatchError(std::string(op) + " across different rings (n = " +
                                std::to_string(a.n) + " vs " + std::to_string(b.n) + ")");
}

} // namespace

Polynomial Polynomial::constant(const RingSpec& ring, const Rational& c) {
    Polynomial p(ring);
    p.add_term(Monomial(ring), c);
    return p;
}

Polynomial Polynomial::from_monomial(const Monomial& m, const Rational& c) {
    Polynomial p(m.ring());
    p.add_term(m, c);
    return p;
}

Polynomial Polynomial::x_var(const RingSpec& ring, int i, int exp) {
    return from_monomial(Monomial(ring).times_var(ring.x_index(i), exp));
}

Polynomial Polynomial::y_var(const RingSpec& ring, int j, int exp) {
    return from_monomial(Monomial(ring).times_var(ring.y_index(j), exp));
}

long Polynomial::total_degree() const {
    long d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty())
        throw InvalidArgumentError("leading monomial of the zero polynomial");
    return terms_.begin()->first;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::min_exponent(int var_idx) const {
    int best = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const int e = m.exp(var_idx);
        if (first || e < best) best = e;
        first = false;
    }
    return best;
}

int Polynomial::max_exponent(int var_idx) const {
    int best = 0;
    for (const auto& [m, c] : terms_) best = std::max(best, m.exp(var_idx));
    return best;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (m.n() != ring_.n)
        throw RingMismatchError("term from a different ring");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    require_same_ring(ring_, other.ring_, "addition");
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    require_same_ring(ring_, other.ring_, "subtraction");
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring_, b.ring_, "multiplication");
    Polynomial r(a.ring_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term(ma.times(mb), ca * cb);
    return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    Polynomial r(p.ring_);
    if (c == 0) return r;
    for (const auto& [m, coef] : p.terms_) r.terms_.emplace(m, c * coef);
    return r;
}

Polynomial Polynomial::derivative(int var_idx) const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) {
        const int e = m.exp(var_idx);
        if (e == 0) continue;
        r.add_term(m.times_var(var_idx, -1), c * e);
    }
    return r;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        std::string vars;
        for (int idx = 0; idx < ring_.var_count(); ++idx) {
            const int e = m.exp(idx);
            if (e == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += ring_.var_name(idx);
            if (e > 1) vars += "^" + std::to_string(e);
        }
        if (vars.empty()) {
            os << a;
        } else if (a == 1) {
            os << vars;
        } else {
            os << a << "*" << vars;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

Polynomial pow(const Polynomial& p, int e) {
    if (e < 0)
        throw InvalidArgumentError("negative polynomial power");
    Polynomial result = Polynomial::constant(p.ring(), 1);
    Polynomial base = p;
    int k = e;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

Polynomial coeff_in_y_last(const Polynomial& p, int i) {
    if (i < 0)
        throw InvalidArgumentError("negative y_{n+1} exponent");
    const int y_last = p.ring().y_index(p.ring().n + 1);
    Polynomial r(p.ring());
    for (const auto& [m, c] : p.terms())
        if (m.exp(y_last) == i)
            r.add_term(m.times_var(y_last, -i), c);
    return r;
}

int y_last_degree(const Polynomial& p) {
    const int y_last = p.ring().y_index(p.ring().n + 1);
    int d = -1;
    for (const auto& [m, c] : p.terms()) d = std::max(d, m.exp(y_last));
    return d;
}

std::vector<X1Slice> split_by_x1(const Polynomial& g) {
    const RingSpec& ring = g.ring();
    const int x1 = ring.x_index(1);
    const int y1 = ring.y_index(1);
    const int y_last = ring.y_index(ring.n + 1);

    if (g.max_exponent(y_last) > 0)
        throw ContainsYLastError("split_by_x1 input mentions y" + std::to_string(ring.n + 1));

    // j -> (q, h) with uniform y1 exponent per slice.
    std::map<int, std::pair<int, Polynomial>> slices;
    for (const auto& [m, c] : g.terms()) {
        const int j = m.exp(x1);
        const int q = m.exp(y1);
        auto it = slices.find(j);
        if (it == slices.end())
            it = slices.emplace(j, std::make_pair(q, Polynomial::zero(ring))).first;
        else if (it->second.first != q)
            throw MixedY1PowersError("x1^" + std::to_string(j) + " slice mixes y1 exponents " +
                                     std::to_string(it->second.first) + " and " + std::to_string(q));
        it->second.second.add_term(m.times_var(x1, -j).times_var(y1, -q), c);
    }

    std::vector<X1Slice> out;
    out.reserve(slices.size());
    for (auto& [j, qh] : slices)
        out.push_back(X1Slice{j, qh.first, std::move(qh.second)});
    return out;
}

Polynomial exact_div_x1(const Polynomial& p, int k) {
    if (k < 0)
        throw InvalidArgumentError("negative x1 power in exact division");
    const int x1 = p.ring().x_index(1);
    Polynomial r(p.ring());
    for (const auto& [m, c] : p.terms()) {
        if (m.exp(x1) < k)
            throw NotDivisibleError("term " + Polynomial::from_monomial(m, c).str() +
                                    " is not divisible by x1^" + std::to_string(k));
        r.add_term(m.times_var(x1, -k), c);
    }
    return r;
}

std::optional<long> is_homogeneous(const Polynomial& p, const WeightVector& w) {
    if (p.is_zero()) return 0L;
    std::optional<long> common;
    for (const auto& [m, c] : p.terms()) {
        const long wt = weight(m, w);
        if (!common)
            common = wt;
        else if (*common != wt)
            return std::nullopt;
    }
    return common;
}

} // namespace lnd
