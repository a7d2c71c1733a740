#ifndef LND_POLYNOMIAL_HPP
#define LND_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "lnd/monomial.hpp"
#include "lnd/rational.hpp"

namespace lnd {

/// Sparse multivariate polynomial over the rationals in canonical form: the
/// term map never stores a zero coefficient and iterates in descending
/// graded-lex order. Polynomials are values; all operations return fresh
/// results.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialDesc>;

    explicit Polynomial(const RingSpec& ring) : ring_(ring) {}

    static Polynomial zero(const RingSpec& ring) { return Polynomial(ring); }
    static Polynomial constant(const RingSpec& ring, const Rational& c);
    static Polynomial from_monomial(const Monomial& m, const Rational& c = 1);
    static Polynomial x_var(const RingSpec& ring, int i, int exp = 1);
    static Polynomial y_var(const RingSpec& ring, int j, int exp = 1);

    const RingSpec& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// -1 for the zero polynomial.
    long total_degree() const;

    /// Canonically largest monomial; throws on the zero polynomial.
    const Monomial& leading_monomial() const;

    Rational coefficient(const Monomial& m) const;

    /// Least exponent of the given variable across all terms; 0 for zero.
    int min_exponent(int var_idx) const;
    int max_exponent(int var_idx) const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial operator-() const;

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.ring_ == b.ring_ && a.terms_ == b.terms_;
    }

    /// Adds c * m, dropping the entry if the sum cancels.
    void add_term(const Monomial& m, const Rational& c);

    /// Partial derivative with respect to one variable.
    Polynomial derivative(int var_idx) const;

    /// Human-readable form, e.g. "x1*y5^2 - 2*x2*x3*x4*y1*y5".
    std::string str() const;

private:
    RingSpec ring_;
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

Polynomial pow(const Polynomial& p, int e);

/// The coefficient g_i of y_{n+1}^i, a polynomial with no y_{n+1}.
Polynomial coeff_in_y_last(const Polynomial& p, int i);

/// Largest i with a nonzero y_{n+1}^i coefficient; -1 for zero input.
int y_last_degree(const Polynomial& p);

/// One slice of g = sum_j x1^j y1^{q_j} h_j.
struct X1Slice {
    int j;
    int q;
    Polynomial h; // supported on x2..xn, y2..yn
};

/// Splits a y_{n+1}-free polynomial along powers of x1, factoring a single
/// y1 power out of every slice. Slices are returned with j ascending and
/// zero slices omitted.
std::vector<X1Slice> split_by_x1(const Polynomial& g);

/// p / x1^k; throws NotDivisible if some term has x1 exponent < k.
Polynomial exact_div_x1(const Polynomial& p, int k);

/// Common weight of all terms, or nullopt if mixed. Zero reports weight 0.
std::optional<long> is_homogeneous(const Polynomial& p, const WeightVector& w);

} // namespace lnd

#endif
