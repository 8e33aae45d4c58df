#pragma once

#include "liejac/letter.hpp"
#include "liejac/rational.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace liejac {

/// Commutative monomial: sorted factor list of (letter, exponent > 0).
class Monomial {
public:
    using Factor = std::pair<Letter, unsigned>;

    Monomial() = default;
    static Monomial of(Letter l, unsigned exponent = 1);
    /// Sorts and merges; drops zero exponents.
    static Monomial from_factors(std::vector<Factor> factors);

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    unsigned degree() const;
    /// Degree counting generator letters only (the formal scalar t is ignored).
    unsigned letter_degree() const;
    unsigned exponent(Letter l) const;

    Monomial operator*(const Monomial& other) const;
    /// Quotient when `other` divides this monomial.
    std::optional<Monomial> divide(const Monomial& other) const;

    bool operator==(const Monomial&) const = default;

    /// Space separated `class:index:t:u^exp` tokens, or "1".
    std::string token() const;
    static Monomial parse_token(const std::string& text);
    std::string pretty() const;

private:
    std::vector<Factor> factors_;
};

/// Graded lexicographic monomial order. Lower letter codes are more significant.
struct GradedLex {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse polynomial with exact rational coefficients. Storage is canonical:
/// no zero coefficients, terms keyed by GradedLex, so equal polynomials
/// compare equal member-wise.
class CommPoly {
public:
    using TermMap = std::map<Monomial, Rational, GradedLex>;

    CommPoly() = default;
    CommPoly(const Rational& c);
    CommPoly(long c) : CommPoly(Rational(c)) {}
    static CommPoly variable(Letter l);
    static CommPoly term(const Monomial& m, const Rational& c);

    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    Rational coefficient(const Monomial& m) const;
    unsigned degree() const;
    std::set<Letter> variables() const;
    /// Largest term under GradedLex; requires a nonzero polynomial.
    const TermMap::value_type& leading_term() const;

    void add_term(const Monomial& m, const Rational& c);

    CommPoly& operator+=(const CommPoly& o);
    CommPoly& operator-=(const CommPoly& o);
    CommPoly& operator*=(const Rational& c);
    CommPoly operator-() const;

    friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
    friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
    friend CommPoly operator*(const CommPoly& a, const CommPoly& b);
    friend CommPoly operator*(CommPoly a, const Rational& c) { return a *= c; }
    friend CommPoly operator*(const Rational& c, CommPoly a) { return a *= c; }

    bool operator==(const CommPoly& o) const { return terms_ == o.terms_; }

    /// Canonical text: `coef token...` terms joined by " ; ", or "0".
    std::string text() const;
    static CommPoly parse(const std::string& text);
    std::string pretty() const;

private:
    TermMap terms_;
};

CommPoly pow(const CommPoly& p, unsigned e);

/// Simultaneous substitution; letters missing from `assignment` are kept.
CommPoly substitute(const CommPoly& p, const std::map<Letter, CommPoly>& assignment);

/// Ordinary partial derivative with respect to one letter.
CommPoly partial(const CommPoly& p, Letter var);

/// Derivation with (h_j t^k) -> k t^(k-1) and every other letter -> 0.
/// Accepts only t-decorated Cartan letters and the formal scalar t.
CommPoly partial_shifted(const CommPoly& p, unsigned j);

/// t -> 1 and (x, t^k, u) -> (x, t^0, u) for every letter.
CommPoly at_t_equals_one(const CommPoly& p);

/// Terms of maximal letter degree (t excluded from the count). Rejects zero.
CommPoly highest_component(const CommPoly& p);

/// r with p = q * r. Throws NonExactDivision when q does not divide p.
CommPoly exact_divide(const CommPoly& p, const CommPoly& q);

using PolyMatrix = std::vector<std::vector<CommPoly>>;

/// Fraction-free Bareiss elimination with exact intermediate divisions.
CommPoly determinant(PolyMatrix m);

} // namespace liejac
