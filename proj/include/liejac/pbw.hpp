#pragma once

#include "liejac/letter.hpp"
#include "liejac/liealg.hpp"
#include "liejac/polyring.hpp"

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace liejac {

/// Finite rational combination of words over letters.
///
/// Values produced by Straightener are normal-ordered: every word is weakly
/// increasing in the letter order. Raw values (from add_term or concat)
/// carry no such guarantee until passed through Straightener::normal_order.
class NCElement {
public:
    using TermMap = std::map<Word, Rational>;

    NCElement() = default;
    NCElement(const Rational& c);
    NCElement(long c) : NCElement(Rational(c)) {}
    static NCElement word(const Word& w, const Rational& c = 1);
    static NCElement letter(Letter l) { return word({l}); }

    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Word& w) const;
    bool is_normal_ordered() const;

    void add_term(const Word& w, const Rational& c);

    NCElement& operator+=(const NCElement& o);
    NCElement& operator-=(const NCElement& o);
    NCElement& operator*=(const Rational& c);
    NCElement operator-() const;
    friend NCElement operator+(NCElement a, const NCElement& b) { return a += b; }
    friend NCElement operator-(NCElement a, const NCElement& b) { return a -= b; }
    friend NCElement operator*(NCElement a, const Rational& c) { return a *= c; }
    friend NCElement operator*(const Rational& c, NCElement a) { return a *= c; }
    bool operator==(const NCElement& o) const { return terms_ == o.terms_; }

    /// Canonical text: `coef token token ...` terms joined by " ; ", or "0".
    std::string text() const;
    static NCElement parse(const std::string& text);
    std::string pretty() const;

private:
    TermMap terms_;
};

/// Word-by-word concatenation without reordering.
NCElement concat(const NCElement& a, const NCElement& b);

/// PBW straightening by recursive insertion, memoized on (sorted word, letter).
///
/// Multiplying a sorted word w*y by a letter x < y uses
/// w y x = (w x) y + w [y, x], recursing on shorter prefixes.
/// Not thread-safe; give each worker its own instance.
class Straightener {
public:
    Straightener(const LieStructure& s, unsigned t_cap);

    const LieStructure& structure() const { return *s_; }
    unsigned t_cap() const { return t_cap_; }

    NCElement normal_order(const NCElement& e);
    NCElement normal_order_word(const Word& w);
    /// Normal-ordered product of normal-ordered factors.
    NCElement multiply(const NCElement& a, const NCElement& b);
    NCElement commutator(const NCElement& a, const NCElement& b);

    std::size_t memo_size() const { return memo_.size(); }

private:
    using Terms = std::vector<std::pair<Word, Rational>>;
    const Terms& times_letter(const Word& sorted, Letter x);

    const LieStructure* s_;
    unsigned t_cap_;
    std::unordered_map<Word, Terms, WordHash> memo_;
};

/// Independent straightening strategy: repeatedly resolve the leftmost
/// adjacent inversion. Slow; kept as a cross-check of Straightener.
NCElement normal_order_by_inversions(const NCElement& e, const LieStructure& s, unsigned t_cap);

/// The symmetrization map S -> U: each monomial goes to the average of its
/// distinct letter arrangements, then everything is normal-ordered.
NCElement symmetrize(const CommPoly& p, Straightener& st);

enum class HCMode { plain, t_shifted };

/// Keeps the words made only of undecorated-in-u Cartan letters
/// (t-power 0 in plain mode, >= 1 in t-shifted mode). Rejects raw input.
CommPoly hc_project(const NCElement& e, HCMode mode);

/// Keeps words whose letters are all Cartan (u-flag 0 or 1).
CommPoly takiff_cartan_part(const NCElement& e);

/// Letter-wise t -> 1, (x, t^k, u) -> (x, t^0, u), renormalized by `st`.
NCElement at_t_equals_one(const NCElement& e, Straightener& st);

} // namespace liejac
