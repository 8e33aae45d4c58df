#include "liejac/pbw.hpp"

#include <algorithm>
#include <sstream>

namespace liejac {

// ---------------------------------------------------------------- NCElement

NCElement::NCElement(const Rational& c)
{
    if (c != 0) {
        terms_.emplace(Word{}, c);
    }
}

NCElement NCElement::word(const Word& w, const Rational& c)
{
    NCElement e;
    e.add_term(w, c);
    return e;
}

Rational NCElement::coefficient(const Word& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool NCElement::is_normal_ordered() const
{
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return std::is_sorted(t.first.begin(), t.first.end()); });
}

void NCElement::add_term(const Word& w, const Rational& c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

NCElement& NCElement::operator+=(const NCElement& o)
{
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NCElement& NCElement::operator-=(const NCElement& o)
{
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NCElement& NCElement::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

NCElement NCElement::operator-() const
{
    NCElement r = *this;
    r *= -1;
    return r;
}

std::string NCElement::text() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string s;
    for (const auto& [w, c] : terms_) {
        if (!s.empty()) s += " ; ";
        s += to_string(c);
        for (auto l : w) s += ' ' + l.token();
    }
    return s;
}

NCElement NCElement::parse(const std::string& text)
{
    NCElement e;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(';', start);
        std::istringstream is(text.substr(start, end == std::string::npos ? std::string::npos : end - start));
        std::string coef;
        if (is >> coef) {
            Word w;
            std::string tok;
            while (is >> tok) w.push_back(Letter::parse_token(tok));
            if (!(coef == "0" && w.empty())) e.add_term(w, parse_rational(coef));
        }
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return e;
}

namespace {

std::string pretty_word(const Word& w)
{
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        s += "(" + w[i].pretty() + ")";
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    return s;
}

} // namespace

std::string NCElement::pretty() const
{
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : terms_) {
        Rational mag = abs(c);
        if (s.empty()) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        if (w.empty()) {
            s += to_string(mag);
        } else if (mag == 1) {
            s += pretty_word(w);
        } else {
            s += to_string(mag) + "*" + pretty_word(w);
        }
    }
    return s;
}

NCElement concat(const NCElement& a, const NCElement& b)
{
    NCElement r;
    for (const auto& [wa, ca] : a.terms()) {
        for (const auto& [wb, cb] : b.terms()) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, ca * cb);
        }
    }
    return r;
}

// ---------------------------------------------------------------- Straightener

Straightener::Straightener(const LieStructure& s, unsigned t_cap) : s_(&s), t_cap_(t_cap) {}

const Straightener::Terms& Straightener::times_letter(const Word& sorted, Letter x)
{
    Word key = sorted;
    key.push_back(x);
    if (auto it = memo_.find(key); it != memo_.end()) {
        return it->second;
    }
    Terms out;
    if (sorted.empty() || !(x < sorted.back())) {
        out.emplace_back(key, 1);
        return memo_.emplace(std::move(key), std::move(out)).first->second;
    }
    const Letter y = sorted.back();
    const Word prefix(sorted.begin(), sorted.end() - 1);

    std::map<Word, Rational> acc;
    // (prefix x) y
    const Terms& left = times_letter(prefix, x);
    for (const auto& [v, c] : left) {
        for (const auto& [w, d] : times_letter(v, y)) {
            acc[w] += c * d;
        }
    }
    // prefix [y, x]
    for (const auto& [z, b] : extended_bracket(*s_, y, x, t_cap_)) {
        for (const auto& [w, d] : times_letter(prefix, z)) {
            acc[w] += b * d;
        }
    }
    for (auto& [w, c] : acc) {
        if (c != 0) out.emplace_back(w, std::move(c));
    }
    // unordered_map keeps element references stable across rehashing
    return memo_.emplace(std::move(key), std::move(out)).first->second;
}

NCElement Straightener::normal_order_word(const Word& w)
{
    std::map<Word, Rational> acc{{Word{}, Rational(1)}};
    for (Letter x : w) {
        std::map<Word, Rational> next;
        for (const auto& [v, c] : acc) {
            for (const auto& [z, d] : times_letter(v, x)) {
                next[z] += c * d;
            }
        }
        acc.clear();
        for (auto& [z, c] : next) {
            if (c != 0) acc.emplace(z, std::move(c));
        }
    }
    NCElement r;
    for (const auto& [z, c] : acc) r.add_term(z, c);
    return r;
}

NCElement Straightener::normal_order(const NCElement& e)
{
    NCElement r;
    for (const auto& [w, c] : e.terms()) {
        if (std::is_sorted(w.begin(), w.end())) {
            r.add_term(w, c);
        } else {
            r += normal_order_word(w) * c;
        }
    }
    return r;
}

NCElement Straightener::multiply(const NCElement& a, const NCElement& b)
{
    return normal_order(concat(a, b));
}

NCElement Straightener::commutator(const NCElement& a, const NCElement& b)
{
    return normal_order(concat(a, b) - concat(b, a));
}

NCElement normal_order_by_inversions(const NCElement& e, const LieStructure& s, unsigned t_cap)
{
    std::map<Word, Rational> pending(e.terms().begin(), e.terms().end());
    NCElement done;
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const Word& w = node.key();
        const Rational c = node.mapped();
        if (c == 0) continue;
        std::size_t i = 0;
        while (i + 1 < w.size() && !(w[i + 1] < w[i])) ++i;
        if (i + 1 >= w.size()) {
            done.add_term(w, c);
            continue;
        }
        Word swapped = w;
        std::swap(swapped[i], swapped[i + 1]);
        pending[swapped] += c;
        for (const auto& [z, b] : extended_bracket(s, w[i], w[i + 1], t_cap)) {
            Word shorter(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
            shorter.push_back(z);
            shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
            pending[shorter] += c * b;
        }
    }
    return done;
}

NCElement symmetrize(const CommPoly& p, Straightener& st)
{
    NCElement raw;
    for (const auto& [m, c] : p.terms()) {
        Word letters;
        Integer multiplicity = 1;
        for (const auto& [l, e] : m.factors()) {
            if (l.is_param()) {
                throw InvalidArgument("symmetrize: formal scalar t in a Lie monomial");
            }
            letters.insert(letters.end(), e, l);
            multiplicity *= factorial(e);
        }
        // Each distinct arrangement stands for prod(m_i!) of the d! orderings.
        Rational weight = c * Rational(multiplicity) / Rational(factorial(static_cast<unsigned>(letters.size())));
        weight.canonicalize();
        std::sort(letters.begin(), letters.end());
        do {
            raw.add_term(letters, weight);
        } while (std::next_permutation(letters.begin(), letters.end()));
    }
    return st.normal_order(raw);
}

CommPoly hc_project(const NCElement& e, HCMode mode)
{
    if (!e.is_normal_ordered()) {
        throw InvalidArgument("hc_project: input is not normal-ordered");
    }
    CommPoly r;
    for (const auto& [w, c] : e.terms()) {
        bool keep = std::all_of(w.begin(), w.end(), [&](Letter l) {
            if (l.cls() != LetterClass::cartan || l.u_flag() != 0) return false;
            return mode == HCMode::plain ? l.t_power() == 0 : l.t_power() >= 1;
        });
        if (!keep) continue;
        std::vector<Monomial::Factor> fs;
        for (auto l : w) fs.emplace_back(l, 1);
        r.add_term(Monomial::from_factors(std::move(fs)), c);
    }
    return r;
}

CommPoly takiff_cartan_part(const NCElement& e)
{
    CommPoly r;
    for (const auto& [w, c] : e.terms()) {
        if (!std::all_of(w.begin(), w.end(), [](Letter l) { return l.cls() == LetterClass::cartan; })) {
            continue;
        }
        std::vector<Monomial::Factor> fs;
        for (auto l : w) fs.emplace_back(l, 1);
        r.add_term(Monomial::from_factors(std::move(fs)), c);
    }
    return r;
}

NCElement at_t_equals_one(const NCElement& e, Straightener& st)
{
    NCElement raw;
    for (const auto& [w, c] : e.terms()) {
        Word v;
        v.reserve(w.size());
        for (auto l : w) {
            if (l.is_param()) continue;
            v.push_back(l.with_t(0));
        }
        raw.add_term(v, c);
    }
    return st.normal_order(raw);
}

} // namespace liejac
