#include "liejac/polyring.hpp"

#include <algorithm>
#include <sstream>

namespace liejac {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(Letter l, unsigned exponent)
{
    Monomial m;
    if (exponent > 0) {
        m.factors_.emplace_back(l, exponent);
    }
    return m;
}

Monomial Monomial::from_factors(std::vector<Factor> factors)
{
    std::sort(factors.begin(), factors.end(),
              [](const Factor& a, const Factor& b) { return a.first < b.first; });
    Monomial m;
    for (const auto& [l, e] : factors) {
        if (e == 0) {
            continue;
        }
        if (!m.factors_.empty() && m.factors_.back().first == l) {
            m.factors_.back().second += e;
        } else {
            m.factors_.emplace_back(l, e);
        }
    }
    return m;
}

unsigned Monomial::degree() const
{
    unsigned d = 0;
    for (const auto& f : factors_) {
        d += f.second;
    }
    return d;
}

unsigned Monomial::letter_degree() const
{
    unsigned d = 0;
    for (const auto& [l, e] : factors_) {
        if (!l.is_param()) {
            d += e;
        }
    }
    return d;
}

unsigned Monomial::exponent(Letter l) const
{
    auto it = std::lower_bound(factors_.begin(), factors_.end(), l,
                               [](const Factor& f, Letter x) { return f.first < x; });
    return (it != factors_.end() && it->first == l) ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial& other) const
{
    Monomial r;
    r.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() && b != other.factors_.end()) {
        if (a->first < b->first) {
            r.factors_.push_back(*a++);
        } else if (b->first < a->first) {
            r.factors_.push_back(*b++);
        } else {
            r.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    r.factors_.insert(r.factors_.end(), a, factors_.end());
    r.factors_.insert(r.factors_.end(), b, other.factors_.end());
    return r;
}

std::optional<Monomial> Monomial::divide(const Monomial& other) const
{
    Monomial r;
    auto a = factors_.begin();
    for (const auto& [l, e] : other.factors_) {
        while (a != factors_.end() && a->first < l) {
            r.factors_.push_back(*a++);
        }
        if (a == factors_.end() || a->first != l || a->second < e) {
            return std::nullopt;
        }
        if (a->second > e) {
            r.factors_.emplace_back(l, a->second - e);
        }
        ++a;
    }
    r.factors_.insert(r.factors_.end(), a, factors_.end());
    return r;
}

std::string Monomial::token() const
{
    if (factors_.empty()) {
        return "1";
    }
    std::string s;
    for (const auto& [l, e] : factors_) {
        if (!s.empty()) {
            s += ' ';
        }
        s += l.token() + '^' + std::to_string(e);
    }
    return s;
}

Monomial Monomial::parse_token(const std::string& text)
{
    std::istringstream is(text);
    std::string tok;
    std::vector<Factor> fs;
    while (is >> tok) {
        if (tok == "1") {
            continue;
        }
        auto caret = tok.find('^');
        if (caret == std::string::npos) {
            throw InvalidArgument("factor without exponent: '" + tok + "'");
        }
        fs.emplace_back(Letter::parse_token(tok.substr(0, caret)),
                        static_cast<unsigned>(std::stoul(tok.substr(caret + 1))));
    }
    return from_factors(std::move(fs));
}

std::string Monomial::pretty() const
{
    if (factors_.empty()) {
        return "1";
    }
    std::string s;
    for (const auto& [l, e] : factors_) {
        if (!s.empty()) {
            s += '*';
        }
        bool compound = l.t_power() > 0 || l.u_flag();
        std::string name = compound && e > 1 ? "(" + l.pretty() + ")" : l.pretty();
        s += name;
        if (e > 1) {
            s += '^' + std::to_string(e);
        }
    }
    return s;
}

bool GradedLex::operator()(const Monomial& a, const Monomial& b) const
{
    unsigned da = a.degree(), db = b.degree();
    if (da != db) {
        return da < db;
    }
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::size_t i = 0;
    for (; i < fa.size() && i < fb.size(); ++i) {
        if (fa[i].first != fb[i].first) {
            // The monomial holding the more significant letter is larger.
            return fb[i].first < fa[i].first;
        }
        if (fa[i].second != fb[i].second) {
            return fa[i].second < fb[i].second;
        }
    }
    return fa.size() < fb.size();
}

// ---------------------------------------------------------------- CommPoly

CommPoly::CommPoly(const Rational& c)
{
    if (c != 0) {
        terms_.emplace(Monomial{}, c);
    }
}

CommPoly CommPoly::variable(Letter l)
{
    return term(Monomial::of(l), 1);
}

CommPoly CommPoly::term(const Monomial& m, const Rational& c)
{
    CommPoly p;
    p.add_term(m, c);
    return p;
}

bool CommPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational CommPoly::constant_term() const
{
    return coefficient(Monomial{});
}

Rational CommPoly::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

unsigned CommPoly::degree() const
{
    return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

std::set<Letter> CommPoly::variables() const
{
    std::set<Letter> vs;
    for (const auto& [m, c] : terms_) {
        for (const auto& f : m.factors()) {
            vs.insert(f.first);
        }
    }
    return vs;
}

const CommPoly::TermMap::value_type& CommPoly::leading_term() const
{
    if (terms_.empty()) {
        throw InvalidArgument("leading term of the zero polynomial");
    }
    return *terms_.rbegin();
}

void CommPoly::add_term(const Monomial& m, const Rational& c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

CommPoly& CommPoly::operator+=(const CommPoly& o)
{
    for (const auto& [m, c] : o.terms_) {
        add_term(m, c);
    }
    return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& o)
{
    for (const auto& [m, c] : o.terms_) {
        add_term(m, -c);
    }
    return *this;
}

CommPoly& CommPoly::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) {
        v *= c;
    }
    return *this;
}

CommPoly CommPoly::operator-() const
{
    CommPoly r = *this;
    r *= -1;
    return r;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b)
{
    CommPoly r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            r.add_term(ma * mb, ca * cb);
        }
    }
    return r;
}

std::string CommPoly::text() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string s;
    for (const auto& [m, c] : terms_) {
        if (!s.empty()) {
            s += " ; ";
        }
        s += to_string(c) + ' ' + m.token();
    }
    return s;
}

CommPoly CommPoly::parse(const std::string& text)
{
    CommPoly p;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(';', start);
        std::string chunk = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
        std::istringstream is(chunk);
        std::string coef;
        if (is >> coef) {
            std::string rest;
            std::getline(is, rest);
            if (coef == "0" && rest.find_first_not_of(' ') == std::string::npos) {
                // the zero polynomial
            } else {
                p.add_term(Monomial::parse_token(rest), parse_rational(coef));
            }
        }
        if (end == std::string::npos) {
            break;
        }
        start = end + 1;
    }
    return p;
}

std::string CommPoly::pretty() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational mag = abs(c);
        if (s.empty()) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        if (m.is_one()) {
            s += to_string(mag);
        } else if (mag == 1) {
            s += m.pretty();
        } else {
            s += to_string(mag) + "*" + m.pretty();
        }
    }
    return s;
}

// ---------------------------------------------------------------- operations

CommPoly pow(const CommPoly& p, unsigned e)
{
    CommPoly r(1);
    CommPoly base = p;
    while (e > 0) {
        if (e & 1u) {
            r = r * base;
        }
        e >>= 1;
        if (e > 0) {
            base = base * base;
        }
    }
    return r;
}

CommPoly substitute(const CommPoly& p, const std::map<Letter, CommPoly>& assignment)
{
    std::map<std::pair<Letter, unsigned>, CommPoly> powers;
    auto power_of = [&](Letter l, unsigned e) -> const CommPoly& {
        auto key = std::make_pair(l, e);
        auto it = powers.find(key);
        if (it == powers.end()) {
            it = powers.emplace(key, pow(assignment.at(l), e)).first;
        }
        return it->second;
    };
    CommPoly r;
    for (const auto& [m, c] : p.terms()) {
        std::vector<Monomial::Factor> kept;
        CommPoly image(c);
        for (const auto& [l, e] : m.factors()) {
            if (assignment.count(l)) {
                image = image * power_of(l, e);
            } else {
                kept.emplace_back(l, e);
            }
        }
        image = image * CommPoly::term(Monomial::from_factors(std::move(kept)), 1);
        r += image;
    }
    return r;
}

CommPoly partial(const CommPoly& p, Letter var)
{
    CommPoly r;
    for (const auto& [m, c] : p.terms()) {
        unsigned e = m.exponent(var);
        if (e == 0) {
            continue;
        }
        r.add_term(*m.divide(Monomial::of(var)), c * e);
    }
    return r;
}

CommPoly partial_shifted(const CommPoly& p, unsigned j)
{
    const Letter t = Letter::param();
    CommPoly r;
    for (const auto& [m, c] : p.terms()) {
        for (const auto& [l, e] : m.factors()) {
            if (l.is_param()) {
                continue;
            }
            if (l.cls() != LetterClass::cartan || l.t_power() == 0 || l.u_flag() != 0) {
                throw InvalidArgument("partial_shifted: unexpected variable " + l.token());
            }
            if (l.index() != j) {
                continue;
            }
            // d/dx (x t^k)^e = e (x t^k)^(e-1) k t^(k-1)
            Monomial rest = *m.divide(Monomial::of(l));
            rest = rest * Monomial::of(t, l.t_power() - 1);
            r.add_term(rest, c * e * l.t_power());
        }
    }
    return r;
}

CommPoly at_t_equals_one(const CommPoly& p)
{
    CommPoly r;
    for (const auto& [m, c] : p.terms()) {
        std::vector<Monomial::Factor> fs;
        for (const auto& [l, e] : m.factors()) {
            if (!l.is_param()) {
                fs.emplace_back(l.with_t(0), e);
            }
        }
        r.add_term(Monomial::from_factors(std::move(fs)), c);
    }
    return r;
}

CommPoly highest_component(const CommPoly& p)
{
    if (p.is_zero()) {
        throw InvalidArgument("highest component of the zero polynomial");
    }
    unsigned top = 0;
    for (const auto& [m, c] : p.terms()) {
        top = std::max(top, m.letter_degree());
    }
    CommPoly r;
    for (const auto& [m, c] : p.terms()) {
        if (m.letter_degree() == top) {
            r.add_term(m, c);
        }
    }
    return r;
}

CommPoly exact_divide(const CommPoly& p, const CommPoly& q)
{
    if (q.is_zero()) {
        throw InvalidArgument("division by the zero polynomial");
    }
    const auto& [lm_q, lc_q] = q.leading_term();
    CommPoly rem = p;
    CommPoly quot;
    while (!rem.is_zero()) {
        const auto& [lm, lc] = rem.leading_term();
        auto m = lm.divide(lm_q);
        if (!m) {
            throw NonExactDivision("polynomial division leaves a remainder");
        }
        CommPoly step = CommPoly::term(*m, lc / lc_q);
        quot += step;
        rem -= step * q;
    }
    return quot;
}

CommPoly determinant(PolyMatrix m)
{
    const std::size_t n = m.size();
    for (const auto& row : m) {
        if (row.size() != n) {
            throw InvalidArgument("determinant of a non-square matrix");
        }
    }
    if (n == 0) {
        return CommPoly(1);
    }
    Rational sign = 1;
    CommPoly prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) {
                ++r;
            }
            if (r == n) {
                return CommPoly{};
            }
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = exact_divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            }
            m[i][k] = CommPoly{};
        }
        prev = m[k][k];
    }
    return m[n - 1][n - 1] * sign;
}

} // namespace liejac
