#include "liejac/univariate.hpp"

#include <algorithm>

namespace liejac {

UniPoly::UniPoly(const Rational& c)
{
    if (c != 0) {
        c_.push_back(c);
    }
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs))
{
    trim();
}

UniPoly UniPoly::x()
{
    return UniPoly(std::vector<Rational>{0, 1});
}

UniPoly UniPoly::affine(const Rational& a, const Rational& b)
{
    return UniPoly(std::vector<Rational>{b, a});
}

void UniPoly::trim()
{
    while (!c_.empty() && c_.back() == 0) {
        c_.pop_back();
    }
}

Rational UniPoly::operator()(const Rational& x) const
{
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        r = r * x + *it;
    }
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o)
{
    if (o.c_.size() > c_.size()) {
        c_.resize(o.c_.size(), 0);
    }
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
        c_[i] += o.c_[i];
    }
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o)
{
    return *this += -o;
}

UniPoly UniPoly::operator-() const
{
    UniPoly r = *this;
    for (auto& c : r.c_) {
        c = -c;
    }
    return r;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            r[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return UniPoly(std::move(r));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const
{
    if (d.is_zero()) {
        throw InvalidArgument("univariate division by zero");
    }
    std::vector<Rational> q(std::max<int>(0, degree() - d.degree() + 1), 0);
    std::vector<Rational> r = c_;
    const Rational lead = d.leading();
    for (int k = degree() - d.degree(); k >= 0; --k) {
        Rational f = r[k + d.degree()] / lead;
        q[k] = f;
        if (f == 0) {
            continue;
        }
        for (int i = 0; i <= d.degree(); ++i) {
            r[k + i] -= f * d.c_[i];
        }
    }
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly UniPoly::monic() const
{
    if (is_zero()) {
        return {};
    }
    UniPoly r = *this;
    Rational lead = leading();
    for (auto& c : r.c_) {
        c /= lead;
    }
    return r;
}

std::string UniPoly::pretty(const std::string& var) const
{
    if (c_.empty()) {
        return "0";
    }
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[i];
        if (c == 0) {
            continue;
        }
        Rational mag = abs(c);
        if (s.empty()) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
        if (mono.empty()) {
            s += to_string(mag);
        } else if (mag == 1) {
            s += mono;
        } else {
            s += to_string(mag) + "*" + mono;
        }
    }
    return s;
}

UniPoly gcd(UniPoly a, UniPoly b)
{
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

RatFunc::RatFunc(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero()) {
        throw InvalidArgument("rational function with zero denominator");
    }
    reduce();
}

void RatFunc::reduce()
{
    if (num_.is_zero()) {
        den_ = UniPoly(1);
        return;
    }
    UniPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    Rational lead = den_.leading();
    if (lead != 1) {
        num_ = num_ * UniPoly(1 / lead);
        den_ = den_ * UniPoly(1 / lead);
    }
}

RatFunc& RatFunc::operator+=(const RatFunc& o)
{
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    reduce();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o)
{
    return *this += -o;
}

RatFunc& RatFunc::operator*=(const RatFunc& o)
{
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o)
{
    if (o.is_zero()) {
        throw InvalidArgument("rational function division by zero");
    }
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    reduce();
    return *this;
}

std::string RatFunc::pretty(const std::string& var) const
{
    if (den_ == UniPoly(1)) {
        return num_.pretty(var);
    }
    return "(" + num_.pretty(var) + ")/(" + den_.pretty(var) + ")";
}

} // namespace liejac
