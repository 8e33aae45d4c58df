#pragma once

#include "liejac/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace liejac {

/// Dense univariate polynomial over Q; coefficient i multiplies x^i.
/// The coefficient vector never ends in a zero.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(const Rational& c);
    UniPoly(long c) : UniPoly(Rational(c)) {}
    explicit UniPoly(std::vector<Rational> coeffs);
    static UniPoly x();
    /// a*x + b
    static UniPoly affine(const Rational& a, const Rational& b);

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
    Rational operator()(const Rational& x) const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly operator-() const;
    bool operator==(const UniPoly&) const = default;

    /// (quotient, remainder) of Euclidean division; divisor nonzero.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
    UniPoly monic() const;

    std::string pretty(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(UniPoly a, UniPoly b);

/// Reduced fraction num/den with a monic denominator.
class RatFunc {
public:
    RatFunc() : den_(1) {}
    RatFunc(const Rational& c) : num_(c), den_(1) {}
    RatFunc(long c) : RatFunc(Rational(c)) {}
    RatFunc(const UniPoly& p) : num_(p), den_(1) {}
    RatFunc(UniPoly num, UniPoly den);

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    RatFunc operator-() const { return RatFunc(-num_, den_); }
    bool operator==(const RatFunc&) const = default;

    std::string pretty(const std::string& var = "x") const;

private:
    void reduce();
    UniPoly num_;
    UniPoly den_;
};

} // namespace liejac
