#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace liejac {

using Rational = mpq_class;
using Integer = mpz_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad input: invalid rank, foreign variable, unsupported family.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A polynomial division that was required to be exact left a remainder.
class NonExactDivision : public Error {
public:
    using Error::Error;
};

/// A bracket produced a t-power above the working cap.
class TPowerOverflow : public Error {
public:
    using Error::Error;
};

/// An enumeration would exceed its size guard.
class GuardExceeded : public Error {
public:
    using Error::Error;
};

/// Canonical "p/q" text; integers print without a denominator.
inline std::string to_string(const Rational& q)
{
    return q.get_str();
}

/// n/d in lowest terms; d != 0.
inline Rational fraction(long n, long d)
{
    if (d == 0) throw InvalidArgument("zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

inline Rational parse_rational(std::string_view text)
{
    Rational q;
    if (q.set_str(std::string(text), 10) != 0) {
        throw InvalidArgument("malformed rational '" + std::string(text) + "'");
    }
    q.canonicalize();
    return q;
}

inline Integer factorial(unsigned n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

} // namespace liejac
