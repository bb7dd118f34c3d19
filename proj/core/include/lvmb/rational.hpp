#ifndef LVMB_RATIONAL_HPP
#define LVMB_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>

#include "lvmb/errors.hpp"

namespace lvmb {

// Arbitrary-precision scalars. GMP keeps rationals canonical: positive
// denominator, lowest terms.
using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Int numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Sign sign_of(const Rational& q) {
    int s = q.sign();
    return s < 0 ? Sign::Negative : (s > 0 ? Sign::Positive : Sign::Zero);
}

inline Sign sign_of(const Int& n) {
    int s = n.sign();
    return s < 0 ? Sign::Negative : (s > 0 ? Sign::Positive : Sign::Zero);
}

Int floor_div(const Int& a, const Int& b);

/// Largest integer <= q.
Int floor_rational(const Rational& q);

/// Parses "p", "-p" or "p/q" with q > 0 after normalization. Rejects zero
/// denominators and garbage.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);
std::string to_string(const Int& n);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

} // namespace lvmb

#endif
