#ifndef LVMB_INTERVAL_HPP
#define LVMB_INTERVAL_HPP

#include <algorithm>

#include "lvmb/rational.hpp"

namespace lvmb {

/// Closed interval with rational endpoints. Used for generator enclosures
/// and for the sign test on symbolic quantities.
struct Interval {
    Rational lo;
    Rational hi;

    Interval() : lo(0), hi(0) {}
    Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}

    static Interval point(const Rational& q) { return {q, q}; }

    bool valid() const { return lo <= hi; }
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }

    Interval operator+(const Interval& o) const { return {lo + o.lo, hi + o.hi}; }

    Interval operator*(const Interval& o) const {
        Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        return {std::min(std::min(a, b), std::min(c, d)),
                std::max(std::max(a, b), std::max(c, d))};
    }

    Interval scaled(const Rational& q) const {
        if (q >= 0) return {lo * q, hi * q};
        return {hi * q, lo * q};
    }

    Interval pow(unsigned e) const {
        if (e == 0) return point(Rational(1));
        Interval r = *this;
        for (unsigned i = 1; i < e; ++i) r = r * *this;
        return r;
    }

    /// Sign when the interval excludes zero; Zero only for the exact point
    /// interval [0,0]; throws otherwise.
    Sign certified_sign(const char* context) const {
        if (lo > 0) return Sign::Positive;
        if (hi < 0) return Sign::Negative;
        if (lo == 0 && hi == 0) return Sign::Zero;
        throw PrecisionExhausted(context);
    }
};

} // namespace lvmb

#endif
