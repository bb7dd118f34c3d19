#ifndef LVMB_CHECKED_INT_HPP
#define LVMB_CHECKED_INT_HPP

#include "lvmb/rational.hpp"

namespace lvmb {

/// 128-bit integer with overflow detection. Fast path for fraction-free
/// pivoting on small data; overflow raises ArithmeticOverflow and callers
/// redo the computation with arbitrary precision.
struct CheckedInt {
    __int128 v;

    CheckedInt() : v(0) {}
    CheckedInt(int x) : v(x) {}
    CheckedInt(long long x) : v(x) {}

    CheckedInt operator-() const { return CheckedInt{} - *this; }

    CheckedInt operator+(CheckedInt o) const {
        CheckedInt r;
        if (__builtin_add_overflow(v, o.v, &r.v)) throw ArithmeticOverflow();
        return r;
    }
    CheckedInt operator-(CheckedInt o) const {
        CheckedInt r;
        if (__builtin_sub_overflow(v, o.v, &r.v)) throw ArithmeticOverflow();
        return r;
    }
    CheckedInt operator*(CheckedInt o) const {
        CheckedInt r;
        if (__builtin_mul_overflow(v, o.v, &r.v)) throw ArithmeticOverflow();
        return r;
    }
    CheckedInt operator/(CheckedInt o) const {
        CheckedInt r;
        r.v = v / o.v;
        return r;
    }
    CheckedInt& operator+=(CheckedInt o) { return *this = *this + o; }
    CheckedInt& operator-=(CheckedInt o) { return *this = *this - o; }

    bool operator==(const CheckedInt& o) const { return v == o.v; }
    bool operator!=(const CheckedInt& o) const { return v != o.v; }
};

inline Sign sign_of(const CheckedInt& x) {
    return x.v < 0 ? Sign::Negative : (x.v > 0 ? Sign::Positive : Sign::Zero);
}

Int to_int(const CheckedInt& x);
CheckedInt to_checked(const Int& x);

} // namespace lvmb

#endif
