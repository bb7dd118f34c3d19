#ifndef LVMB_SYMBOLIC_HPP
#define LVMB_SYMBOLIC_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "lvmb/generators.hpp"
#include "lvmb/rational.hpp"

namespace lvmb {

/// Exact real number: a rational combination of declared generators.
///
/// Data entered from outside is always linear (a constant plus rational
/// multiples of single generators). Ring operations close the
/// representation under multiplication by tracking formal monomials in the
/// generators, so pivoting algorithms can stay exact. Zero is the empty
/// combination; by the declared independence of the generators this zero
/// test is exact for everything the library stores, and the sign of a
/// nonzero element is certified through interval evaluation.
class SymbolicReal {
public:
    /// Sorted generator indices with repetition; empty = the constant term.
    /// Index 0 (the constant 1) never appears inside a monomial.
    using Monomial = std::vector<std::uint32_t>;

    struct Term {
        Monomial mono;
        Rational coeff;
    };

    SymbolicReal() = default;
    SymbolicReal(const Rational& c);
    SymbolicReal(long c) : SymbolicReal(Rational(c)) {}
    SymbolicReal(int c) : SymbolicReal(Rational(c)) {}

    /// The generator as a number: index 0 gives the constant 1.
    static SymbolicReal generator(std::uint32_t index);

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    bool is_linear() const;

    /// Value when is_rational(); throws otherwise.
    Rational rational_value() const;

    /// Linear view: map generator index -> coefficient, with the constant
    /// term reported on index 0. Throws unless is_linear().
    std::map<std::uint32_t, Rational> linear_coeffs() const;

    const std::vector<Term>& terms() const { return terms_; }

    SymbolicReal operator-() const;
    SymbolicReal operator+(const SymbolicReal& o) const;
    SymbolicReal operator-(const SymbolicReal& o) const;
    SymbolicReal operator*(const SymbolicReal& o) const;
    SymbolicReal& operator+=(const SymbolicReal& o) { return *this = *this + o; }
    SymbolicReal& operator-=(const SymbolicReal& o) { return *this = *this - o; }
    SymbolicReal& operator*=(const SymbolicReal& o) { return *this = *this * o; }

    bool operator==(const SymbolicReal& o) const;
    bool operator!=(const SymbolicReal& o) const { return !(*this == o); }

    /// Exact quotient in the polynomial ring; throws std::logic_error if the
    /// division does not come out even. Fraction-free pivoting only ever
    /// asks for exact quotients.
    static SymbolicReal exact_div(const SymbolicReal& num, const SymbolicReal& den);

    Interval evaluate(const GeneratorTable& table) const;

    /// Largest generator index mentioned (0 when constant/zero).
    std::uint32_t max_generator() const;

    std::string to_string(const GeneratorTable& table) const;

private:
    // Terms sorted by graded-lex monomial order, no zero coefficients.
    std::vector<Term> terms_;

    static int mono_cmp(const Monomial& a, const Monomial& b);
    void normalize();
    friend struct SymbolicRealBuilder;
};

/// Zero iff the combination is empty (exact); otherwise the certified sign
/// of the interval evaluation. Throws PrecisionExhausted when the interval
/// straddles zero.
Sign sign_of(const SymbolicReal& x, const GeneratorTable& table);

} // namespace lvmb

#endif
