#ifndef LVMB_LINALG_HPP
#define LVMB_LINALG_HPP

#include <optional>
#include <vector>

#include "lvmb/matrix.hpp"

namespace lvmb {

using RatVector = std::vector<Rational>;

/// Exact quotient of ring elements; the pair is the value num/den.
/// Witnesses of symbolic linear programs live here because optima over a
/// generator field need not be linear combinations of the generators.
struct SymFrac {
    SymbolicReal num;
    SymbolicReal den; // formally nonzero

    SymFrac() : num(0), den(1) {}
    SymFrac(SymbolicReal n) : num(std::move(n)), den(1) {}
    SymFrac(SymbolicReal n, SymbolicReal d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) throw std::logic_error("SymFrac with zero denominator");
        reduce();
    }

    bool is_zero() const { return num.is_zero(); }

    /// Collapses to a plain SymbolicReal when the denominator is rational.
    bool is_symbolic_real() const { return den.is_rational(); }
    SymbolicReal as_symbolic_real() const { return SymbolicReal::exact_div(num, den); }
    bool is_rational() const { return num.is_rational() && den.is_rational(); }
    Rational as_rational() const { return num.rational_value() / den.rational_value(); }

    SymFrac operator+(const SymFrac& o) const { return {num * o.den + o.num * den, den * o.den}; }
    SymFrac operator-(const SymFrac& o) const { return {num * o.den - o.num * den, den * o.den}; }
    SymFrac operator*(const SymFrac& o) const { return {num * o.num, den * o.den}; }
    SymFrac operator-() const { return {-num, den}; }

    /// Formal equality of values (cross multiplication).
    bool equals(const SymFrac& o) const { return (num * o.den - o.num * den).is_zero(); }

private:
    void reduce() {
        if (den.is_rational() && !num.is_zero()) {
            num = SymbolicReal::exact_div(num, den);
            den = SymbolicReal(Rational(1));
        }
    }
};

Sign sign_of(const SymFrac& x, const GeneratorTable& table);

/// Solves a * x = b for square rational a. Throws SingularMatrix.
RatVector rat_solve(const RatMatrix& a, const RatVector& b);

std::size_t rank(const RatMatrix& m);

/// Rank over the symbolic field. Pivots must be sign-certified; throws
/// PrecisionExhausted when no candidate pivot can be certified.
std::size_t rank(const SymMatrix& m, const GeneratorTable& table);

/// Determinant as a formal polynomial (fraction-free elimination; no sign
/// certification needed along the way).
SymbolicReal determinant(const SymMatrix& m);

/// Solves a * x = b over the symbolic field for square a. Throws
/// SingularMatrix when det is formally zero, PrecisionExhausted when det
/// cannot be certified nonzero.
std::vector<SymFrac> sym_solve(const SymMatrix& a, const std::vector<SymbolicReal>& b,
                               const GeneratorTable& table);

} // namespace lvmb

#endif
