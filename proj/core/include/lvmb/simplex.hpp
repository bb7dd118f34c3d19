#ifndef LVMB_SIMPLEX_HPP
#define LVMB_SIMPLEX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "lvmb/checked_int.hpp"
#include "lvmb/linalg.hpp"
#include "lvmb/matrix.hpp"

namespace lvmb {

enum class LpStatus { Optimal, Infeasible, Unbounded };

/// Ring adapters for the fraction-free tableau. `sign` certifies the sign
/// of an entry's value (may throw PrecisionExhausted for symbolic rings);
/// `div` is exact ring division, which fraction-free pivoting guarantees.
struct IntRingOps {
    Sign sign(const Int& x) const { return sign_of(x); }
    Int div(const Int& a, const Int& b) const { return a / b; }
};

struct CheckedRingOps {
    Sign sign(const CheckedInt& x) const { return sign_of(x); }
    CheckedInt div(const CheckedInt& a, const CheckedInt& b) const { return a / b; }
};

struct SymRingOps {
    const GeneratorTable* table;
    Sign sign(const SymbolicReal& x) const { return sign_of(x, *table); }
    SymbolicReal div(const SymbolicReal& a, const SymbolicReal& b) const {
        return SymbolicReal::exact_div(a, b);
    }
};

template <class Ring>
struct SimplexResult {
    LpStatus status = LpStatus::Infeasible;
    Ring den = Ring(1);                // common denominator of the optimum
    std::vector<Ring> solution_num;    // per variable; value = num/den
    Ring objective_num = Ring(0);      // optimal c^T x = objective_num/den
};

/// Two-phase primal simplex with Bland's rule on a fraction-free (integer
/// pivoting) dense tableau: entries stay in the ring, every division is
/// exact, and ties resolve lexicographically by variable index so runs are
/// deterministic.
///
/// maximize c^T x subject to A x = b, x >= 0.
template <class Ring, class Ops>
class FractionFreeSimplex {
public:
    FractionFreeSimplex(Matrix<Ring> a, std::vector<Ring> b, std::vector<Ring> c, Ops ops)
        : ops_(ops), nvars_(a.cols()), c_(std::move(c)) {
        const std::size_t m = a.rows();
        if (b.size() != m || c_.size() != nvars_) throw std::invalid_argument("simplex shape mismatch");
        // Tableau: col 0 = rhs, cols 1..nvars = variables, then artificials;
        // last row = objective.
        tab_ = Matrix<Ring>(m + 1, 1 + nvars_ + m, Ring(0));
        basis_.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            bool flip = ops_.sign(b[i]) == Sign::Negative;
            tab_(i, 0) = flip ? -b[i] : b[i];
            for (std::size_t j = 0; j < nvars_; ++j) tab_(i, 1 + j) = flip ? -a(i, j) : a(i, j);
            tab_(i, 1 + nvars_ + i) = Ring(1);
            basis_[i] = nvars_ + i;
        }
    }

    SimplexResult<Ring> solve() {
        run_phase1();
        if (infeasible_) return {LpStatus::Infeasible, Ring(1), {}, Ring(0)};
        drop_artificials();
        install_objective(c_);
        if (!iterate(nvars_)) return {LpStatus::Unbounded, Ring(1), {}, Ring(0)};
        SimplexResult<Ring> r;
        r.status = LpStatus::Optimal;
        r.den = den_;
        r.solution_num.assign(nvars_, Ring(0));
        for (std::size_t i = 0; i + 1 < tab_.rows(); ++i)
            if (basis_[i] < nvars_) r.solution_num[basis_[i]] = tab_(i, 0);
        r.objective_num = tab_(obj_row(), 0);
        // normalize the reported denominator to positive
        if (ops_.sign(r.den) == Sign::Negative) {
            r.den = -r.den;
            for (auto& v : r.solution_num) v = -v;
            r.objective_num = -r.objective_num;
        }
        return r;
    }

private:
    Ops ops_;
    std::size_t nvars_;
    std::vector<Ring> c_;
    Matrix<Ring> tab_;
    std::vector<std::size_t> basis_;
    Ring den_ = Ring(1);
    int den_sign_ = 1;
    bool infeasible_ = false;

    std::size_t obj_row() const { return tab_.rows() - 1; }
    std::size_t ncols() const { return tab_.cols(); }

    int value_sign(const Ring& x) const {
        Sign s = ops_.sign(x);
        return static_cast<int>(s) * den_sign_;
    }

    void pivot(std::size_t prow, std::size_t pcol) {
        const Ring p = tab_(prow, pcol);
        const std::size_t rows = tab_.rows(), cols = ncols();
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == prow) continue;
            const Ring f = tab_(i, pcol);
            if (f == Ring(0)) {
                for (std::size_t j = 0; j < cols; ++j)
                    tab_(i, j) = ops_.div(tab_(i, j) * p, den_);
            } else {
                for (std::size_t j = 0; j < cols; ++j)
                    tab_(i, j) = ops_.div(tab_(i, j) * p - f * tab_(prow, j), den_);
            }
        }
        den_ = p;
        den_sign_ = static_cast<int>(ops_.sign(p));
        basis_[prow] = pcol - 1;
    }

    // Bland: entering = smallest variable index with negative reduced cost.
    // Returns 0 when optimal. `limit` bounds the eligible columns (used to
    // ban artificials in phase 2).
    std::size_t entering(std::size_t limit) {
        for (std::size_t j = 1; j <= limit; ++j) {
            if (tab_(obj_row(), j) == Ring(0)) continue;
            if (value_sign(tab_(obj_row(), j)) < 0) return j;
        }
        return 0;
    }

    // Bland leaving row for entering column c; rows with positive entry,
    // minimal ratio, ties by smallest basic variable index.
    bool leaving(std::size_t pcol, std::size_t& out) {
        bool found = false;
        std::size_t best = 0;
        for (std::size_t i = 0; i + 1 < tab_.rows(); ++i) {
            if (tab_(i, pcol) == Ring(0)) continue;
            if (value_sign(tab_(i, pcol)) <= 0) continue;
            if (!found) {
                best = i;
                found = true;
                continue;
            }
            Sign cmp = ops_.sign(tab_(i, 0) * tab_(best, pcol) - tab_(best, 0) * tab_(i, pcol));
            if (cmp == Sign::Negative ||
                (cmp == Sign::Zero && basis_[i] < basis_[best]))
                best = i;
        }
        out = best;
        return found;
    }

    bool iterate(std::size_t limit) {
        const std::size_t guard = 1000 + 200 * tab_.rows() * ncols();
        for (std::size_t it = 0; it < guard; ++it) {
            std::size_t col = entering(limit);
            if (col == 0) return true; // optimal
            std::size_t row;
            if (!leaving(col, row)) return false; // unbounded
            pivot(row, col);
        }
        throw std::logic_error("simplex failed to terminate (Bland guard tripped)");
    }

    void run_phase1() {
        const std::size_t m = tab_.rows() - 1;
        // objective row for maximize -(sum of artificials) under the
        // artificial basis: negated column sums, zero on artificial columns
        for (std::size_t j = 0; j <= nvars_; ++j) {
            Ring s(0);
            for (std::size_t i = 0; i < m; ++i) s += tab_(i, j);
            tab_(obj_row(), j) = -s;
        }
        if (!iterate(nvars_ + m)) throw std::logic_error("phase 1 unbounded");
        int s = value_sign(tab_(obj_row(), 0));
        if (s < 0) {
            infeasible_ = true;
            return;
        }
        if (s > 0) throw std::logic_error("phase 1 optimum positive");
        // drive basic artificials out at level zero, dropping redundant rows
        for (std::size_t i = 0; i + 1 < tab_.rows();) {
            if (basis_[i] < nvars_) {
                ++i;
                continue;
            }
            std::size_t col = 0;
            bool straddle = false;
            for (std::size_t j = 1; j <= nvars_; ++j) {
                if (tab_(i, j) == Ring(0)) continue;
                try {
                    (void)ops_.sign(tab_(i, j));
                    col = j;
                    break;
                } catch (const PrecisionExhausted&) {
                    straddle = true;
                }
            }
            if (col != 0) {
                pivot(i, col);
                ++i;
            } else if (straddle) {
                throw PrecisionExhausted("simplex: cannot certify pivot while removing artificial");
            } else {
                erase_row(i);
            }
        }
    }

    void erase_row(std::size_t row) {
        Matrix<Ring> nt(tab_.rows() - 1, ncols());
        std::size_t k = 0;
        for (std::size_t i = 0; i < tab_.rows(); ++i) {
            if (i == row) continue;
            for (std::size_t j = 0; j < ncols(); ++j) nt(k, j) = tab_(i, j);
            ++k;
        }
        tab_ = std::move(nt);
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(row));
    }

    void drop_artificials() {
        Matrix<Ring> nt(tab_.rows(), 1 + nvars_);
        for (std::size_t i = 0; i < tab_.rows(); ++i)
            for (std::size_t j = 0; j <= nvars_; ++j) nt(i, j) = tab_(i, j);
        tab_ = std::move(nt);
    }

    void install_objective(const std::vector<Ring>& c) {
        const std::size_t m = tab_.rows() - 1;
        for (std::size_t j = 0; j < ncols(); ++j) {
            Ring z(0);
            for (std::size_t i = 0; i < m; ++i) {
                if (basis_[i] < nvars_ && c[basis_[i]] != Ring(0)) z += c[basis_[i]] * tab_(i, j);
            }
            if (j >= 1) z -= c[j - 1] * den_;
            tab_(obj_row(), j) = z;
        }
    }
};

template <class Ring, class Ops>
SimplexResult<Ring> solve_lp(Matrix<Ring> a, std::vector<Ring> b, std::vector<Ring> c, Ops ops) {
    FractionFreeSimplex<Ring, Ops> s(std::move(a), std::move(b), std::move(c), ops);
    return s.solve();
}

} // namespace lvmb

#endif
