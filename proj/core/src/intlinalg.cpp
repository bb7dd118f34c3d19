#include "lvmb/intlinalg.hpp"

#include <cstdlib>

namespace lvmb {

namespace {

Int iabs(const Int& x) { return x < 0 ? Int(-x) : x; }

// Smallest nonzero |entry| in m(s.., s..); false if that block is zero.
bool locate_min_pivot(const IntMatrix& m, std::size_t s, std::size_t& pr, std::size_t& pc) {
    bool found = false;
    Int best;
    for (std::size_t i = s; i < m.rows(); ++i)
        for (std::size_t j = s; j < m.cols(); ++j) {
            if (m(i, j) == 0) continue;
            Int a = iabs(m(i, j));
            if (!found || a < best) {
                best = a;
                pr = i;
                pc = j;
                found = true;
            }
        }
    return found;
}

} // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    const std::size_t r = m.rows(), c = m.cols();
    SmithDecomposition d{IntMatrix::identity(r), m, IntMatrix::identity(c)};
    IntMatrix& s = d.s;
    const std::size_t nmin = std::min(r, c);

    for (std::size_t k = 0; k < nmin; ++k) {
        std::size_t pr, pc;
        if (!locate_min_pivot(s, k, pr, pc)) break; // rest of the matrix is zero
        s.swap_rows(k, pr);
        d.u.swap_rows(k, pr);
        s.swap_cols(k, pc);
        d.v.swap_cols(k, pc);

        for (;;) {
            bool clean = true;
            for (std::size_t i = k + 1; i < r; ++i) {
                if (s(i, k) == 0) continue;
                Int q = floor_div(s(i, k), s(k, k));
                if (q != 0) {
                    s.add_row(i, k, -q);
                    d.u.add_row(i, k, -q);
                }
                if (s(i, k) != 0) {
                    // remainder became the smaller pivot
                    s.swap_rows(k, i);
                    d.u.swap_rows(k, i);
                    clean = false;
                }
            }
            for (std::size_t j = k + 1; j < c; ++j) {
                if (s(k, j) == 0) continue;
                Int q = floor_div(s(k, j), s(k, k));
                if (q != 0) {
                    s.add_col(j, k, -q);
                    d.v.add_col(j, k, -q);
                }
                if (s(k, j) != 0) {
                    s.swap_cols(k, j);
                    d.v.swap_cols(k, j);
                    clean = false;
                }
            }
            if (!clean) continue;

            if (s(k, k) < 0) {
                s.negate_row(k);
                d.u.negate_row(k);
            }
            // divisibility of the trailing block by the pivot
            bool divides = true;
            for (std::size_t i = k + 1; i < r && divides; ++i)
                for (std::size_t j = k + 1; j < c && divides; ++j)
                    if (s(i, j) % s(k, k) != 0) {
                        // fold the offending row into row k and restart
                        s.add_row(k, i, 1);
                        d.u.add_row(k, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }
    }
    return d;
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
    IntMatrix h = m;
    const std::size_t r = h.rows(), c = h.cols();
    std::size_t row = 0;
    for (std::size_t col = 0; col < c && row < r; ++col) {
        // clear below (row, col) via Euclid on rows, choosing the smallest
        // nonzero entry as pivot each sweep
        for (;;) {
            std::size_t pivot = r;
            for (std::size_t i = row; i < r; ++i) {
                if (h(i, col) == 0) continue;
                if (pivot == r || iabs(h(i, col)) < iabs(h(pivot, col))) pivot = i;
            }
            if (pivot == r) break; // column zero from `row` down
            h.swap_rows(row, pivot);
            bool cleared = true;
            for (std::size_t i = row + 1; i < r; ++i) {
                if (h(i, col) == 0) continue;
                Int q = floor_div(h(i, col), h(row, col));
                h.add_row(i, row, -q);
                if (h(i, col) != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (row < r && h(row, col) != 0) {
            if (h(row, col) < 0) h.negate_row(row);
            for (std::size_t i = 0; i < row; ++i) {
                Int q = floor_div(h(i, col), h(row, col));
                if (q != 0) h.add_row(i, row, -q);
            }
            ++row;
        }
    }
    return h;
}

IntMatrix saturated_kernel(const IntMatrix& m) {
    SmithDecomposition d = smith_normal_form(m);
    std::size_t rk = 0;
    const std::size_t nmin = std::min(d.s.rows(), d.s.cols());
    while (rk < nmin && d.s(rk, rk) != 0) ++rk;
    // x^T m = 0  <=>  x^T = y^T U with y supported on the zero rows of S.
    IntMatrix basis(m.rows() - rk, m.rows());
    for (std::size_t i = rk; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.rows(); ++j) basis(i - rk, j) = d.u(i, j);
    return hermite_normal_form(basis);
}

std::size_t rank(const IntMatrix& m) {
    SmithDecomposition d = smith_normal_form(m);
    std::size_t rk = 0;
    const std::size_t nmin = std::min(d.s.rows(), d.s.cols());
    while (rk < nmin && d.s(rk, rk) != 0) ++rk;
    return rk;
}

Int determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    // Bareiss fraction-free elimination
    IntMatrix a = m;
    Int prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

Int content(const std::vector<Int>& v) {
    Int g(0);
    for (const Int& x : v) g = gcd(g, x);
    return g < 0 ? Int(-g) : g;
}

} // namespace lvmb
