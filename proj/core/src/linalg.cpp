#include "lvmb/linalg.hpp"

namespace lvmb {

Sign sign_of(const SymFrac& x, const GeneratorTable& table) {
    Sign n = sign_of(x.num, table);
    if (n == Sign::Zero) return Sign::Zero;
    Sign d = sign_of(x.den, table);
    return n == d ? Sign::Positive : Sign::Negative;
}

RatVector rat_solve(const RatMatrix& a, const RatVector& b) {
    if (a.rows() != a.cols()) throw std::invalid_argument("rat_solve: matrix not square");
    if (b.size() != a.rows()) throw std::invalid_argument("rat_solve: rhs size mismatch");
    const std::size_t n = a.rows();
    RatMatrix w = a;
    RatVector x = b;
    std::vector<std::size_t> perm(n);
    for (std::size_t j = 0; j < n; ++j) perm[j] = j;

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && w(p, k) == 0) ++p;
        if (p == n) throw SingularMatrix();
        w.swap_rows(k, p);
        std::swap(x[k], x[p]);
        Rational piv = w(k, k);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || w(i, k) == 0) continue;
            Rational f = w(i, k) / piv;
            for (std::size_t j = k; j < n; ++j) w(i, j) -= f * w(k, j);
            x[i] -= f * x[k];
        }
    }
    for (std::size_t k = 0; k < n; ++k) x[k] /= w(k, k);
    return x;
}

std::size_t rank(const RatMatrix& m) {
    RatMatrix w = m;
    const std::size_t rows = w.rows(), cols = w.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && w(p, c) == 0) ++p;
        if (p == rows) continue;
        w.swap_rows(r, p);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (w(i, c) == 0) continue;
            Rational f = w(i, c) / w(r, c);
            for (std::size_t j = c; j < cols; ++j) w(i, j) -= f * w(r, j);
        }
        ++r;
    }
    return r;
}

std::size_t rank(const SymMatrix& m, const GeneratorTable& table) {
    SymMatrix w = m;
    const std::size_t rows = w.rows(), cols = w.cols();
    SymbolicReal prev(Rational(1));
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = rows;
        bool straddle = false;
        for (std::size_t i = r; i < rows; ++i) {
            if (w(i, c).is_zero()) continue;
            try {
                (void)sign_of(w(i, c), table);
                pivot = i;
                break;
            } catch (const PrecisionExhausted&) {
                straddle = true;
            }
        }
        if (pivot == rows) {
            if (straddle)
                throw PrecisionExhausted("rank: no certifiable pivot in column " + std::to_string(c));
            continue;
        }
        w.swap_rows(r, pivot);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                w(i, j) = SymbolicReal::exact_div(w(i, j) * w(r, c) - w(i, c) * w(r, j), prev);
            w(i, c) = SymbolicReal();
        }
        prev = w(r, c);
        ++r;
    }
    return r;
}

SymbolicReal determinant(const SymMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return SymbolicReal(Rational(1));
    SymMatrix a = m;
    SymbolicReal prev(Rational(1));
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a(p, k).is_zero()) ++p;
            if (p == n) return SymbolicReal();
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = SymbolicReal::exact_div(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
            a(i, k) = SymbolicReal();
        }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

std::vector<SymFrac> sym_solve(const SymMatrix& a, const std::vector<SymbolicReal>& b,
                               const GeneratorTable& table) {
    if (a.rows() != a.cols()) throw std::invalid_argument("sym_solve: matrix not square");
    if (b.size() != a.rows()) throw std::invalid_argument("sym_solve: rhs size mismatch");
    const std::size_t n = a.rows();
    SymbolicReal det = determinant(a);
    if (det.is_zero()) throw SingularMatrix("sym_solve: formally singular system");
    (void)sign_of(det, table); // certify nonzero or throw PrecisionExhausted
    std::vector<SymFrac> x;
    x.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        SymMatrix aj = a;
        for (std::size_t i = 0; i < n; ++i) aj(i, j) = b[i];
        x.emplace_back(determinant(aj), det);
    }
    return x;
}

} // namespace lvmb
