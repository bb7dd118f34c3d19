#include "lvmb/normalization.hpp"

namespace lvmb {

ComplexMatrix canonical_subgroup_matrix(int m) {
    ComplexMatrix a{SymMatrix(2 * m, m, SymbolicReal()), SymMatrix(2 * m, m, SymbolicReal())};
    for (int j = 0; j < m; ++j) {
        a.re(j, j) = SymbolicReal(Rational(1));
        a.im(m + j, j) = SymbolicReal(Rational(1));
    }
    return a;
}

namespace {

bool all_integer(const Configuration& config) {
    for (const auto& p : config.points)
        for (const auto& c : p) {
            if (!c.is_rational()) return false;
            if (denominator(c.rational_value()) != 1) return false;
        }
    return true;
}

SymMatrix assemble_m_with_rows(const std::vector<std::vector<SymbolicReal>>& rows) {
    const std::size_t d = rows.size();
    SymMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) = rows[i][j];
    return m;
}

// Affine coordinate of `target` w.r.t. base point and direction columns:
// solve dirs * c = target - base using a square row subsystem picked by the
// rank profile, then verify the remaining rows exactly.
std::vector<SymFrac> affine_coordinates(const SymMatrix& dirs,
                                        const std::vector<SymbolicReal>& rhs,
                                        const std::vector<std::size_t>& pivot_rows,
                                        const GeneratorTable& table) {
    const std::size_t s = dirs.cols();
    SymMatrix sq(s, s);
    std::vector<SymbolicReal> sb(s);
    for (std::size_t r = 0; r < s; ++r) {
        for (std::size_t j = 0; j < s; ++j) sq(r, j) = dirs(pivot_rows[r], j);
        sb[r] = rhs[pivot_rows[r]];
    }
    std::vector<SymFrac> c = sym_solve(sq, sb, table);
    // consistency on the rows left out
    for (std::size_t r = 0; r < dirs.rows(); ++r) {
        SymFrac acc;
        for (std::size_t j = 0; j < s; ++j) acc = acc + c[j] * SymFrac(dirs(r, j));
        SymFrac residual = acc - SymFrac(rhs[r]);
        if (!residual.is_zero()) {
            if (sign_of(residual, table) != Sign::Zero)
                throw std::logic_error("affine_coordinates: point outside the affine hull");
        }
    }
    return c;
}

// Pivot-row profile of a column-full-rank symbolic matrix.
std::vector<std::size_t> row_profile(const SymMatrix& m, const GeneratorTable& table) {
    SymMatrix w = m;
    const std::size_t rows = w.rows(), cols = w.cols();
    std::vector<std::size_t> rowperm(rows);
    for (std::size_t i = 0; i < rows; ++i) rowperm[i] = i;
    SymbolicReal prev(Rational(1));
    std::vector<std::size_t> profile;
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
            if (straddle) throw PrecisionExhausted("row_profile: pivot sign not certified");
            throw std::logic_error("row_profile: matrix not of full column rank");
        }
        w.swap_rows(r, pivot);
        std::swap(rowperm[r], rowperm[pivot]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                w(i, j) = SymbolicReal::exact_div(w(i, j) * w(r, c) - w(i, c) * w(r, j), prev);
            w(i, c) = SymbolicReal();
        }
        prev = w(r, c);
        profile.push_back(rowperm[r]);
        ++r;
    }
    return profile;
}

enum class CoordKind { Rational, Irrational, Undecided };

CoordKind classify_coordinate(const SymFrac& c, Rational& value, const GeneratorTable& table) {
    if (c.is_rational()) {
        value = c.as_rational();
        return CoordKind::Rational;
    }
    if (c.is_symbolic_real()) {
        SymbolicReal x = c.as_symbolic_real();
        if (x.is_rational()) {
            value = x.rational_value();
            return CoordKind::Rational;
        }
        // nonzero coefficients on generators: irrational by the declared
        // Q-linear independence, exactly in the linear case
        if (x.is_linear()) return CoordKind::Irrational;
        return CoordKind::Undecided;
    }
    // symbolic denominator: rational iff formally proportional
    const auto& dt = c.den.terms();
    const auto& nt = c.num.terms();
    if (!nt.empty() && nt.size() == dt.size()) {
        Rational r = nt.back().coeff / dt.back().coeff;
        SymbolicReal residual = c.num - SymbolicReal(r) * c.den;
        if (residual.is_zero()) {
            value = r;
            return CoordKind::Rational;
        }
    }
    (void)table;
    return CoordKind::Undecided;
}

} // namespace

std::optional<Normalization> check_condition_K(const Configuration& config) {
    const int m = config.m, n = config.n;
    const std::size_t dim = static_cast<std::size_t>(2 * m);
    const GeneratorTable& table = config.table;

    if (all_integer(config)) {
        Normalization norm;
        norm.lambda = IntMatrix(n + 1, dim);
        for (int i = 0; i <= n; ++i)
            for (std::size_t d = 0; d < dim; ++d)
                norm.lambda(i, d) = numerator(config.points[i][d].rational_value());
        norm.m_matrix = to_symbolic(to_rational(IntMatrix::identity(dim)));
        norm.b.assign(dim, SymbolicReal());
        norm.a.re = SymMatrix(dim, m);
        norm.a.im = SymMatrix(dim, m);
        for (std::size_t r = 0; r < dim; ++r)
            for (int j = 0; j < m; ++j) {
                norm.a.re(r, j) = norm.m_matrix(r, j);
                norm.a.im(r, j) = norm.m_matrix(r, m + j);
            }
        return norm;
    }

    // greedy maximal affinely independent subset, scanning by index
    std::vector<int> base{0};
    std::vector<std::vector<SymbolicReal>> dirs; // direction vectors, rows
    for (int i = 1; i <= n; ++i) {
        std::vector<SymbolicReal> d(dim);
        for (std::size_t c = 0; c < dim; ++c) d[c] = config.points[i][c] - config.points[0][c];
        SymMatrix trial(dirs.size() + 1, dim);
        for (std::size_t r = 0; r < dirs.size(); ++r)
            for (std::size_t c = 0; c < dim; ++c) trial(r, c) = dirs[r][c];
        for (std::size_t c = 0; c < dim; ++c) trial(dirs.size(), c) = d[c];
        if (rank(trial, table) == dirs.size() + 1) {
            dirs.push_back(std::move(d));
            base.push_back(i);
            if (dirs.size() == dim) break;
        }
    }
    const std::size_t s = dirs.size(); // affine dimension of the point set

    // affine coordinates of every point w.r.t. the base; all must be rational
    RatMatrix coords(n + 1, s ? s : 1);
    if (s > 0) {
        SymMatrix dmat(dim, s); // columns = directions
        for (std::size_t j = 0; j < s; ++j)
            for (std::size_t c = 0; c < dim; ++c) dmat(c, j) = dirs[j][c];
        std::vector<std::size_t> profile = row_profile(dmat, table);
        for (int i = 0; i <= n; ++i) {
            std::vector<SymbolicReal> rhs(dim);
            for (std::size_t c = 0; c < dim; ++c) rhs[c] = config.points[i][c] - config.points[0][c];
            std::vector<SymFrac> c = affine_coordinates(dmat, rhs, profile, table);
            for (std::size_t j = 0; j < s; ++j) {
                Rational value;
                switch (classify_coordinate(c[j], value, table)) {
                    case CoordKind::Rational:
                        coords(i, j) = value;
                        break;
                    case CoordKind::Irrational:
                        return std::nullopt;
                    case CoordKind::Undecided:
                        throw PrecisionExhausted(
                            "condition (K): affine coordinate rationality undecided");
                }
            }
        }
    }

    // clear denominators column by column
    std::vector<Int> scale(s, Int(1));
    for (std::size_t j = 0; j < s; ++j)
        for (int i = 0; i <= n; ++i) scale[j] = lcm(scale[j], denominator(coords(i, j)));

    Normalization norm;
    norm.lambda = IntMatrix(n + 1, dim, Int(0));
    for (int i = 0; i <= n; ++i)
        for (std::size_t j = 0; j < s; ++j)
            norm.lambda(i, j) = numerator(coords(i, j)) * (scale[j] / denominator(coords(i, j)));

    // reduce columns by their content where possible
    for (std::size_t j = 0; j < s; ++j) {
        std::vector<Int> col(n + 1);
        for (int i = 0; i <= n; ++i) col[i] = norm.lambda(i, j);
        Int g = content(col);
        if (g > 1) {
            for (int i = 0; i <= n; ++i) norm.lambda(i, j) /= g;
            scale[j] /= g; // may turn rational; fold into the row scale below
        }
    }

    // rows of M: scaled directions, then integer vectors completing the rank
    std::vector<std::vector<SymbolicReal>> mrows;
    for (std::size_t j = 0; j < s; ++j) {
        std::vector<SymbolicReal> row(dim);
        for (std::size_t c = 0; c < dim; ++c)
            row[c] = SymbolicReal::exact_div(dirs[j][c], SymbolicReal(Rational(scale[j])));
        mrows.push_back(std::move(row));
    }
    for (std::size_t e = 0; e < dim && mrows.size() < dim; ++e) {
        std::vector<SymbolicReal> row(dim);
        row[e] = SymbolicReal(Rational(1));
        SymMatrix trial(mrows.size() + 1, dim);
        for (std::size_t r = 0; r < mrows.size(); ++r)
            for (std::size_t c = 0; c < dim; ++c) trial(r, c) = mrows[r][c];
        for (std::size_t c = 0; c < dim; ++c) trial(mrows.size(), c) = row[c];
        if (rank(trial, table) == mrows.size() + 1) mrows.push_back(std::move(row));
    }
    if (mrows.size() != dim) throw std::logic_error("condition (K): could not complete M to full rank");
    norm.m_matrix = assemble_m_with_rows(mrows);
    norm.b.assign(dim, SymbolicReal());
    for (std::size_t c = 0; c < dim; ++c) norm.b[c] = config.points[0][c];

    // fold the integer part of b (in M-coordinates) into lambda
    {
        SymMatrix mt = norm.m_matrix.transposed();
        std::vector<SymFrac> x = sym_solve(mt, norm.b, table); // b = x * M
        bool rationals = true;
        std::vector<Rational> xv(dim);
        for (std::size_t c = 0; c < dim; ++c) {
            Rational value;
            if (classify_coordinate(x[c], value, table) == CoordKind::Rational)
                xv[c] = value;
            else
                rationals = false;
        }
        if (rationals) {
            std::vector<Int> u(dim);
            bool nonzero = false;
            for (std::size_t c = 0; c < dim; ++c) {
                u[c] = floor_rational(xv[c]);
                if (u[c] != 0) nonzero = true;
            }
            if (nonzero) {
                for (int i = 0; i <= n; ++i)
                    for (std::size_t c = 0; c < dim; ++c) norm.lambda(i, c) += u[c];
                for (std::size_t c = 0; c < dim; ++c) {
                    SymbolicReal shift;
                    for (std::size_t r = 0; r < dim; ++r)
                        shift += SymbolicReal(Rational(u[r])) * norm.m_matrix(r, c);
                    norm.b[c] = norm.b[c] - shift;
                }
            }
        }
    }

    norm.a.re = SymMatrix(dim, m);
    norm.a.im = SymMatrix(dim, m);
    for (std::size_t r = 0; r < dim; ++r)
        for (int j = 0; j < m; ++j) {
            norm.a.re(r, j) = norm.m_matrix(r, j);
            norm.a.im(r, j) = norm.m_matrix(r, m + j);
        }

    if (!verify_normalization(config, norm))
        throw std::logic_error("condition (K): constructed normalization failed re-verification");
    return norm;
}

bool verify_normalization(const Configuration& config, const Normalization& norm) {
    const std::size_t dim = static_cast<std::size_t>(2 * config.m);
    if (norm.lambda.rows() != config.points.size() || norm.lambda.cols() != dim) return false;
    if (norm.m_matrix.rows() != dim || norm.m_matrix.cols() != dim) return false;
    if (determinant(norm.m_matrix).is_zero()) return false;
    for (std::size_t i = 0; i < config.points.size(); ++i)
        for (std::size_t c = 0; c < dim; ++c) {
            SymbolicReal acc = norm.b[c];
            for (std::size_t r = 0; r < dim; ++r)
                acc += SymbolicReal(Rational(norm.lambda(i, r))) * norm.m_matrix(r, c);
            if (!(acc == config.points[i][c])) return false;
        }
    // (Re A | Im A) = M
    for (std::size_t r = 0; r < dim; ++r)
        for (int j = 0; j < config.m; ++j) {
            if (!(norm.a.re(r, j) == norm.m_matrix(r, j))) return false;
            if (!(norm.a.im(r, j) == norm.m_matrix(r, config.m + j))) return false;
        }
    return true;
}

bool cocompact_closed(const ComplexMatrix& a, const GeneratorTable& table) {
    const std::size_t rows = a.re.rows();
    const std::size_t m = a.re.cols();
    if (a.im.rows() != rows || a.im.cols() != m)
        throw std::invalid_argument("cocompact_closed: Re/Im shape mismatch");
    // full column rank over C: the realification [[Re, -Im], [Im, Re]] must
    // have rank 2m
    SymMatrix real(2 * rows, 2 * m);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            real(i, j) = a.re(i, j);
            real(i, m + j) = -a.im(i, j);
            real(rows + i, j) = a.im(i, j);
            real(rows + i, m + j) = a.re(i, j);
        }
    if (rank(real, table) != 2 * m)
        throw std::invalid_argument("cocompact_closed: A does not have full column rank over C");

    SymMatrix side(rows, 2 * m);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            side(i, j) = a.re(i, j);
            side(i, m + j) = a.im(i, j);
        }
    if (side.rows() != side.cols())
        throw std::invalid_argument("cocompact_closed: A must be 2m x m");
    SymbolicReal det = determinant(side);
    if (det.is_zero()) return false;
    (void)sign_of(det, table); // certify nonzero or throw
    return true;
}

std::vector<Point2m> restrict_action(const IntMatrix& lambda, const ComplexMatrix& a,
                                     const GeneratorTable& table) {
    if (!cocompact_closed(a, table))
        throw std::invalid_argument("restrict_action: subgroup is not closed");
    const std::size_t dim = lambda.cols();
    const std::size_t m = a.re.cols();
    if (a.re.rows() != dim) throw std::invalid_argument("restrict_action: shape mismatch");
    std::vector<Point2m> out;
    out.reserve(lambda.rows());
    for (std::size_t i = 0; i < lambda.rows(); ++i) {
        Point2m p(2 * m);
        for (std::size_t j = 0; j < m; ++j) {
            SymbolicReal re, im;
            for (std::size_t c = 0; c < dim; ++c) {
                SymbolicReal w{Rational(lambda(i, c))};
                re += w * a.re(c, j);
                im += w * a.im(c, j);
            }
            p[j] = re;
            p[m + j] = im;
        }
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace lvmb
