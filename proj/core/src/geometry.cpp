#include "lvmb/geometry.hpp"

#include <algorithm>

namespace lvmb {

SimplexSpec simplex_of(const Configuration& config, std::size_t alpha) {
    SimplexSpec s;
    s.vertex_indices = config.family.sets.at(alpha);
    s.vertices.reserve(s.vertex_indices.size());
    for (int i : s.vertex_indices) s.vertices.push_back(config.points.at(i));
    return s;
}

std::size_t affine_dimension(const std::vector<Point2m>& points, const GeneratorTable& table) {
    if (points.empty()) throw std::invalid_argument("affine_dimension: empty point list");
    const std::size_t dim = points[0].size();
    if (points.size() == 1) return 0;

    bool rational = true;
    for (const auto& p : points)
        for (const auto& c : p)
            if (!c.is_rational()) {
                rational = false;
                break;
            }

    if (rational) {
        RatMatrix diff(points.size() - 1, dim);
        for (std::size_t i = 1; i < points.size(); ++i)
            for (std::size_t d = 0; d < dim; ++d)
                diff(i - 1, d) = points[i][d].rational_value() - points[0][d].rational_value();
        return rank(diff);
    }
    SymMatrix diff(points.size() - 1, dim);
    for (std::size_t i = 1; i < points.size(); ++i)
        for (std::size_t d = 0; d < dim; ++d) diff(i - 1, d) = points[i][d] - points[0][d];
    return rank(diff, table);
}

namespace {

bool all_rational(const std::vector<SimplexSpec>& simplices) {
    for (const auto& s : simplices)
        for (const auto& v : s.vertices)
            for (const auto& c : v)
                if (!c.is_rational()) return false;
    return true;
}

// rows: (2m per extra simplex) combination-equality rows, then one
// sum-to-one row per simplex; columns: coefficients simplex by simplex.
template <class S, class GetCoord>
void assemble_relint(const std::vector<SimplexSpec>& simplices, Matrix<S>& a, std::vector<S>& b,
                     GetCoord coord) {
    const std::size_t q = simplices.size();
    const std::size_t dim = simplices[0].vertices.at(0).size();
    std::vector<std::size_t> offset(q + 1, 0);
    for (std::size_t al = 0; al < q; ++al)
        offset[al + 1] = offset[al] + simplices[al].vertices.size();
    const std::size_t nvars = offset[q];
    const std::size_t rows = (q - 1) * dim + q;
    a = Matrix<S>(rows, nvars, S(0));
    b.assign(rows, S(0));
    for (std::size_t al = 1; al < q; ++al)
        for (std::size_t d = 0; d < dim; ++d) {
            const std::size_t r = (al - 1) * dim + d;
            for (std::size_t i = 0; i < simplices[0].vertices.size(); ++i)
                a(r, offset[0] + i) = coord(simplices[0].vertices[i][d]);
            for (std::size_t i = 0; i < simplices[al].vertices.size(); ++i)
                a(r, offset[al] + i) = -coord(simplices[al].vertices[i][d]);
        }
    for (std::size_t al = 0; al < q; ++al) {
        const std::size_t r = (q - 1) * dim + al;
        for (std::size_t i = 0; i < simplices[al].vertices.size(); ++i)
            a(r, offset[al] + i) = S(1);
        b[r] = S(1);
    }
}

} // namespace

RelintResult relint_common_point(const std::vector<SimplexSpec>& simplices,
                                 const GeneratorTable& table) {
    if (simplices.empty()) throw std::invalid_argument("relint_common_point: no simplices");
    const std::size_t dim = simplices[0].vertices.at(0).size();
    for (const auto& s : simplices) {
        if (s.vertices.size() != s.vertex_indices.size())
            throw std::invalid_argument("SimplexSpec: index/vertex count mismatch");
        for (const auto& v : s.vertices)
            if (v.size() != dim) throw std::invalid_argument("simplices in different ambient spaces");
    }

    RelintResult out;
    const std::size_t q = simplices.size();
    std::vector<std::size_t> offset(q + 1, 0);
    for (std::size_t al = 0; al < q; ++al)
        offset[al + 1] = offset[al] + simplices[al].vertices.size();

    std::vector<std::size_t> nonneg(offset[q]);
    for (std::size_t j = 0; j < nonneg.size(); ++j) nonneg[j] = j;

    if (all_rational(simplices)) {
        RatMatrix a;
        RatVector b;
        assemble_relint(simplices, a, b, [](const SymbolicReal& c) { return c.rational_value(); });
        RatLpOutcome lp = lp_max_slack(a, b, nonneg);
        out.lp_feasible = lp.feasible;
        if (!lp.feasible) return out;
        out.slack = SymFrac(SymbolicReal(lp.optimal_slack));
        out.found = lp.optimal_slack > 0;
        out.coefficients.resize(q);
        for (std::size_t al = 0; al < q; ++al)
            for (std::size_t i = offset[al]; i < offset[al + 1]; ++i)
                out.coefficients[al].emplace_back(SymbolicReal(lp.witness[i]));
        out.point.assign(dim, SymFrac());
        for (std::size_t d = 0; d < dim; ++d) {
            Rational x(0);
            for (std::size_t i = 0; i < simplices[0].vertices.size(); ++i)
                x += lp.witness[offset[0] + i] * simplices[0].vertices[i][d].rational_value();
            out.point[d] = SymFrac(SymbolicReal(x));
        }
        return out;
    }

    SymMatrix a;
    std::vector<SymbolicReal> b;
    assemble_relint(simplices, a, b, [](const SymbolicReal& c) { return c; });
    LpOutcome lp = lp_max_slack(a, b, nonneg, table);
    out.lp_feasible = lp.feasible;
    if (!lp.feasible) return out;
    out.slack = lp.optimal_slack;
    out.found = sign_of(lp.optimal_slack, table) == Sign::Positive;
    out.coefficients.resize(q);
    for (std::size_t al = 0; al < q; ++al)
        for (std::size_t i = offset[al]; i < offset[al + 1]; ++i)
            out.coefficients[al].push_back(lp.witness[i]);
    out.point.assign(dim, SymFrac());
    for (std::size_t d = 0; d < dim; ++d) {
        SymFrac x;
        for (std::size_t i = 0; i < simplices[0].vertices.size(); ++i)
            x = x + lp.witness[offset[0] + i] * SymFrac(simplices[0].vertices[i][d]);
        out.point[d] = x;
    }
    return out;
}

bool verify_relint(const std::vector<SimplexSpec>& simplices, const RelintResult& result,
                   const GeneratorTable& table) {
    if (!result.found) return false;
    const std::size_t dim = simplices[0].vertices[0].size();
    for (std::size_t al = 0; al < simplices.size(); ++al) {
        const auto& coeffs = result.coefficients[al];
        if (coeffs.size() != simplices[al].vertices.size()) return false;
        SymFrac sum;
        for (const auto& c : coeffs) {
            if (sign_of(c, table) != Sign::Positive) return false;
            sum = sum + c;
        }
        if (!sum.equals(SymFrac(SymbolicReal(Rational(1))))) return false;
        for (std::size_t d = 0; d < dim; ++d) {
            SymFrac x;
            for (std::size_t i = 0; i < coeffs.size(); ++i)
                x = x + coeffs[i] * SymFrac(simplices[al].vertices[i][d]);
            if (!x.equals(result.point[d])) return false;
        }
    }
    return true;
}

SepResult check_sep(const Configuration& config) {
    SepResult out;
    const std::size_t count = config.family.sets.size();
    std::vector<SimplexSpec> simplices;
    simplices.reserve(count);
    for (std::size_t a = 0; a < count; ++a) simplices.push_back(simplex_of(config, a));

    for (std::size_t a = 0; a < count; ++a)
        if (affine_dimension(simplices[a].vertices, config.table) !=
            static_cast<std::size_t>(2 * config.m)) {
            out.degenerate_simplex = a;
            return out;
        }
    for (std::size_t a = 0; a < count; ++a)
        for (std::size_t b = a + 1; b < count; ++b) {
            RelintResult r = relint_common_point({simplices[a], simplices[b]}, config.table);
            if (!r.found) {
                out.failing_pair = std::make_pair(a, b);
                return out;
            }
        }
    out.holds = true;
    return out;
}

LvmResult check_lvm(const Configuration& config) {
    LvmResult out;
    const std::size_t count = config.family.sets.size();
    std::vector<SimplexSpec> simplices;
    simplices.reserve(count);
    for (std::size_t a = 0; a < count; ++a) simplices.push_back(simplex_of(config, a));
    for (std::size_t a = 0; a < count; ++a)
        if (affine_dimension(simplices[a].vertices, config.table) !=
            static_cast<std::size_t>(2 * config.m)) {
            out.degenerate_simplex = a;
            return out;
        }
    out.witness = relint_common_point(simplices, config.table);
    out.holds = out.witness.found;
    return out;
}

} // namespace lvmb
