#include "lvmb/lp.hpp"

#include <limits>

namespace lvmb {

Int to_int(const CheckedInt& x) {
    bool neg = x.v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(x.v) : static_cast<unsigned __int128>(x.v);
    Int r(static_cast<unsigned long long>(u >> 64));
    r <<= 64;
    r += static_cast<unsigned long long>(u);
    return neg ? Int(-r) : r;
}

CheckedInt to_checked(const Int& x) {
    static const Int kMax = (Int(1) << 126); // headroom below the true limit
    if (x >= kMax || x <= -kMax) throw ArithmeticOverflow();
    bool neg = x < 0;
    Int a = neg ? Int(-x) : x;
    unsigned __int128 u = static_cast<unsigned long long>(a >> 64);
    u <<= 64;
    u |= static_cast<unsigned long long>(a & Int(std::numeric_limits<unsigned long long>::max()));
    CheckedInt c;
    c.v = neg ? -static_cast<__int128>(u) : static_cast<__int128>(u);
    return c;
}

namespace {

// A x = b, x_j >= t (j in nonneg), t <= 1  -->  standard form over columns
// [mu_j (j in nonneg)] [p_j, q_j (j free)] [s], with x_j = mu_j + t,
// x_free = p - q, t = 1 - s; objective: maximize -s.
template <class S>
struct SlackForm {
    Matrix<S> a;
    std::vector<S> b;
    std::vector<S> c;
    std::vector<std::size_t> nonneg; // sorted
    std::vector<std::size_t> free_vars;
    std::size_t s_col = 0;
};

template <class S>
SlackForm<S> build_slack_form(const Matrix<S>& a, const std::vector<S>& b,
                              const std::vector<std::size_t>& nonneg_vars) {
    const std::size_t rows = a.rows(), n = a.cols();
    SlackForm<S> f;
    f.nonneg = nonneg_vars;
    std::sort(f.nonneg.begin(), f.nonneg.end());
    std::vector<bool> is_nonneg(n, false);
    for (std::size_t j : f.nonneg) {
        if (j >= n) throw std::invalid_argument("nonneg variable index out of range");
        is_nonneg[j] = true;
    }
    for (std::size_t j = 0; j < n; ++j)
        if (!is_nonneg[j]) f.free_vars.push_back(j);

    const std::size_t cols = f.nonneg.size() + 2 * f.free_vars.size() + 1;
    f.s_col = cols - 1;
    f.a = Matrix<S>(rows, cols, S(0));
    f.b.assign(rows, S(0));
    for (std::size_t i = 0; i < rows; ++i) {
        S rowsum(0);
        for (std::size_t k = 0; k < f.nonneg.size(); ++k) {
            f.a(i, k) = a(i, f.nonneg[k]);
            rowsum += a(i, f.nonneg[k]);
        }
        for (std::size_t k = 0; k < f.free_vars.size(); ++k) {
            f.a(i, f.nonneg.size() + 2 * k) = a(i, f.free_vars[k]);
            f.a(i, f.nonneg.size() + 2 * k + 1) = -a(i, f.free_vars[k]);
        }
        f.a(i, f.s_col) = -rowsum;
        f.b[i] = b[i] - rowsum;
    }
    f.c.assign(cols, S(0));
    f.c[f.s_col] = S(-1);
    return f;
}

} // namespace

SimplexResult<Int> solve_rational_standard_form(const RatMatrix& a, const RatVector& b,
                                                const RatVector& c, LpStatus& status) {
    const std::size_t rows = a.rows(), cols = a.cols();
    // scale each row to integers; scale objective likewise
    IntMatrix ai(rows, cols);
    std::vector<Int> bi(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        Int l(denominator(b[i]));
        for (std::size_t j = 0; j < cols; ++j) l = lcm(l, denominator(a(i, j)));
        for (std::size_t j = 0; j < cols; ++j)
            ai(i, j) = numerator(a(i, j)) * (l / denominator(a(i, j)));
        bi[i] = numerator(b[i]) * (l / denominator(b[i]));
    }
    Int cl(1);
    for (std::size_t j = 0; j < cols; ++j) cl = lcm(cl, denominator(c[j]));
    std::vector<Int> ci(cols);
    for (std::size_t j = 0; j < cols; ++j) ci[j] = numerator(c[j]) * (cl / denominator(c[j]));

    // int128 fast path, arbitrary-precision retry on overflow
    try {
        Matrix<CheckedInt> ac(rows, cols);
        std::vector<CheckedInt> bc(rows), cc(cols);
        for (std::size_t i = 0; i < rows; ++i) {
            bc[i] = to_checked(bi[i]);
            for (std::size_t j = 0; j < cols; ++j) ac(i, j) = to_checked(ai(i, j));
        }
        for (std::size_t j = 0; j < cols; ++j) cc[j] = to_checked(ci[j]);
        SimplexResult<CheckedInt> rc = solve_lp(std::move(ac), std::move(bc), std::move(cc), CheckedRingOps{});
        status = rc.status;
        SimplexResult<Int> r;
        r.status = rc.status;
        r.den = to_int(rc.den);
        r.objective_num = to_int(rc.objective_num);
        r.solution_num.reserve(rc.solution_num.size());
        for (const auto& v : rc.solution_num) r.solution_num.push_back(to_int(v));
        return r;
    } catch (const ArithmeticOverflow&) {
        SimplexResult<Int> r = solve_lp(Matrix<Int>(ai), std::vector<Int>(bi), std::vector<Int>(ci), IntRingOps{});
        status = r.status;
        return r;
    }
}

RatLpOutcome lp_max_slack(const RatMatrix& a, const RatVector& b,
                          const std::vector<std::size_t>& nonneg_vars) {
    SlackForm<Rational> f = build_slack_form(a, b, nonneg_vars);
    LpStatus status;
    SimplexResult<Int> r = solve_rational_standard_form(f.a, f.b, f.c, status);
    RatLpOutcome out;
    if (status == LpStatus::Infeasible) return out;
    if (status == LpStatus::Unbounded) throw std::logic_error("lp_max_slack: capped objective unbounded");
    out.feasible = true;
    Rational s(r.solution_num[f.s_col], r.den);
    Rational t = 1 - s;
    out.optimal_slack = t;
    out.witness.assign(a.cols(), Rational(0));
    for (std::size_t k = 0; k < f.nonneg.size(); ++k)
        out.witness[f.nonneg[k]] = Rational(r.solution_num[k], r.den) + t;
    for (std::size_t k = 0; k < f.free_vars.size(); ++k)
        out.witness[f.free_vars[k]] =
            Rational(r.solution_num[f.nonneg.size() + 2 * k], r.den) -
            Rational(r.solution_num[f.nonneg.size() + 2 * k + 1], r.den);
    return out;
}

LpOutcome lp_max_slack(const SymMatrix& a, const std::vector<SymbolicReal>& b,
                       const std::vector<std::size_t>& nonneg_vars, const GeneratorTable& table) {
    // rational data runs on the integer fast path
    bool rational = true;
    for (std::size_t i = 0; i < a.rows() && rational; ++i)
        for (std::size_t j = 0; j < a.cols() && rational; ++j)
            if (!a(i, j).is_rational()) rational = false;
    for (std::size_t i = 0; i < b.size() && rational; ++i)
        if (!b[i].is_rational()) rational = false;

    LpOutcome out;
    if (rational) {
        RatMatrix ar(a.rows(), a.cols());
        RatVector br(b.size());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) ar(i, j) = a(i, j).rational_value();
        for (std::size_t i = 0; i < b.size(); ++i) br[i] = b[i].rational_value();
        RatLpOutcome r = lp_max_slack(ar, br, nonneg_vars);
        out.feasible = r.feasible;
        if (r.feasible) {
            out.optimal_slack = SymFrac(SymbolicReal(r.optimal_slack));
            out.witness.reserve(r.witness.size());
            for (const auto& w : r.witness) out.witness.emplace_back(SymbolicReal(w));
        }
        return out;
    }

    SlackForm<SymbolicReal> f = build_slack_form(a, b, nonneg_vars);
    SimplexResult<SymbolicReal> r =
        solve_lp(std::move(f.a), std::vector<SymbolicReal>(f.b), std::vector<SymbolicReal>(f.c),
                 SymRingOps{&table});
    if (r.status == LpStatus::Infeasible) return out;
    if (r.status == LpStatus::Unbounded) throw std::logic_error("lp_max_slack: capped objective unbounded");
    out.feasible = true;
    SymFrac s(r.solution_num[f.s_col], r.den);
    SymFrac t = SymFrac(SymbolicReal(Rational(1))) - s;
    out.optimal_slack = t;
    out.witness.assign(a.cols(), SymFrac());
    for (std::size_t k = 0; k < f.nonneg.size(); ++k)
        out.witness[f.nonneg[k]] = SymFrac(r.solution_num[k], r.den) + t;
    for (std::size_t k = 0; k < f.free_vars.size(); ++k)
        out.witness[f.free_vars[k]] = SymFrac(r.solution_num[f.nonneg.size() + 2 * k], r.den) -
                                      SymFrac(r.solution_num[f.nonneg.size() + 2 * k + 1], r.den);
    return out;
}

} // namespace lvmb
