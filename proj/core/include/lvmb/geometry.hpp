#ifndef LVMB_GEOMETRY_HPP
#define LVMB_GEOMETRY_HPP

#include <optional>

#include "lvmb/config.hpp"
#include "lvmb/lp.hpp"

namespace lvmb {

/// Simplex P_alpha: the convex hull of the points l_i, i in E_alpha.
struct SimplexSpec {
    std::vector<int> vertex_indices; // strictly increasing
    std::vector<Point2m> vertices;
};

SimplexSpec simplex_of(const Configuration& config, std::size_t alpha);

/// Dimension of the affine hull: rank of the difference matrix over the
/// symbolic field.
std::size_t affine_dimension(const std::vector<Point2m>& points, const GeneratorTable& table);

/// A common relative-interior point of all given simplices, realized as
/// strictly positive convex combinations through slack maximization.
struct RelintResult {
    bool found = false;              // strictly feasible: t* > 0
    SymFrac slack;                   // t* (meaningful when the LP is feasible)
    bool lp_feasible = false;
    std::vector<SymFrac> point;      // the common point x, size 2m
    std::vector<std::vector<SymFrac>> coefficients; // per simplex, strictly positive
};

RelintResult relint_common_point(const std::vector<SimplexSpec>& simplices,
                                 const GeneratorTable& table);

/// Exact re-verification of a relint witness: coefficients strictly
/// positive, sums exactly one, combinations all equal to the point.
bool verify_relint(const std::vector<SimplexSpec>& simplices, const RelintResult& result,
                   const GeneratorTable& table);

struct SepResult {
    bool holds = false;
    /// Simplex with empty interior (affine dimension < 2m), if any.
    std::optional<std::size_t> degenerate_simplex;
    /// First pair whose interiors miss each other.
    std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
};

/// Pairwise interior intersection of the simplices P_alpha, interiors taken
/// ambient in R^{2m}: degenerate simplices fail.
SepResult check_sep(const Configuration& config);

struct LvmResult {
    bool holds = false;
    std::optional<std::size_t> degenerate_simplex;
    RelintResult witness; // common interior point of all simplices when holds
};

/// All P_alpha full-dimensional with one common interior point.
LvmResult check_lvm(const Configuration& config);

} // namespace lvmb

#endif
