#ifndef LVMB_CONFIG_HPP
#define LVMB_CONFIG_HPP

#include <string>
#include <vector>

#include "lvmb/generators.hpp"
#include "lvmb/symbolic.hpp"

namespace lvmb {

/// A point of R^{2m}: the vector (Re l_i, Im l_i).
using Point2m = std::vector<SymbolicReal>;

/// Family of index sets E_alpha, each of cardinality 2m+1, each sorted
/// strictly increasing. Family order is preserved from input.
struct IndexFamily {
    std::vector<std::vector<int>> sets;
};

/// The datum (L, E, m, n): n+1 points of R^{2m} and an index family.
struct Configuration {
    int m = 1;
    int n = 2;
    std::vector<Point2m> points; // L, size n+1
    IndexFamily family;          // E
    GeneratorTable table;
};

/// Structural validation; the empty list means all type invariants hold.
/// Violations are data, not errors.
std::vector<std::string> validate(const Configuration& config);

bool points_equal(const Point2m& a, const Point2m& b);

/// Pairwise distinctness of the points l_i (exact test).
bool distinct_points(const Configuration& config);

/// All coordinates rational (no proper generator appears).
bool is_rational_configuration(const Configuration& config);

} // namespace lvmb

#endif
