#ifndef LVMB_COMBINATORICS_HPP
#define LVMB_COMBINATORICS_HPP

#include <optional>
#include <utility>

#include "lvmb/config.hpp"

namespace lvmb {

struct CompResult {
    bool holds = false;
    /// First failing (alpha, i): no j in E_alpha has (E_alpha - {j}) u {i} in E.
    std::optional<std::pair<std::size_t, int>> counterexample;
};

/// Replacement-exchange condition: for every E_alpha and every i in {0..n}
/// some j in E_alpha has (E_alpha - {j}) u {i} in E. When i lies in E_alpha
/// the condition holds through j = i.
CompResult check_comp(const Configuration& config);

/// The intersection of all sets; its cardinality is k'.
std::vector<int> essential_intersection(const IndexFamily& family);

/// Minimum cardinality of a subset of {0..n} meeting every set: the minimal
/// codimension d of the removed coordinate arrangement. Exhaustive search by
/// increasing cardinality; always >= 1, and = 1 iff the essential
/// intersection is nonempty.
int min_transversal(const IndexFamily& family, int n);

/// Restriction to the surviving indices (a standard-submanifold datum):
/// points reindexed order-preserving, the family keeps the sets contained in
/// `survivors`, n' = |survivors| - 1. Absent when no datum arises (empty
/// restricted family or n' < 2m). Not revalidated against (sep)/(comp);
/// callers re-check.
std::optional<Configuration> restrict(const Configuration& config, const std::vector<int>& survivors);

/// One restriction per set E_alpha (to the set itself): n' = 2m tori.
std::vector<std::pair<std::vector<int>, Configuration>> minimal_standard_submanifolds(
    const Configuration& config);

} // namespace lvmb

#endif
