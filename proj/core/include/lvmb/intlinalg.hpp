#ifndef LVMB_INTLINALG_HPP
#define LVMB_INTLINALG_HPP

#include "lvmb/matrix.hpp"

namespace lvmb {

struct SmithDecomposition {
    IntMatrix u; ///< unimodular, rows x rows
    IntMatrix s; ///< diagonal, d_i | d_{i+1}, d_i >= 0
    IntMatrix v; ///< unimodular, cols x cols
};

/// U * m * V = S with S in Smith normal form. Pivot selection by minimal
/// absolute value.
SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Row-style Hermite normal form H = U * m (U unimodular): row echelon,
/// positive pivots, entries above each pivot reduced into [0, pivot).
/// Zero rows sink to the bottom. Returns H.
IntMatrix hermite_normal_form(const IntMatrix& m);

/// Basis (rows) of the saturated lattice { x in Z^r : x^T m = 0 } for an
/// r x c matrix, i.e. the full left kernel. The basis is put into Hermite
/// normal form so results are reproducible. Row count = r - rank(m).
IntMatrix saturated_kernel(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

Int determinant(const IntMatrix& m);

/// gcd of all entries (non-negative); 0 for the zero vector.
Int content(const std::vector<Int>& v);

} // namespace lvmb

#endif
