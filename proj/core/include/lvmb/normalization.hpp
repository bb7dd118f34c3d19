#ifndef LVMB_NORMALIZATION_HPP
#define LVMB_NORMALIZATION_HPP

#include <optional>

#include "lvmb/config.hpp"
#include "lvmb/intlinalg.hpp"
#include "lvmb/linalg.hpp"

namespace lvmb {

/// 2m x m complex matrix stored as real and imaginary parts.
struct ComplexMatrix {
    SymMatrix re;
    SymMatrix im;
};

/// Witness that the datum is carried to integer weights by a real affine
/// automorphism: (Re l_i, Im l_i) = lambda_i * M + b exactly, with
/// (Re A | Im A) = M column-split.
struct Normalization {
    IntMatrix lambda;          // (n+1) x 2m integer weights
    SymMatrix m_matrix;        // 2m x 2m, invertible
    std::vector<SymbolicReal> b; // 2m translation
    ComplexMatrix a;           // 2m x m
};

/// The matrix A with Re A = [I_m; 0], Im A = [0; I_m], so (Re A | Im A) is
/// the identity and l_i = (lambda_i cols 0..m) + i (lambda_i cols m..2m).
ComplexMatrix canonical_subgroup_matrix(int m);

/// Decides condition (K) constructively. Present iff the affine coordinates
/// of every point with respect to a maximal affinely independent subset are
/// rational; the witness maps that subset to scaled integer basis points,
/// clears denominators, and reduces the result (column contents divided
/// out, integer part of the translation folded into lambda). Integer data
/// short-circuits to lambda = (Re, Im), M = I, b = 0.
std::optional<Normalization> check_condition_K(const Configuration& config);

/// Exact re-check of a normalization against a datum.
bool verify_normalization(const Configuration& config, const Normalization& norm);

/// Closedness (hence cocompactness) of the subgroup with Lie algebra
/// spanned by the columns of A: det(Re A | Im A) != 0, exact sign test.
/// Pre: A has full column rank m over C.
bool cocompact_closed(const ComplexMatrix& a, const GeneratorTable& table);

/// l_i = lambda_i * A as points (Re l_i, Im l_i) of R^{2m}.
std::vector<Point2m> restrict_action(const IntMatrix& lambda, const ComplexMatrix& a,
                                     const GeneratorTable& table);

} // namespace lvmb

#endif
