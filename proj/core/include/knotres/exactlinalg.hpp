#pragma once

#include <vector>

#include "knotres/matrix.hpp"
#include "knotres/polynomial.hpp"

namespace knotres {
namespace linalg {

// Exact rank via fraction-free row reduction.
std::size_t rank(const RationalMatrix& m);

// Exact determinant (Bareiss fraction-free elimination). Throws NonSquare.
Rational det(const RationalMatrix& m);

// Exact inverse. Throws Singular when det == 0, NonSquare otherwise.
RationalMatrix inverse(const RationalMatrix& m);

// Moore-Penrose pseudoinverse of a square matrix, exact.
//
// Fast path for balanced Laplacians (M*1 = 0 and 1^T*M = 0, rank n-1):
//   M+ = (M + J/n)^{-1} - J/n.
// General path: rank factorization M = B*C with
//   M+ = C^T (C C^T)^{-1} (B^T B)^{-1} B^T.
// All four Penrose conditions are re-verified exactly after computation;
// a violation throws Error("PenroseViolation") and indicates a bug.
RationalMatrix pseudoinverse(const RationalMatrix& m);

// Characteristic polynomial chi(x) = det(M - x*I), computed exactly via
// Faddeev-LeVerrier. Note the sign convention: leading coefficient is
// (-1)^n for an n x n matrix.
Polynomial char_poly(const RationalMatrix& m);

// Schur complement onto `boundary`: M_bb - M_bi * M_ii^{-1} * M_ib where i is
// the complement of the boundary index set. Throws SingularInterior when the
// interior block is singular, IndexOutOfRange for bad indices.
RationalMatrix schur_complement(const RationalMatrix& m,
                                const std::vector<std::size_t>& boundary);

// True iff all four Penrose conditions hold exactly for (m, pinv).
bool penrose_conditions_hold(const RationalMatrix& m,
                             const RationalMatrix& pinv);

}  // namespace linalg
}  // namespace knotres
