#pragma once

// Internal catalog of the explicit row-orthogonal diagonalizers.  Shared by
// the projector constructors (which reconstruct the standard orthogonal and
// symplectic bases from these matrices) and the public diagonalizer module.

#include "baxterize/matrix.hpp"

namespace baxterize::detail {

ComplexMatrix m_gl2(double q);
ComplexMatrix m_gl3(double q);
ComplexMatrix m_so3(double q);
ComplexMatrix m_so4(double q);
ComplexMatrix m_sp4(double q);
ComplexMatrix m_affine(double q);
ComplexMatrix m_s03();            // unitary; rows orthogonal under the conjugate form
ComplexMatrix m_nested(std::size_t n);  // self-inverse; n = 4 is the vertex case

/// M^-1 = M^T diag(c_j), c_j = (sum_k M_jk^2)^-1, valid when the rows of M
/// are mutually orthogonal under the transpose bilinear form.  Throws
/// std::domain_error when a row norm vanishes.
ComplexMatrix orthogonal_row_inverse(const ComplexMatrix &m,
                                     double tol = 1e-12);

}  // namespace baxterize::detail
