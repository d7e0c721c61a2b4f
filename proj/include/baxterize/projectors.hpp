#pragma once

#include <string>
#include <vector>

#include "baxterize/family.hpp"
#include "baxterize/matrix.hpp"

namespace baxterize {

/// Ordered list of mutually orthogonal idempotents summing to the identity,
/// with labels and integer traces.
struct ProjectorBasis {
  std::size_t matrix_dim = 0;  // dimension of each projector
  std::size_t base_dim = 0;    // N when matrix_dim == N*N, else 0
  std::vector<ComplexMatrix> projectors;
  std::vector<std::string> labels;
  std::vector<int> traces;

  std::size_t size() const { return projectors.size(); }
  int index_of(const std::string &label) const;

  /// Checks idempotency, mutual orthogonality, completeness within `tol`,
  /// and that every trace rounds to an integer within 1e-8; throws
  /// std::runtime_error on violation.
  void validate(double tol = default_tolerance) const;

  ComplexMatrix sum_of(const std::vector<std::string> &which) const;
};

ProjectorBasis make_basis(std::size_t matrix_dim, std::size_t base_dim,
                          std::vector<ComplexMatrix> projectors,
                          std::vector<std::string> labels);

/// Braid matrix together with its spectral basis.
struct BraidMatrixBasis {
  ComplexMatrix rhat;
  ProjectorBasis basis;
};

/// Deformed two-projector family: builds the n^2 x n^2 braid matrix from the
/// standard normalization and splits it on the eigenvalues {1, -q^-2}.
/// Basis order is [P-, P+].
BraidMatrixBasis gl_standard(std::size_t n, double q);

/// Standard orthogonal/symplectic three-projector bases, order [P0, P-, P+].
/// Reconstructed from the cataloged row-orthogonal diagonalizers; supported
/// for (N=3, eps=+1), (N=4, eps=+1), (N=4, eps=-1).
ProjectorBasis standard_so_sp_basis(std::size_t n, int eps, double q);

/// Two-projector singlet family [P0, P1]: P0 is the rank-1 q-singlet, P1 its
/// complement.  Supported for (eps=+1, N>=3) and (eps=-1, even N>=4).
ProjectorBasis exotic_basis(std::size_t n, int eps, double q);

/// The 4x4 family with real braid matrix and complex conjugate projectors,
/// order [P+, P-].
BraidMatrixBasis s03_basis();

/// The 4x4 three-projector family with antidiagonal braid matrix, order
/// [P0, P+, P-].
BraidMatrixBasis s14_basis(double q);

/// Affine vector-representation basis, order [P0, P+, P-]; P(+-) carry the
/// explicit q-dependence.
ProjectorBasis affine_basis(double q);

/// The symmetric constant-element basis adequate for the eight-vertex matrix,
/// order [1(+), 1(-), 2(+), 2(-)].
ProjectorBasis vertex_basis();

/// Six-vertex subset of vertex_basis: P0 = 1(+) + 1(-), P+- = 2(+-);
/// order [P0, P+, P-].
ProjectorBasis six_vertex_basis();

/// Nested sequence for any total dimension n >= 2: pair projectors
/// 2 P_i(+-) = E_ii + E_i'i' +- E_ii' +- E_i'i (i' = n+1-i, i = 1..floor(n/2)),
/// plus the central unit for odd n.  Order [1(+), 1(-), ..., mid].
ProjectorBasis nested_basis(std::size_t n);

/// Alternative 9x9 constant-element set whose pair supports are permuted
/// blockwise rather than nested; no braid solutions are attached to it.
ProjectorBasis alternative_nested_basis_9();

/// d = (1 + eps [N - eps])^-1 with the symmetric q-number [x].
double exotic_d(std::size_t n, int eps, double q);

/// eta > 0 with tanh(eta) = sqrt(1 - 4 d^2).
double eta(std::size_t n, int eps, double q);

}  // namespace baxterize
