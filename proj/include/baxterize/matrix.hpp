#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace baxterize {

using Complex = std::complex<double>;

/// Default tolerance for residual checks; every comparison in the library is
/// mediated by an explicit tolerance, this is only the conventional default.
inline constexpr double default_tolerance = 1e-10;

/// Cap on matrix dimension (guards Kronecker blow-up; products are O(dim^3)).
inline constexpr std::size_t max_matrix_dim = 4096;

/// Dense square complex matrix, row-major storage.
///
/// Values are immutable by convention once built by the constructors in this
/// library; the raw container is mutable to keep assembly code simple.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::initializer_list<Complex> entries);

  static ComplexMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }

  Complex &operator()(std::size_t row, std::size_t col) {
    return a_[row * dim_ + col];
  }
  const Complex &operator()(std::size_t row, std::size_t col) const {
    return a_[row * dim_ + col];
  }

  std::span<const Complex> data() const { return a_; }

  ComplexMatrix operator+(const ComplexMatrix &other) const;
  ComplexMatrix operator-(const ComplexMatrix &other) const;
  ComplexMatrix operator*(const ComplexMatrix &other) const;
  ComplexMatrix &operator+=(const ComplexMatrix &other);
  ComplexMatrix &operator-=(const ComplexMatrix &other);
  ComplexMatrix operator*(Complex scalar) const;
  friend ComplexMatrix operator*(Complex scalar, const ComplexMatrix &m) {
    return m * scalar;
  }

  Complex trace() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate_transpose() const;

  /// Entrywise max norm.  All verdicts in this library are max-norm residuals.
  double max_norm() const;

  /// Gauss-Jordan inverse with partial pivoting; throws std::domain_error if
  /// the pivot falls below `pivot_tol`.
  ComplexMatrix inverse(double pivot_tol = 1e-13) const;

  bool approx_equal(const ComplexMatrix &other, double tol) const;

  /// True when no entry is NaN or infinite.
  bool finite() const;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> a_;
};

/// Matrix with a single unit entry at (i, j), indices 1-based.
ComplexMatrix unit_matrix(std::size_t n, std::size_t i, std::size_t j);

/// Kronecker product with the row-major index map (a,b) -> (a-1)*dim(B)+b.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// The N^2 x N^2 permutation matrix sum_ij E_ij (x) E_ji; symmetric, involutive.
ComplexMatrix permutation_matrix(std::size_t n);

/// Spectral projectors of `rhat` for the given pairwise distinct eigenvalues:
/// P_i = prod_{j != i} (rhat - k_j I)/(k_i - k_j).
///
/// Requires the minimal polynomial prod_i (rhat - k_i I) to vanish within
/// `tol`; throws std::invalid_argument otherwise (and on repeated eigenvalues).
std::vector<ComplexMatrix> spectral_projectors(const ComplexMatrix &rhat,
                                               std::span<const Complex> eigenvalues,
                                               double tol = default_tolerance);

}  // namespace baxterize
